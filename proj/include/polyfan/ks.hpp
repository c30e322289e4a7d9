#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polyfan/singularity.hpp"

namespace polyfan::ks {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, long line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

struct PolytopeRecord {
  long index = 0;  // 0-based position in the source stream
  std::vector<Vec3> vertices;
  std::string source_header;
};

/// Streaming reader for PALP-style vertex-matrix blocks.
///
/// Each block is a header line whose first two whitespace-separated tokens
/// are the matrix dimensions (the rest of the line is free-form comment),
/// followed by that many rows of integers. A "3 k" block lists vertices as
/// columns, a "k 3" block lists them as rows. For the ambiguous "3 3" header
/// the column reading is tried first and the row reading second; whichever
/// gives a full-dimensional point set wins. Blank lines are skipped. Unicode
/// minus signs are normalized during tokenization.
class PalpReader {
 public:
  explicit PalpReader(std::istream& in) : in_(in) {}

  // Next record in stream order, or nullopt at end of input.
  // Throws ParseError (with a line number) on malformed input.
  std::optional<PolytopeRecord> next();

 private:
  std::optional<std::string> next_nonblank_line();

  std::istream& in_;
  long line_no_ = 0;
  long count_ = 0;
};

std::vector<PolytopeRecord> parse_palp(std::istream& in);

// A JSON document holding one polytope: an array of 3-integer arrays.
std::vector<Vec3> parse_json_vertices(std::istream& in);

// Writes one PALP block ("3 k" layout, vertices as columns).
void write_palp(const std::vector<Vec3>& vertices, const std::string& comment,
                std::ostream& out);

struct PairRecord {
  int n = 0;
  long long pairing = 0;
  std::vector<long long> ext_degrees;
  int free_rank = 0;
  std::vector<long long> torsion;
};

struct AnalysisRecord {
  long index = 0;
  bool ok = true;
  std::string error;
  long vertex_count = 0;
  long facet_count = 0;
  bool reflexive = false;
  long smooth_facets = 0;
  long an_triangle_facets = 0;
  long other_facets = 0;
  std::vector<PairRecord> pairs;
  VerdictTag verdict = VerdictTag::NoObstructionFound;
};

struct ScanReport {
  long total = 0;
  long reflexive_count = 0;
  long not_smoothable_count = 0;
  std::vector<AnalysisRecord> records;  // ordered by index
};

std::string verdict_name(VerdictTag tag);

// Full analysis of one vertex list; throws on degenerate input.
AnalysisRecord analyze_vertices(long index, const std::vector<Vec3>& vertices);

// Same, but captures failures in the record instead of throwing.
AnalysisRecord analyze_record(const PolytopeRecord& rec);

// Analyzes every record, data-parallel over `parallelism` threads, merged in
// index order. The report is deterministic and independent of parallelism.
// Per-record failures are captured in the records, never abort the scan.
ScanReport scan(const std::vector<PolytopeRecord>& records, unsigned parallelism);

// One JSON object per line; key order fixed; byte-stable across runs.
void write_records(const std::vector<AnalysisRecord>& records, std::ostream& out);

// write_records followed by one JSON summary line.
void write_report(const ScanReport& report, std::ostream& out);

std::string summary_line(const ScanReport& report);

void render_analysis_table(const AnalysisRecord& rec, std::ostream& out);
void render_scan_table(const ScanReport& report, std::ostream& out);

}  // namespace polyfan::ks
