#include "polyfan/ks.hpp"

#include <atomic>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace polyfan::ks {

namespace {

using ordered_json = nlohmann::ordered_json;

// Replaces U+2212 (minus sign) with ASCII hyphen-minus.
std::string normalize_minus(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      out.push_back('-');
      i += 3;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> toks;
  std::istringstream is(s);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

long long parse_int(const std::string& tok, long line) {
  std::string_view sv = tok;
  if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (ec != std::errc() || ptr != sv.data() + sv.size())
    throw ParseError("not an integer: '" + tok + "'", line);
  return v;
}

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n\f\v") == std::string::npos;
}

}  // namespace

std::optional<std::string> PalpReader::next_nonblank_line() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (line_no_ == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0)
      line.erase(0, 3);  // UTF-8 byte order mark
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!is_blank(line)) return normalize_minus(line);
  }
  return std::nullopt;
}

std::optional<PolytopeRecord> PalpReader::next() {
  auto header = next_nonblank_line();
  if (!header) return std::nullopt;
  const long header_line = line_no_;

  std::vector<std::string> toks = tokenize(*header);
  if (toks.size() < 2)
    throw ParseError("header needs two dimension tokens", header_line);
  long long d1 = parse_int(toks[0], header_line);
  long long d2 = parse_int(toks[1], header_line);
  if (d1 <= 0 || d2 <= 0)
    throw ParseError("matrix dimensions must be positive", header_line);
  if (d1 != 3 && d2 != 3) throw ParseError("not a 3-polytope", header_line);

  std::vector<std::vector<long long>> rows;
  rows.reserve(static_cast<size_t>(d1));
  for (long long r = 0; r < d1; ++r) {
    auto line = next_nonblank_line();
    if (!line)
      throw ParseError("unexpected end of input inside a matrix block", line_no_);
    std::vector<std::string> row_toks = tokenize(*line);
    if (static_cast<long long>(row_toks.size()) != d2)
      throw ParseError("expected " + std::to_string(d2) + " integers, got " +
                           std::to_string(row_toks.size()),
                       line_no_);
    std::vector<long long> row;
    row.reserve(row_toks.size());
    for (const std::string& t : row_toks) row.push_back(parse_int(t, line_no_));
    rows.push_back(std::move(row));
  }

  auto column_vertices = [&] {
    std::vector<Vec3> vs(static_cast<size_t>(d2));
    for (long long j = 0; j < d2; ++j)
      for (int i = 0; i < 3; ++i)
        vs[static_cast<size_t>(j)][i] = Int(static_cast<long>(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    return vs;
  };
  auto row_vertices = [&] {
    std::vector<Vec3> vs(static_cast<size_t>(d1));
    for (long long i = 0; i < d1; ++i)
      for (int j = 0; j < 3; ++j)
        vs[static_cast<size_t>(i)][j] = Int(static_cast<long>(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    return vs;
  };

  std::vector<Vec3> vertices;
  if (d1 == 3 && d2 == 3) {
    // Ambiguous orientation: prefer columns, fall back to rows.
    vertices = column_vertices();
    if (!spans_3space(vertices)) {
      vertices = row_vertices();
      if (!spans_3space(vertices))
        throw ParseError(
            "ambiguous 3x3 block is not full-dimensional under either orientation",
            header_line);
    }
  } else if (d1 == 3) {
    vertices = column_vertices();
  } else {
    vertices = row_vertices();
  }

  PolytopeRecord rec;
  rec.index = count_++;
  rec.vertices = std::move(vertices);
  rec.source_header = *header;
  return rec;
}

std::vector<PolytopeRecord> parse_palp(std::istream& in) {
  PalpReader reader(in);
  std::vector<PolytopeRecord> out;
  while (auto rec = reader.next()) out.push_back(std::move(*rec));
  return out;
}

std::vector<Vec3> parse_json_vertices(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_array()) throw ParseError("expected an array of vertices", 0);
  std::vector<Vec3> vs;
  vs.reserve(doc.size());
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 3)
      throw ParseError("each vertex must be an array of 3 integers", 0);
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
      if (!item[static_cast<size_t>(i)].is_number_integer())
        throw ParseError("vertex coordinates must be integers", 0);
      v[i] = Int(static_cast<long>(item[static_cast<size_t>(i)].get<long long>()));
    }
    vs.push_back(std::move(v));
  }
  return vs;
}

void write_palp(const std::vector<Vec3>& vertices, const std::string& comment,
                std::ostream& out) {
  out << 3 << ' ' << vertices.size();
  if (!comment.empty()) out << ' ' << comment;
  out << '\n';
  for (int i = 0; i < 3; ++i) {
    for (size_t j = 0; j < vertices.size(); ++j) {
      if (j) out << ' ';
      out << vertices[j][i];
    }
    out << '\n';
  }
}

std::string verdict_name(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::NotSmoothable:
      return "not_smoothable";
    case VerdictTag::NoObstructionFound:
      return "no_obstruction_found";
    case VerdictTag::AlreadySmooth:
      return "already_smooth";
  }
  return "unknown";
}

AnalysisRecord analyze_vertices(long index, const std::vector<Vec3>& vertices) {
  AnalysisRecord rec;
  rec.index = index;
  LatticePolytope p = convex_hull(vertices);
  rec.vertex_count = static_cast<long>(p.vertices().size());
  rec.facet_count = static_cast<long>(p.facets().size());
  rec.reflexive = is_reflexive(p);
  for (const Facet& f : p.facets()) {
    switch (classify_facet(p, f).tag) {
      case FacetTag::Smooth:
        ++rec.smooth_facets;
        break;
      case FacetTag::AnTriangle:
        ++rec.an_triangle_facets;
        break;
      case FacetTag::Other:
        ++rec.other_facets;
        break;
    }
  }
  for (const AdjacentAnPair& pr : find_adjacent_pairs(p)) {
    NormalForm nf = normal_form(pr);
    ClassGroup cg = class_group(nf);
    ExtProfile ep = ext_profile(pr.n, pr.pairing);
    PairRecord prec;
    prec.n = pr.n;
    prec.pairing = to_longlong(pr.pairing);
    for (const Int& d : ep.degrees) prec.ext_degrees.push_back(to_longlong(d));
    prec.free_rank = cg.free_rank;
    for (const Int& t : cg.torsion) prec.torsion.push_back(to_longlong(t));
    rec.pairs.push_back(std::move(prec));
  }
  rec.verdict = verdict(p).tag;
  return rec;
}

AnalysisRecord analyze_record(const PolytopeRecord& rec) {
  try {
    return analyze_vertices(rec.index, rec.vertices);
  } catch (const std::exception& e) {
    AnalysisRecord r;
    r.index = rec.index;
    r.ok = false;
    r.error = e.what();
    return r;
  }
}

ScanReport scan(const std::vector<PolytopeRecord>& records, unsigned parallelism) {
  if (parallelism == 0) parallelism = 1;
  ScanReport report;
  report.records.resize(records.size());

  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= records.size()) return;
      report.records[i] = analyze_record(records[i]);
    }
  };
  unsigned threads = parallelism;
  if (!records.empty())
    threads = static_cast<unsigned>(
        std::min<size_t>(parallelism, records.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  report.total = static_cast<long>(records.size());
  for (const AnalysisRecord& r : report.records) {
    if (!r.ok) continue;
    if (r.reflexive) ++report.reflexive_count;
    if (r.verdict == VerdictTag::NotSmoothable) ++report.not_smoothable_count;
  }
  return report;
}

namespace {

ordered_json record_json(const AnalysisRecord& r) {
  ordered_json j;
  j["index"] = r.index;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["error"] = r.error;
    return j;
  }
  j["vertex_count"] = r.vertex_count;
  j["facet_count"] = r.facet_count;
  j["reflexive"] = r.reflexive;
  ordered_json classes;
  classes["smooth"] = r.smooth_facets;
  classes["an_triangle"] = r.an_triangle_facets;
  classes["other"] = r.other_facets;
  j["facet_classes"] = std::move(classes);
  ordered_json pairs = ordered_json::array();
  for (const PairRecord& p : r.pairs) {
    ordered_json jp;
    jp["n"] = p.n;
    jp["pairing"] = p.pairing;
    jp["ext_degrees"] = p.ext_degrees;
    ordered_json cg;
    cg["free_rank"] = p.free_rank;
    cg["torsion"] = p.torsion;
    jp["class_group"] = std::move(cg);
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(pairs);
  j["verdict"] = verdict_name(r.verdict);
  return j;
}

}  // namespace

void write_records(const std::vector<AnalysisRecord>& records, std::ostream& out) {
  for (const AnalysisRecord& r : records) out << record_json(r).dump() << '\n';
}

void write_report(const ScanReport& report, std::ostream& out) {
  write_records(report.records, out);
  ordered_json s;
  s["total"] = report.total;
  s["reflexive_count"] = report.reflexive_count;
  s["not_smoothable_count"] = report.not_smoothable_count;
  out << s.dump() << '\n';
  if (!out) throw std::runtime_error("write failed");
}

std::string summary_line(const ScanReport& report) {
  return "total=" + std::to_string(report.total) +
         ", reflexive=" + std::to_string(report.reflexive_count) +
         ", not_smoothable=" + std::to_string(report.not_smoothable_count);
}

namespace {

std::string join_ll(const std::vector<long long>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string class_group_str(const PairRecord& p) {
  std::string s = "Z";
  for (long long t : p.torsion) s += " + Z/" + std::to_string(t);
  for (int i = 1; i < p.free_rank; ++i) s = "Z + " + s;
  return s;
}

}  // namespace

void render_analysis_table(const AnalysisRecord& rec, std::ostream& out) {
  out << "polytope " << rec.index;
  if (!rec.ok) {
    out << ": error: " << rec.error << '\n';
    return;
  }
  out << " (" << rec.vertex_count << " vertices, " << rec.facet_count
      << " facets)\n";
  out << "  reflexive: " << (rec.reflexive ? "yes" : "no") << '\n';
  out << "  facet classes: smooth=" << rec.smooth_facets
      << " an_triangle=" << rec.an_triangle_facets
      << " other=" << rec.other_facets << '\n';
  for (size_t i = 0; i < rec.pairs.size(); ++i) {
    const PairRecord& p = rec.pairs[i];
    out << "  pair " << i << ": A" << p.n << "-pair, pairing " << p.pairing
        << ", " << (p.pairing == 0 ? "almost-flat" : "not almost-flat")
        << ", ext degrees " << join_ll(p.ext_degrees) << ", class group "
        << class_group_str(p) << '\n';
  }
  out << "  verdict: ";
  switch (rec.verdict) {
    case VerdictTag::NotSmoothable:
      out << "NOT SMOOTHABLE";
      break;
    case VerdictTag::NoObstructionFound:
      out << "NO OBSTRUCTION FOUND";
      break;
    case VerdictTag::AlreadySmooth:
      out << "ALREADY SMOOTH";
      break;
  }
  out << '\n';
}

void render_scan_table(const ScanReport& report, std::ostream& out) {
  for (const AnalysisRecord& r : report.records) {
    out << '#' << r.index;
    if (!r.ok) {
      out << " error: " << r.error << '\n';
      continue;
    }
    out << " vertices=" << r.vertex_count << " facets=" << r.facet_count
        << " reflexive=" << (r.reflexive ? "yes" : "no")
        << " pairs=" << r.pairs.size() << " verdict=" << verdict_name(r.verdict)
        << '\n';
  }
  out << summary_line(report) << '\n';
}

}  // namespace polyfan::ks
