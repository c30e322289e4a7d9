// Command-line front end: analyze single polytopes, scan PALP databases,
// print normal forms.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 invalid input or selector,
// 3 not applicable (no adjacent pairs). Verdicts never change the exit code.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "polyfan/ks.hpp"

namespace {

using namespace polyfan;

constexpr int kExitOk = 0;
constexpr int kExitIoOrParse = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNotApplicable = 3;

struct Options {
  std::string input;
  std::string format = "auto";  // palp | json | auto (by extension)
  std::string out;
  std::string emit;
  unsigned parallelism = 0;
  int pair = -1;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string effective_format(const Options& opt) {
  if (opt.format != "auto") return opt.format;
  return ends_with(opt.input, ".json") ? "json" : "palp";
}

std::vector<ks::PolytopeRecord> load_records(const Options& opt) {
  std::ifstream in(opt.input);
  if (!in) throw std::runtime_error("cannot open input file: " + opt.input);
  if (effective_format(opt) == "json") {
    ks::PolytopeRecord rec;
    rec.index = 0;
    rec.vertices = ks::parse_json_vertices(in);
    rec.source_header = opt.input;
    return {rec};
  }
  return ks::parse_palp(in);
}

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool is_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

int cmd_analyze(const Options& opt) {
  std::vector<ks::PolytopeRecord> records = load_records(opt);
  if (records.empty()) throw ks::ParseError("input contains no polytopes", 0);
  std::vector<ks::AnalysisRecord> results;
  results.reserve(records.size());
  for (const ks::PolytopeRecord& rec : records)
    results.push_back(ks::analyze_vertices(rec.index, rec.vertices));

  OutputSink sink(opt.out);
  if (opt.emit == "records") {
    ks::write_records(results, sink.stream());
  } else {
    for (const ks::AnalysisRecord& r : results)
      ks::render_analysis_table(r, sink.stream());
  }
  return kExitOk;
}

int cmd_scan(const Options& opt) {
  Options effective = opt;
  if (effective.input.empty()) {
    const char* env = std::getenv("KS_DB_PATH");
    if (!env || !*env)
      throw std::runtime_error("no input: pass --input or set KS_DB_PATH");
    effective.input = env;
  }
  std::vector<ks::PolytopeRecord> records = load_records(effective);
  unsigned parallelism = opt.parallelism
                             ? opt.parallelism
                             : std::max(1u, std::thread::hardware_concurrency());
  ks::ScanReport report = ks::scan(records, parallelism);

  OutputSink sink(opt.out);
  if (opt.emit == "table")
    ks::render_scan_table(report, sink.stream());
  else
    ks::write_report(report, sink.stream());
  // Keep stdout byte-stable when it carries the report itself.
  (sink.is_file() ? std::cout : std::cerr) << ks::summary_line(report) << '\n';
  return kExitOk;
}

int cmd_normal_form(const Options& opt) {
  std::vector<ks::PolytopeRecord> records = load_records(opt);
  if (records.empty()) throw ks::ParseError("input contains no polytopes", 0);
  LatticePolytope p = convex_hull(records.front().vertices);
  std::vector<AdjacentAnPair> pairs = find_adjacent_pairs(p);
  if (pairs.empty()) {
    std::cerr << "no adjacent A_n pairs\n";
    return kExitNotApplicable;
  }
  if (opt.pair >= static_cast<int>(pairs.size())) {
    std::cerr << "pair selector " << opt.pair << " out of range (0.."
              << pairs.size() - 1 << ")\n";
    return kExitInvalidInput;
  }

  OutputSink sink(opt.out);
  std::ostream& os = sink.stream();
  size_t lo = 0, hi = pairs.size();
  if (opt.pair >= 0) {
    lo = static_cast<size_t>(opt.pair);
    hi = lo + 1;
  }
  for (size_t k = lo; k < hi; ++k) {
    const AdjacentAnPair& pr = pairs[k];
    NormalForm nf = normal_form(pr);
    ClassGroup cg = class_group(nf);
    Vec4 ker = ray_map_kernel(nf);
    os << "pair " << k << ": facets (" << pr.facet_ids.first << ", "
       << pr.facet_ids.second << ")\n";
    os << "  n=" << nf.n << " a=" << nf.a << " b=" << nf.b << '\n';
    os << "  U =";
    for (int i = 0; i < 3; ++i) {
      os << " [" << nf.U(i, 0) << ' ' << nf.U(i, 1) << ' ' << nf.U(i, 2) << ']';
    }
    os << '\n';
    os << "  r=" << nf.r << " p=" << nf.p << " q=" << nf.q << " s=" << nf.s
       << " t=" << nf.t << '\n';
    os << "  d=(" << nf.d_x << ", " << nf.d_y << ", " << nf.d_z << ")\n";
    os << "  kernel=(" << ker[0] << ", " << ker[1] << ", " << ker[2] << ", "
       << ker[3] << ")\n";
    os << "  class group: Z";
    for (const Int& t : cg.torsion) os << " + Z/" << t;
    os << '\n';
    os << "  pairing=" << pr.pairing
       << (pr.almost_flat() ? " (almost-flat)" : "") << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic analyzer for lattice 3-polytopes: detects "
               "adjacent almost-flat A_n-triangle facets, the obstruction to "
               "smoothability of the associated Fano toric threefold"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("--input,-i", opt.input, "input file");
    if (input_required) in->required();
    sub->add_option("--format", opt.format, "input format (default: by extension)")
        ->check(CLI::IsMember({"palp", "json", "auto"}));
    sub->add_option("--out,-o", opt.out, "output file (default: stdout)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "analyze polytopes");
  add_common(analyze, true);
  analyze->add_option("--emit", opt.emit, "output style (default: table)")
      ->check(CLI::IsMember({"table", "records"}));

  CLI::App* scan = app.add_subcommand("scan", "scan a polytope database");
  add_common(scan, false);
  scan->add_option("--emit", opt.emit, "output style (default: records)")
      ->check(CLI::IsMember({"table", "records"}));
  scan->add_option("--parallelism", opt.parallelism,
                   "worker threads (default: core count)");

  CLI::App* nform =
      app.add_subcommand("normal-form", "print adjacent-pair normal forms");
  add_common(nform, true);
  nform->add_option("--pair", opt.pair, "pair selector (default: all)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (app.got_subcommand(analyze)) {
      if (opt.emit.empty()) opt.emit = "table";
      return cmd_analyze(opt);
    }
    if (app.got_subcommand(scan)) {
      if (opt.emit.empty()) opt.emit = "records";
      return cmd_scan(opt);
    }
    return cmd_normal_form(opt);
  } catch (const ks::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIoOrParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIoOrParse;
  }
}
