// Command-line front end: build, simulate, rauzy, graph, verify, plot.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "flipiet/constructions.hpp"
#include "flipiet/dynamics.hpp"
#include "flipiet/json_io.hpp"
#include "flipiet/rauzy.hpp"
#include "flipiet/rauzy_graph.hpp"
#include "flipiet/svg.hpp"
#include "flipiet/verification.hpp"

namespace fs = std::filesystem;
using namespace flipiet;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "float") return Backend::floating;
  throw UsageError("backend must be exact or float");
}

ExchangeMap<Real> load_map(const std::string& map_path, const std::string& example) {
  if (!example.empty()) return build_named(example).iet;
  if (map_path.empty()) throw UsageError("either --map or --example is required");
  return map_from_json<Real>(read_json_file(map_path));
}

int cmd_build(const std::string& what, int n_max, const std::string& out_dir) {
  Json manifest = Json::array();
  auto emit = [&](const std::string& name, const Json& map_json) {
    if (out_dir.empty()) return;
    fs::create_directories(out_dir);
    write_text((fs::path(out_dir) / (name + ".json")).string(), map_json.dump(2) + "\n");
  };
  if (what == "tree") {
    for (const auto& [key, entry] : build_nf_tree(n_max)) {
      const std::string name = "n" + std::to_string(key.first) + "_f" + std::to_string(key.second);
      emit(name, to_json(entry.map));
      manifest.push_back(Json{{"name", name},
                              {"n", key.first},
                              {"f", key.second},
                              {"origin", entry.origin},
                              {"fake_discontinuity", to_json(classify_fake_discontinuity(entry.map.perm()))}});
    }
  } else {
    const NamedExample ex = build_named(what);
    emit(ex.name, to_json(ex.iet));
    if (ex.cet) emit(ex.name + "_cet", to_json(*ex.cet));
    manifest.push_back(manifest_entry(ex));
  }
  const std::string text = manifest.dump(2) + "\n";
  if (out_dir.empty()) {
    std::cout << text;
  } else {
    write_text((fs::path(out_dir) / "manifest.json").string(), text);
  }
  return 0;
}

template <class Num>
Json simulate_report(const ExchangeMap<Num>& t, const std::string& x0_text, long iters, const std::string& report,
                     Real tolerance) {
  const Num x0 = length_from_json<Num>(Json(x0_text));
  const auto rep = orbit(t, x0, iters);
  Json out{{"iterations", static_cast<long>(rep.points.size()) - 1},
           {"stopped_reason", std::string(to_string(rep.stopped_reason))},
           {"max_gap", to_decimal(NumTraits<Num>::to_real(rep.max_gap))}};
  if (report == "gaps") {
    out["max_gap_below_tolerance"] = NumTraits<Num>::to_real(rep.max_gap) < tolerance;
    out["tolerance"] = to_decimal(tolerance);
  } else if (report == "frequency") {
    out["frequency_0.2_0.5"] = visit_frequency(rep.points, length_from_json<Num>(Json("0.2")),
                                               length_from_json<Num>(Json("0.5")));
  } else if (report == "points") {
    Json pts = Json::array();
    for (const auto& x : rep.points) pts.push_back(length_to_json(x));
    out["points"] = pts;
  } else {
    throw UsageError("report must be gaps, frequency or points");
  }
  return out;
}

template <class Num>
Json rauzy_log(const ExchangeMap<Num>& t, int steps) {
  const auto orbit = renormalization_orbit(RauzyState<Num>(t), steps);
  Json log = Json::array();
  for (const auto& s : orbit.steps) log.push_back(to_json(s));
  return Json{{"start", to_json(t)},
              {"types", to_string(orbit.types())},
              {"stop", std::string(to_string(orbit.stop))},
              {"steps", log}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rauzy induction for interval exchange maps with flips"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  int samples = 1000;
  std::string tolerance_text;
  std::string backend_text = "exact";
  std::string out;
  int n_max = 9;
  int max_len = 0;
  long iters = 100000;
  std::string x0 = "0.1";
  std::string map_path, example;

  auto* build = app.add_subcommand("build", "build a named example (t1|t2|t3|tb|tc) or the (n,f) tree");
  std::string build_what;
  build->add_option("what", build_what, "t1|t2|t3|tb|tc|tree")->required();
  build->add_option("--n-max", n_max, "largest n for the tree")->check(CLI::Range(4, 30));
  build->add_option("--out", out, "output directory (default: manifest to stdout)");

  auto* simulate = app.add_subcommand("simulate", "iterate a map and report orbit statistics");
  std::string report_kind = "gaps";
  simulate->add_option("--map", map_path, "JSON exchange map");
  simulate->add_option("--example", example, "named example instead of --map");
  simulate->add_option("--x0", x0, "starting point");
  simulate->add_option("--iters", iters, "number of iterations")->check(CLI::NonNegativeNumber);
  simulate->add_option("--report", report_kind, "gaps|frequency|points");
  simulate->add_option("--tolerance", tolerance_text, "gap threshold (default FLIPIET_TOLERANCE or 1e-3)");
  simulate->add_option("--backend", backend_text, "exact|float");

  auto* rauzy = app.add_subcommand("rauzy", "log Rauzy induction steps");
  int steps = 10;
  rauzy->add_option("--map", map_path, "JSON exchange map");
  rauzy->add_option("--example", example, "named example instead of --map");
  rauzy->add_option("--steps", steps, "number of steps")->check(CLI::NonNegativeNumber);
  rauzy->add_option("--backend", backend_text, "exact|float");

  auto* graph = app.add_subcommand("graph", "signed Rauzy graph census and cycle search");
  int graph_n = 4;
  std::string through;
  bool special_only = false;
  graph->add_option("--n", graph_n, "number of symbols")->check(CLI::Range(2, 6));
  graph->add_option("--cycles-through", through, "vertex, e.g. \"(-3,+4,+1,-2)\"");
  graph->add_option("--max-len", max_len, "cycle length bound (default 12 for n<=4, else 20)");
  graph->add_flag("--special-only", special_only, "list only special cycles");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string suite = "all";
  std::string report_path;
  bool timing = false;
  unsigned threads = 0;
  verify->add_option("--suite", suite, "all|matrices|constructions|theorem31|tree");
  verify->add_option("--seed", seed, "64-bit seed");
  verify->add_option("--samples", samples, "(3,1)-CET samples")->check(CLI::PositiveNumber);
  verify->add_option("--n-max", n_max, "tree depth")->check(CLI::Range(4, 30));
  std::string verify_backend = "float";
  verify->add_option("--backend", verify_backend, "exact|float for the Rauzy orbit checks (default float)");
  verify->add_option("--report", report_path, "write the JSON report here (default stdout)");
  verify->add_option("--threads", threads, "worker threads (0 = all cores)");
  verify->add_flag("--timing", timing, "include runtimes in the report");
  verify->add_option("--tolerance", tolerance_text, "accepted for uniformity; criteria tolerances are fixed");

  auto* plot = app.add_subcommand("plot", "SVG graph or orbit plot");
  std::string kind = "graph";
  plot->add_option("--map", map_path, "JSON exchange map");
  plot->add_option("--example", example, "named example instead of --map");
  plot->add_option("--kind", kind, "graph|orbit");
  plot->add_option("--x0", x0, "orbit start");
  plot->add_option("--iters", iters, "orbit length")->check(CLI::NonNegativeNumber);
  plot->add_option("--out", out, "SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const Backend backend = parse_backend(backend_text);
    if (*build) return cmd_build(build_what, n_max, out);

    if (*simulate) {
      const Real tolerance = tolerance_text.empty() ? default_tolerance(1e-3L) : parse_decimal(tolerance_text);
      Json result;
      if (backend == Backend::exact && example.empty()) {
        result = simulate_report(map_from_json<Rational>(read_json_file(map_path)), x0, iters, report_kind, tolerance);
      } else {
        result = simulate_report(load_map(map_path, example), x0, iters, report_kind, tolerance);
      }
      std::cout << result.dump(2) << "\n";
      return 0;
    }

    if (*rauzy) {
      Json log = backend == Backend::exact && example.empty()
                     ? rauzy_log(map_from_json<Rational>(read_json_file(map_path)), steps)
                     : rauzy_log(load_map(map_path, example), steps);
      std::cout << log.dump(2) << "\n";
      return 0;
    }

    if (*graph) {
      const RauzyGraph g = RauzyGraph::build(graph_n);
      Json result{{"n", graph_n}, {"vertices", g.vertices().size()}, {"edges", g.edge_count()}};
      if (!through.empty()) {
        const SignedPermutation v = SignedPermutation::parse(through);
        const int bound = max_len > 0 ? max_len : default_max_cycle_length(graph_n);
        Json cycles = Json::array();
        for (const auto& c : find_cycles_through(g, v, bound)) {
          const bool special = is_special_cycle(c);
          if (special_only && !special) continue;
          cycles.push_back(Json{{"types", to_string(c.types())}, {"length", c.length()}, {"special", special}});
        }
        result["cycles_through"] = v.to_string();
        result["max_len"] = bound;
        result["cycles"] = cycles;
      }
      std::cout << result.dump(2) << "\n";
      return 0;
    }

    if (*verify) {
      VerificationOptions opt;
      opt.suite = suite;
      opt.seed = seed;
      opt.samples = samples;
      opt.n_max = n_max;
      opt.backend = parse_backend(verify_backend);
      opt.threads = threads;
      suite_criteria(suite);  // validates the name before running anything
      const VerificationReport rep = run_verification(opt);
      write_text(report_path, rep.to_json(timing).dump(2) + "\n");
      for (const auto& c : rep.checks) {
        std::cerr << c.id << " " << to_string(c.status) << "  " << c.measured << "\n";
      }
      return rep.passed() ? 0 : kExitFail;
    }

    if (*plot) {
      PlotOptions opt;
      if (kind == "graph") {
        opt.kind = PlotKind::graph;
      } else if (kind == "orbit") {
        opt.kind = PlotKind::orbit;
      } else {
        throw UsageError("kind must be graph or orbit");
      }
      opt.x0 = parse_decimal(x0);
      opt.iters = iters;
      write_text(out, export_plot(load_map(map_path, example), opt));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
