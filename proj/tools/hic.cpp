// hic: command line front end for the r-independence complex toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hic/chordal.hpp"
#include "hic/complex.hpp"
#include "hic/domination.hpp"
#include "hic/homology.hpp"
#include "hic/synthesis.hpp"
#include "hic/verify.hpp"

using namespace hic;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return Json::parse(in);
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

struct Options {
  std::string graph;
  std::string out;
  std::string trace;
  std::string kind = "distance";
  std::string summands;
  std::string family;
  std::string replay;
  std::string json;
  std::vector<std::int64_t> params;
  unsigned r = 0;
  Vertex vertex = 0;
  std::uint64_t mod_p = 0;
  std::size_t max_faces = BuildLimits{}.max_faces;
  std::size_t max_nodes = EngineOptions{}.max_nodes;
  double probability = 0.5;
  std::optional<std::uint64_t> seed;
  SuiteConfig suite;
};

int cmd_homology(const Options& o) {
  BuildLimits limits;
  limits.max_faces = o.max_faces;
  const auto k = build_ind_complex(read_graph_file(o.graph), o.r, limits);
  Json out = {{"r", o.r}, {"f_vector", k.f_vector()}, {"homology", to_json(reduced_homology(k))}};
  if (o.mod_p != 0) {
    Json betti = Json::array();
    const auto mod = betti_mod_p(k, o.mod_p);
    for (std::size_t i = 0; i < mod.size(); ++i) {
      if (mod[i] != 0) betti.push_back({{"d", static_cast<int>(i) - 1}, {"betti", mod[i]}});
    }
    out["mod_p"] = {{"p", o.mod_p}, {"dims", betti}};
  }
  print(out);
  return 0;
}

int cmd_chordal(const Options& o) {
  EngineOptions options;
  options.max_nodes = o.max_nodes;
  try {
    const auto result = chordal_homotopy_type(read_graph_file(o.graph), o.r, options);
    if (!o.trace.empty()) write_file(o.trace, to_json(result.trace).dump(2) + "\n");
    print(to_json(result.type));
  } catch (const RecursionBudgetError& e) {
    if (!o.trace.empty()) write_file(o.trace, to_json(e.partial_trace()).dump(2) + "\n");
    throw;
  }
  return 0;
}

int cmd_domination(const Options& o) {
  const auto g = read_graph_file(o.graph);
  if (o.kind == "strong") {
    print(to_json(strong_domination_number(g)));
    return 0;
  }
  if (o.r == 0) throw std::runtime_error("--r is required for --kind " + o.kind);
  print(to_json(o.kind == "distance" ? distance_domination_number(g, o.r) : set_domination_number(g, o.r)));
  return 0;
}

int cmd_supports(const Options& o) {
  const auto g = read_graph_file(o.graph);
  const auto report = check_decomposition_hypotheses(g, o.vertex, o.r);
  auto out = to_json(report.family);
  out["applicable"] = report.applicable;
  print(out);
  return 0;
}

int cmd_synthesize(const Options& o) {
  const WedgeSpec spec{o.r, parse_summands(o.summands)};
  const auto result = synthesize_chordal(spec);
  write_graph_file(result.graph, o.out);
  write_file(o.out + ".json", sidecar_json(spec, result).dump(2) + "\n");
  print({{"vertices", result.graph.size()}, {"edges", result.graph.edge_count()},
         {"expected", to_json(result.expected)}});
  return 0;
}

int cmd_generate(const Options& o) {
  GeneratorSpec spec;
  spec.family = parse_family(o.family);
  spec.params = o.params;
  spec.edge_probability = o.probability;
  spec.seed = o.seed;
  const auto g = generate_graph(spec);
  write_graph_file(g, o.out);
  print({{"vertices", g.size()}, {"edges", g.edge_count()}});
  return 0;
}

void summarize(const SuiteReport& r) {
  std::cout << r.suite << ": run " << r.run << ", passed " << r.passed << ", failed " << r.failed
            << ", skipped " << r.skipped << ", vacuous " << r.vacuous;
  if (r.inconclusive()) std::cout << " (inconclusive)";
  std::cout << '\n';
  for (const auto& b : r.counterexamples) std::cout << "  counterexample: " << b.dump() << '\n';
}

int cmd_verify(const Options& o) {
  std::vector<SuiteReport> reports;
  if (!o.replay.empty()) {
    const auto j = read_json(o.replay);
    SuiteConfig budgets = o.suite;
    if (j.contains("counterexamples")) {
      for (const auto& b : j.at("counterexamples")) reports.push_back(replay_bundle(b, budgets));
      if (reports.empty()) std::cout << "no counterexamples to replay\n";
    } else {
      reports.push_back(replay_bundle(j, budgets));
    }
  } else {
    if (o.suite.suite.empty()) throw std::runtime_error("--suite or --replay is required");
    reports.push_back(run_suite(o.suite));
  }
  bool ok = true;
  for (const auto& r : reports) {
    summarize(r);
    ok = ok && r.ok();
  }
  if (!o.json.empty()) {
    const Json j = reports.size() == 1 ? to_json(reports[0]) : [&] {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(to_json(r));
      return all;
    }();
    write_file(o.json, j.dump(2) + "\n");
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"r-independence complexes: homology, domination, chordal homotopy types"};
  app.require_subcommand(1);
  Options o;

  auto* homology = app.add_subcommand("homology", "reduced integral homology of Ind_r(G)");
  homology->add_option("--graph", o.graph, "edge-list file")->required()->check(CLI::ExistingFile);
  homology->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  homology->add_option("--mod-p", o.mod_p, "also report Betti numbers over GF(p)");
  homology->add_option("--max-faces", o.max_faces);

  auto* chordal = app.add_subcommand("chordal", "symbolic homotopy type for a chordal graph");
  chordal->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);
  chordal->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  chordal->add_option("--trace", o.trace, "write the decomposition trace as JSON");
  chordal->add_option("--max-nodes", o.max_nodes);

  auto* domination = app.add_subcommand("domination", "exact gamma_r, omega_r or strong domination");
  domination->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);
  domination->add_option("--r", o.r)->check(CLI::PositiveNumber);
  domination->add_option("--kind", o.kind)->check(CLI::IsMember({"distance", "set", "strong"}));

  auto* supports_cmd = app.add_subcommand("supports", "r-supports of a vertex");
  supports_cmd->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);
  supports_cmd->add_option("--vertex", o.vertex)->required();
  supports_cmd->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);

  auto* synthesize = app.add_subcommand("synthesize", "chordal graph with a prescribed wedge of spheres");
  synthesize->add_option("--r", o.r)->required();
  synthesize->add_option("--summands", o.summands, "d1:k1,d2:k2,...")->required();
  synthesize->add_option("--out", o.out)->required();

  auto* generate = app.add_subcommand("generate", "write a generated graph");
  generate->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "wheel", "complete", "star_of_paths", "erdos_renyi",
                             "random_chordal"}));
  generate->add_option("--params", o.params)->required();
  generate->add_option("--p", o.probability, "edge probability for erdos_renyi");
  generate->add_option("--seed", o.seed);
  generate->add_option("--out", o.out)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite.suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", o.suite.trials)->check(CLI::PositiveNumber);
  verify->add_option("--max-n", o.suite.max_n)->check(CLI::PositiveNumber);
  verify->add_option("--r-max", o.suite.r_max)->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.suite.seed);
  verify->add_option("--max-faces", o.suite.max_faces);
  verify->add_option("--max-nodes", o.suite.max_nodes);
  verify->add_option("--json", o.json, "write the JSON report here");
  verify->add_option("--replay", o.replay, "re-run a counterexample bundle or every bundle in a report")
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*homology) return cmd_homology(o);
    if (*chordal) return cmd_chordal(o);
    if (*domination) return cmd_domination(o);
    if (*supports_cmd) return cmd_supports(o);
    if (*synthesize) return cmd_synthesize(o);
    if (*generate) return cmd_generate(o);
    if (*verify) return cmd_verify(o);
  } catch (const ResourceError& e) {
    std::cerr << "hic: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "hic: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
