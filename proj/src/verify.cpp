#include "hic/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "hic/chordal.hpp"
#include "hic/complex.hpp"
#include "hic/domination.hpp"
#include "hic/homology.hpp"
#include "hic/random.hpp"
#include "hic/synthesis.hpp"

namespace hic {

namespace {

// The 13-vertex chordal graph of the worked example, transcribed by hand:
// 0=v1 1=v2 2=a1 3=b1 4=b2, 5..8 the path hanging off b1, 9..12 off b2.
const std::vector<Edge> kWorkedExampleEdges = {
    {0, 1},  {1, 2},  {1, 3},  {1, 4},  {2, 3},  {2, 4},  {3, 4}, {3, 5},
    {5, 6},  {6, 7},  {7, 8},  {4, 9},  {9, 10}, {10, 11}, {11, 12}, {2, 5},
    {2, 6},  {2, 7},  {2, 8},  {2, 9},  {2, 10}, {2, 11}, {2, 12}, {4, 5},
    {4, 6},  {4, 7},  {4, 8},  {3, 9},  {3, 10}, {3, 11}, {3, 12},
};

Graph worked_example() { return Graph(13, kWorkedExampleEdges); }

struct Instance {
  std::size_t trial = 0;
  std::string label;
  Graph graph;
  unsigned r = 1;
  std::optional<Vertex> vertex;
  std::optional<WedgeSpec> spec;
};

struct Outcome {
  enum class Status { kPass, kVacuous, kFail, kSkip };
  Status status = Status::kPass;
  std::string reason;
  Json computed = Json::object();
};

Outcome pass(Json computed = Json::object()) { return {Outcome::Status::kPass, "", std::move(computed)}; }
Outcome vacuous(Json computed = Json::object()) {
  return {Outcome::Status::kVacuous, "", std::move(computed)};
}
Outcome fail(std::string reason, Json computed) {
  return {Outcome::Status::kFail, std::move(reason), std::move(computed)};
}
Outcome skip(std::string reason) { return {Outcome::Status::kSkip, std::move(reason), Json::object()}; }

struct Context {
  const SuiteConfig& config;

  HomologyProfile oracle(const Graph& g, unsigned r) const {
    BuildLimits limits;
    limits.max_faces = config.max_faces;
    return reduced_homology(build_ind_complex(g, r, limits));
  }

  EngineResult engine(const Graph& g, unsigned r,
                      EngineOptions::Choice choice = EngineOptions::Choice::kSmallestSimplicial) const {
    EngineOptions options;
    options.max_nodes = config.max_nodes;
    options.choice = choice;
    return chordal_homotopy_type(g, r, options);
  }
};

using Corpus = std::function<std::vector<Instance>(const SuiteConfig&)>;
using Check = std::function<Outcome(const Instance&, const Context&)>;

struct Suite {
  Corpus corpus;
  Check check;
};

std::uint64_t name_salt(const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::size_t draw_between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(uniform_below(rng, hi - lo + 1));
}

// Per-trial generator seeded from (seed, suite, trial) alone.
template <typename Make>
Corpus seeded(const std::string& name, Make make) {
  return [name, make](const SuiteConfig& c) {
    std::vector<Instance> out;
    for (std::size_t t = 0; t < c.trials; ++t) {
      Rng rng(mix_seed(c.seed ^ name_salt(name), t));
      Instance inst = make(rng, c, t);
      inst.trial = t;
      out.push_back(std::move(inst));
    }
    return out;
  };
}

unsigned cycle_r(const SuiteConfig& c, std::size_t trial) {
  return 1 + static_cast<unsigned>(trial % c.r_max);
}

Instance erdos_renyi_instance(Rng& rng, const SuiteConfig& c, std::size_t trial) {
  static constexpr double kDensities[] = {0.2, 0.35, 0.5};
  Instance inst;
  const auto n = draw_between(rng, std::min<std::size_t>(4, c.max_n), c.max_n);
  const double p = kDensities[uniform_below(rng, 3)];
  inst.graph = erdos_renyi(n, p, rng());
  inst.r = cycle_r(c, trial);
  return inst;
}

Instance chordal_instance(Rng& rng, const SuiteConfig& c, std::size_t trial) {
  Instance inst;
  inst.graph = random_chordal(draw_between(rng, std::min<std::size_t>(4, c.max_n), c.max_n), rng());
  inst.r = cycle_r(c, trial);
  return inst;
}

HomotopyType path_prediction(std::size_t n, unsigned r) {
  for (std::size_t k = 1; (r + 2) * k - 1 <= n; ++k) {
    if (n == (r + 2) * k || n == (r + 2) * k - 1) return HomotopyType::sphere(static_cast<int>(r * k) - 1);
  }
  return HomotopyType::contractible();
}

bool is_path(const Graph& g) {
  if (g.empty() || g.edge_count() + 1 != g.size()) return false;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return connected_components(g).size() == 1;
}

// Suites ---------------------------------------------------------------------

Suite paths_suite() {
  return {[](const SuiteConfig& c) {
            std::vector<Instance> out;
            for (unsigned r = 1; r <= c.r_max; ++r) {
              for (std::size_t n = 1; n <= c.max_n; ++n) {
                Instance inst;
                inst.trial = out.size();
                inst.graph = path_graph(n);
                inst.r = r;
                out.push_back(std::move(inst));
              }
            }
            return out;
          },
          [](const Instance& inst, const Context& ctx) {
            const auto expected = path_prediction(inst.graph.size(), inst.r);
            const auto engine = ctx.engine(inst.graph, inst.r).type;
            const auto oracle = ctx.oracle(inst.graph, inst.r);
            Json computed = {{"expected", to_json(expected)}, {"engine", to_json(engine)},
                             {"oracle", to_json(oracle)}};
            if (engine != expected) return fail("engine disagrees with the path formula", computed);
            if (oracle != homology_of_type(expected)) return fail("homology disagrees with the path formula", computed);
            return pass(computed);
          }};
}

Suite wheels_suite() {
  return {[](const SuiteConfig& c) {
            std::vector<Instance> out;
            for (std::size_t n = 3; n <= c.max_n; ++n) {
              Instance inst;
              inst.trial = out.size();
              inst.graph = wheel_graph(n);
              inst.r = static_cast<unsigned>(n - 1);
              out.push_back(std::move(inst));
            }
            return out;
          },
          [](const Instance& inst, const Context& ctx) {
            const auto n = inst.graph.size() - 1;
            const auto expected = HomotopyType::sphere(static_cast<int>(n) - 2, n);
            const auto oracle = ctx.oracle(inst.graph, inst.r);
            Json computed = {{"expected", to_json(expected)}, {"oracle", to_json(oracle)}};
            if (oracle != homology_of_type(expected) || !oracle.torsion_free()) {
              return fail("homology is not a wedge of n spheres of dimension n-2", computed);
            }
            return pass(computed);
          }};
}

// γ_r > 2k  ⟹  H̃_j = 0 for j <= k + r - 2.
Suite thm_domination_suite() {
  return {seeded("thm-domination", erdos_renyi_instance), [](const Instance& inst, const Context& ctx) {
            const auto gamma = distance_domination_number(inst.graph, inst.r).value;
            Json computed = {{"gamma_r", gamma}};
            if (gamma < 3) return vacuous(computed);
            const auto h = ctx.oracle(inst.graph, inst.r);
            computed["oracle"] = to_json(h);
            for (std::size_t k = 1; gamma > 2 * k; ++k) {
              const int through = static_cast<int>(k + inst.r) - 2;
              if (!h.vanishes_through(through)) {
                computed["k"] = k;
                return fail("homology nonzero at or below dimension " + std::to_string(through), computed);
              }
            }
            return pass(computed);
          }};
}

// ω_r > 2k  ⟹  H̃_j = 0 for j <= k - 1.
Suite thm_set_domination_suite() {
  return {seeded("thm-set-domination", erdos_renyi_instance), [](const Instance& inst, const Context& ctx) {
            const auto omega = set_domination_number(inst.graph, inst.r).value;
            Json computed = {{"omega_r", omega}};
            if (omega < 3) return vacuous(computed);
            const auto h = ctx.oracle(inst.graph, inst.r);
            computed["oracle"] = to_json(h);
            for (std::size_t k = 1; omega > 2 * k; ++k) {
              const int through = static_cast<int>(k) - 1;
              if (!h.vanishes_through(through)) {
                computed["k"] = k;
                return fail("homology nonzero at or below dimension " + std::to_string(through), computed);
              }
            }
            return pass(computed);
          }};
}

Suite chordal_oracle_suite() {
  return {seeded("chordal-oracle", chordal_instance), [](const Instance& inst, const Context& ctx) {
            const auto result = ctx.engine(inst.graph, inst.r);
            const auto oracle = ctx.oracle(inst.graph, inst.r);
            const auto other = ctx.engine(inst.graph, inst.r, EngineOptions::Choice::kLargestSimplicial).type;
            Json computed = {{"engine", to_json(result.type)}, {"oracle", to_json(oracle)},
                             {"engine_largest_vertex", to_json(other)}};
            if (oracle != homology_of_type(result.type)) return fail("engine disagrees with homology", computed);
            if (!oracle.torsion_free()) return fail("homology has torsion", computed);
            if (!dims_mod_r_valid(result.type, inst.r)) return fail("sphere dimension not of the form rs-1", computed);
            if (other != result.type) return fail("result depends on the simplicial vertex chosen", computed);
            if (replay(result.trace.root, inst.r) != result.type) return fail("trace does not replay", computed);
            return pass(computed);
          }};
}

// ω_r > k  ⟹  H̃_i = 0 for i <= rk - 1, on chordal graphs.
Suite chordal_omega_suite() {
  return {seeded("chordal-omega", chordal_instance), [](const Instance& inst, const Context& ctx) {
            const auto omega = set_domination_number(inst.graph, inst.r).value;
            Json computed = {{"omega_r", omega}};
            if (omega < 2) return vacuous(computed);
            const auto type = ctx.engine(inst.graph, inst.r).type;
            const auto predicted = homology_of_type(type);
            const auto oracle = ctx.oracle(inst.graph, inst.r);
            computed["engine"] = to_json(type);
            computed["oracle"] = to_json(oracle);
            for (std::size_t k = 1; omega > k; ++k) {
              const int through = static_cast<int>(inst.r * k) - 1;
              if (!oracle.vanishes_through(through) || !predicted.vanishes_through(through)) {
                computed["k"] = k;
                return fail("homology nonzero at or below dimension " + std::to_string(through), computed);
              }
            }
            return pass(computed);
          }};
}

Suite star_cover_suite() {
  return {seeded("star-cover",
                 [](Rng& rng, const SuiteConfig& c, std::size_t trial) {
                   Instance inst;
                   const auto n = draw_between(rng, 1, c.max_n);
                   inst.graph = erdos_renyi(n, 0.2 + 0.4 * uniform_unit(rng), rng());
                   inst.r = cycle_r(c, trial);
                   inst.vertex = static_cast<Vertex>(uniform_below(rng, n));
                   return inst;
                 }),
          [](const Instance& inst, const Context& ctx) {
            BuildLimits limits;
            limits.max_faces = ctx.config.max_faces;
            const auto k = build_ind_complex(inst.graph, inst.r, limits);
            std::set<VertexSet> cover;
            for (auto& f : star(k, {*inst.vertex})) cover.insert(std::move(f));
            const auto family = supports(inst.graph, *inst.vertex, inst.r);
            for (const auto& s : family.supports) {
              for (auto& f : star(k, s.set)) cover.insert(std::move(f));
            }
            const auto faces = k.all_faces();
            Json computed = {{"faces", faces.size()}, {"covered", cover.size()},
                             {"supports", family.supports.size()}};
            if (cover != std::set<VertexSet>(faces.begin(), faces.end())) {
              return fail("stars of v and its supports do not cover the complex", computed);
            }
            return pass(computed);
          }};
}

Suite remark_supports_suite() {
  return {[](const SuiteConfig& c) {
            std::vector<Instance> out;
            for (auto& g : connected_graph_classes(std::min<std::size_t>(c.max_n, 7))) {
              Instance inst;
              inst.trial = out.size();
              inst.graph = std::move(g);
              inst.r = 2;
              out.push_back(std::move(inst));
            }
            return out;
          },
          [](const Instance& inst, const Context&) {
            const auto& g = inst.graph;
            for (Vertex v = 0; v < g.size(); ++v) {
              const bool simplicial = is_simplicial(g, v);
              Json computed = {{"vertex", std::to_string(v)}, {"simplicial", simplicial}};
              if (!supports(g, v, 1).all_induced_connected()) {
                return fail("a 1-support is disconnected", computed);
              }
              if (supports(g, v, 2).all_induced_connected() != simplicial) {
                return fail("2-supports connected does not match simpliciality", computed);
              }
              if (!simplicial) continue;
              for (unsigned r = 1; r <= g.size(); ++r) {
                const auto family = supports(g, v, r);
                if (!family.all_induced_connected() || !family.all_dominate_neighborhood()) {
                  computed["r"] = r;
                  computed["supports"] = to_json(family);
                  return fail("simplicial vertex with a bad support", computed);
                }
              }
            }
            return pass();
          }};
}

Suite cor44_suite() {
  return {seeded("cor44-torsion",
                 [](Rng& rng, const SuiteConfig& c, std::size_t) {
                   static constexpr double kDensities[] = {0.35, 0.5, 0.65};
                   Instance inst;
                   for (int attempt = 0; attempt < 1000; ++attempt) {
                     const auto n = draw_between(rng, std::min<std::size_t>(3, c.max_n), c.max_n);
                     Graph g = erdos_renyi(n, kDensities[uniform_below(rng, 3)], rng());
                     const auto v = static_cast<Vertex>(uniform_below(rng, n));
                     const auto r = static_cast<unsigned>(g.degree(v) + 1 + uniform_below(rng, 2));
                     if (cor44_condition(g, v, r)) {
                       inst.graph = std::move(g);
                       inst.vertex = v;
                       inst.r = r;
                       break;
                     }
                   }
                   return inst;
                 }),
          [](const Instance& inst, const Context& ctx) {
            if (!inst.vertex) return skip("no qualifying instance found");
            if (!cor44_condition(inst.graph, *inst.vertex, inst.r)) return vacuous();
            const auto h = ctx.oracle(inst.graph, inst.r);
            const int r = static_cast<int>(inst.r);
            Json computed = {{"oracle", to_json(h)}};
            if (!h.vanishes_through(r - 2)) return fail("homology below dimension r-1", computed);
            if (!h.torsion(r - 1).empty() || !h.torsion(r).empty()) {
              return fail("torsion in dimension r-1 or r", computed);
            }
            return pass(computed);
          }};
}

Json spec_json(const WedgeSpec& spec) {
  Json summands = Json::array();
  for (const auto& s : spec.summands) summands.push_back({{"d", s.d}, {"k", s.k}});
  return {{"r", spec.r}, {"summands", summands}};
}

WedgeSpec spec_from_json(const Json& j) {
  WedgeSpec spec;
  spec.r = j.at("r").get<unsigned>();
  for (const auto& s : j.at("summands")) {
    spec.summands.push_back({s.at("d").get<std::size_t>(), s.at("k").get<std::size_t>()});
  }
  return spec;
}

Outcome check_synthesis(const WedgeSpec& spec, const Context& ctx) {
  const auto result = synthesize_chordal(spec);
  const auto& g = result.graph;
  Json computed = {{"vertices", g.size()}, {"expected", to_json(result.expected)}};
  if (!chordality(g).chordal) return fail("synthesized graph is not chordal", computed);
  if (g.degree(0) != 1 || !g.adjacent(0, 1)) return fail("v1 is not a leaf attached to v2", computed);

  std::vector<VertexSet> expected_supports;
  for (std::size_t i = 0; i < spec.summands.size(); ++i) {
    const auto want = (spec.r + 2) * (spec.summands[i].k - 1);
    for (auto x : result.hubs[i]) {
      VertexSet s;
      for (Vertex v = 1; v < spec.r; ++v) s.push_back(v);
      s.push_back(x);
      const auto residual = delete_closed_neighborhood(g, s);
      const bool ok = want == 0 ? residual.graph.empty()
                                : residual.graph.size() == want - 1 && is_path(residual.graph);
      if (!ok) {
        computed["hub"] = std::to_string(x);
        computed["residual_vertices"] = residual.graph.size();
        return fail("residual is not the expected path", computed);
      }
      expected_supports.push_back(std::move(s));
    }
  }
  std::vector<VertexSet> found;
  for (const auto& s : supports(g, 0, spec.r).supports) found.push_back(s.set);
  std::sort(found.begin(), found.end());
  std::sort(expected_supports.begin(), expected_supports.end());
  computed["supports"] = found.size();
  if (found != expected_supports) return fail("supports of v1 are not {v2..vr, x}", computed);

  const auto type = ctx.engine(g, spec.r).type;
  computed["engine"] = to_json(type);
  if (type != result.expected) return fail("engine disagrees with the expected wedge", computed);
  if (g.size() <= 14) {
    const auto h = ctx.oracle(g, spec.r);
    computed["oracle"] = to_json(h);
    if (h != homology_of_type(result.expected)) return fail("homology disagrees with the expected wedge", computed);
  }
  return pass(computed);
}

Suite synth_suite() {
  return {[](const SuiteConfig& c) {
            std::vector<Instance> out;
            auto add = [&](unsigned r, std::vector<Summand> summands) {
              Instance inst;
              inst.trial = out.size();
              inst.r = r;
              inst.spec = WedgeSpec{r, std::move(summands)};
              out.push_back(std::move(inst));
            };
            for (unsigned r = 2; r <= std::max(2u, c.r_max); ++r) {
              for (std::size_t d1 = 1; d1 <= 3; ++d1) {
                for (std::size_t k1 = 1; k1 <= 2; ++k1) {
                  add(r, {{d1, k1}});
                  for (std::size_t d2 = 1; d2 <= 3; ++d2) {
                    for (std::size_t k2 = 1; k2 <= 2; ++k2) add(r, {{d1, k1}, {d2, k2}});
                  }
                }
              }
            }
            return out;
          },
          [](const Instance& inst, const Context& ctx) { return check_synthesis(*inst.spec, ctx); }};
}

Suite golden_suite() {
  return {[](const SuiteConfig&) {
            std::vector<Instance> out(3);
            out[0].label = "fig1";
            out[0].graph = star_of_paths(5, 2);
            out[0].r = 2;
            out[1].label = "fig2";
            out[1].graph = worked_example();
            out[1].r = 2;
            out[2].label = "synthesis";
            out[2].r = 2;
            out[2].spec = WedgeSpec{2, {{1, 1}, {2, 2}}};
            for (std::size_t i = 0; i < out.size(); ++i) out[i].trial = i;
            return out;
          },
          [](const Instance& inst, const Context& ctx) {
            if (inst.label == "fig1") {
              const auto gamma = distance_domination_number(inst.graph, 2).value;
              const auto omega = set_domination_number(inst.graph, 2).value;
              Json computed = {{"gamma_r", gamma}, {"omega_r", omega}};
              if (gamma != 1 || omega != 5) return fail("expected gamma_2 = 1 and omega_2 = 5", computed);
              return pass(computed);
            }
            if (inst.label == "fig2") {
              const auto expected = HomotopyType::wedge({{1, 1}, {3, 2}});
              const auto type = ctx.engine(inst.graph, 2).type;
              const auto h = ctx.oracle(inst.graph, 2);
              Json computed = {{"engine", to_json(type)}, {"oracle", to_json(h)}};
              if (type != expected) return fail("engine does not give S^1 v S^3 v S^3", computed);
              if (h != homology_of_type(expected)) return fail("homology does not match S^1 v S^3 v S^3", computed);
              return pass(computed);
            }
            const auto outcome = check_synthesis(*inst.spec, ctx);
            if (outcome.status != Outcome::Status::kPass) return outcome;
            if (synthesize_chordal(*inst.spec).graph != worked_example()) {
              return fail("synthesized graph differs from the transcribed figure", outcome.computed);
            }
            return outcome;
          }};
}

// Γ₀ > 2k ⟹ H̃_{k-1}(Ind_1) = 0; for chordal G also Γ > k ⟹ H̃_{k-1} = 0.
Suite meshulam_suite() {
  return {seeded("meshulam-r1",
                 [](Rng& rng, const SuiteConfig& c, std::size_t trial) {
                   auto inst = erdos_renyi_instance(rng, c, trial);
                   inst.r = 1;
                   return inst;
                 }),
          [](const Instance& inst, const Context& ctx) {
            const auto& g = inst.graph;
            bool isolated = false;
            for (Vertex v = 0; v < g.size(); ++v) isolated = isolated || g.degree(v) == 0;
            Json computed = Json::object();
            const auto h = ctx.oracle(g, 1);
            computed["oracle"] = to_json(h);
            bool exercised = false;
            if (isolated) {
              // An isolated vertex makes Ind_1(G) a cone.
              computed["strong_domination"] = nullptr;
              if (!h.is_zero()) return fail("cone with nonzero homology", computed);
              exercised = true;
            } else {
              const auto strong = strong_domination_number(g).value;
              computed["strong_domination"] = strong;
              for (std::size_t k = 1; strong > 2 * k; ++k) {
                exercised = true;
                if (h.betti(static_cast<int>(k) - 1) != 0 || !h.torsion(static_cast<int>(k) - 1).empty()) {
                  computed["k"] = k;
                  return fail("strong domination bound violated", computed);
                }
              }
            }
            if (chordality(g).chordal) {
              const auto domination = distance_domination_number(g, 1).value;
              computed["domination"] = domination;
              for (std::size_t k = 1; domination > k; ++k) {
                exercised = true;
                if (h.betti(static_cast<int>(k) - 1) != 0 || !h.torsion(static_cast<int>(k) - 1).empty()) {
                  computed["k"] = k;
                  return fail("chordal domination bound violated", computed);
                }
              }
            }
            return exercised ? pass(computed) : vacuous(computed);
          }};
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites = {
      {"paths", paths_suite()},
      {"wheels", wheels_suite()},
      {"thm-domination", thm_domination_suite()},
      {"thm-set-domination", thm_set_domination_suite()},
      {"chordal-oracle", chordal_oracle_suite()},
      {"chordal-omega", chordal_omega_suite()},
      {"star-cover", star_cover_suite()},
      {"remark-supports", remark_supports_suite()},
      {"cor44-torsion", cor44_suite()},
      {"synth-roundtrip", synth_suite()},
      {"golden", golden_suite()},
      {"meshulam-r1", meshulam_suite()},
  };
  return suites;
}

const Suite& find_suite(const std::string& name) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw VerifyError("unknown suite '" + name + "'");
  return it->second;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return Graph(j.at("n").get<std::size_t>(), edges);
}

Json bundle_json(const std::string& suite, const Instance& inst, const Outcome& outcome) {
  Json b = {{"suite", suite}, {"trial", inst.trial}};
  if (!inst.label.empty()) b["label"] = inst.label;
  b["r"] = inst.r;
  if (inst.vertex) b["vertex"] = std::to_string(*inst.vertex);
  if (inst.spec) b["spec"] = spec_json(*inst.spec);
  b["graph"] = graph_json(inst.spec ? synthesize_chordal(*inst.spec).graph : inst.graph);
  b["reason"] = outcome.reason;
  b["computed"] = outcome.computed;
  return b;
}

Instance instance_from_bundle(const Json& b) {
  Instance inst;
  inst.trial = b.at("trial").get<std::size_t>();
  inst.label = b.value("label", std::string{});
  inst.r = b.at("r").get<unsigned>();
  if (b.contains("vertex")) inst.vertex = static_cast<Vertex>(std::stoul(b.at("vertex").get<std::string>()));
  if (b.contains("spec")) inst.spec = spec_from_json(b.at("spec"));
  inst.graph = graph_from_json(b.at("graph"));
  return inst;
}

Outcome evaluate(const Suite& suite, const Instance& inst, const Context& ctx) {
  try {
    return suite.check(inst, ctx);
  } catch (const ResourceError& e) {
    return skip(e.what());
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what(), Json::object());
  }
}

void record(SuiteReport& report, const Instance& inst, const Outcome& outcome) {
  ++report.run;
  switch (outcome.status) {
    case Outcome::Status::kVacuous:
      ++report.vacuous;
      [[fallthrough]];
    case Outcome::Status::kPass: ++report.passed; break;
    case Outcome::Status::kFail:
      ++report.failed;
      report.counterexamples.push_back(bundle_json(report.suite, inst, outcome));
      break;
    case Outcome::Status::kSkip:
      ++report.skipped;
      report.skips.push_back({{"trial", inst.trial}, {"reason", outcome.reason}});
      break;
  }
}

void validate(const SuiteConfig& c) {
  if (c.trials < 1) throw VerifyError("trials must be at least 1");
  if (c.max_n < 1) throw VerifyError("max_n must be at least 1");
  if (c.r_max < 1) throw VerifyError("r_max must be at least 1");
}

// Canonical forms for small graphs -------------------------------------------

using Rows = std::vector<std::uint8_t>;  // adjacency bitmasks, n <= 8

std::uint32_t encode(const Rows& rows, const std::vector<int>& perm) {
  std::uint32_t code = 0;
  const auto n = perm.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((rows[perm[i]] >> perm[j]) & 1u);
  }
  return code;
}

// Minimum code over the orderings that sort vertices by an invariant key.
std::uint32_t canonical_code(const Rows& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<int>> key(n);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if ((rows[v] >> u) & 1u) key[v].push_back(std::popcount(rows[u]));
    }
    std::sort(key[v].begin(), key[v].end());
    key[v].insert(key[v].begin(), std::popcount(rows[v]));
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });

  std::uint32_t best = ~std::uint32_t{0};
  std::vector<int> perm(n);
  std::vector<bool> used(n, false);
  std::function<void(int)> place = [&](int pos) {
    if (pos == n) {
      best = std::min(best, encode(rows, perm));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!used[v] && key[v] == key[order[pos]]) {
        used[v] = true;
        perm[pos] = v;
        place(pos + 1);
        used[v] = false;
      }
    }
  };
  place(0);
  return best;
}

Rows decode(std::size_t n, std::uint32_t code) {
  Rows rows(n, 0);
  int bit = static_cast<int>(n * (n - 1) / 2) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, --bit) {
      if ((code >> bit) & 1u) {
        rows[i] |= static_cast<std::uint8_t>(1u << j);
        rows[j] |= static_cast<std::uint8_t>(1u << i);
      }
    }
  }
  return rows;
}

Graph rows_graph(const Rows& rows) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < rows.size(); ++u) {
    for (Vertex v = u + 1; v < rows.size(); ++v) {
      if ((rows[u] >> v) & 1u) edges.emplace_back(u, v);
    }
  }
  return Graph(rows.size(), edges);
}

}  // namespace

double SuiteReport::vacuous_fraction() const {
  return run == 0 ? 0.0 : static_cast<double>(vacuous) / static_cast<double>(run);
}

bool SuiteReport::inconclusive() const { return failed == 0 && passed == vacuous; }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "paths",           "wheels",        "thm-domination",  "thm-set-domination",
      "chordal-oracle",  "chordal-omega", "star-cover",      "remark-supports",
      "cor44-torsion",   "synth-roundtrip", "golden",        "meshulam-r1",
  };
  return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
  validate(config);
  const auto& suite = find_suite(config.suite);
  SuiteReport report;
  report.suite = config.suite;
  report.config = config;
  const Context ctx{config};
  for (const auto& inst : suite.corpus(config)) record(report, inst, evaluate(suite, inst, ctx));
  return report;
}

SuiteReport golden_report() {
  SuiteConfig config;
  config.suite = "golden";
  return run_suite(config);
}

SuiteReport replay_bundle(const Json& bundle, const SuiteConfig& budgets) {
  SuiteConfig config = budgets;
  config.suite = bundle.at("suite").get<std::string>();
  config.trials = 1;
  const auto& suite = find_suite(config.suite);
  const auto inst = instance_from_bundle(bundle);
  SuiteReport report;
  report.suite = config.suite;
  report.config = config;
  const Context ctx{config};
  record(report, inst, evaluate(suite, inst, ctx));
  return report;
}

Json to_json(const SuiteReport& report) {
  const auto& c = report.config;
  Json config = {{"trials", c.trials}, {"max_n", c.max_n},         {"r_max", c.r_max},
                 {"seed", c.seed},     {"max_faces", c.max_faces}, {"max_nodes", c.max_nodes}};
  Json counterexamples = Json::array();
  for (const auto& b : report.counterexamples) counterexamples.push_back(b);
  Json skips = Json::array();
  for (const auto& s : report.skips) skips.push_back(s);
  return {{"suite", report.suite},
          {"config", config},
          {"run", report.run},
          {"passed", report.passed},
          {"failed", report.failed},
          {"skipped", report.skipped},
          {"vacuous", report.vacuous},
          {"vacuous_fraction", report.vacuous_fraction()},
          {"inconclusive", report.inconclusive()},
          {"counterexamples", counterexamples},
          {"skips", skips}};
}

std::vector<Graph> connected_graph_classes(std::size_t max_n) {
  if (max_n > 8) throw VerifyError("graph classes are only enumerated up to 8 vertices");
  std::vector<Graph> out;
  if (max_n == 0) return out;
  std::vector<std::uint32_t> level = {0};  // the single vertex
  out.push_back(Graph(1));
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::set<std::uint32_t> next;
    for (auto code : level) {
      const Rows base = decode(n - 1, code);
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        Rows rows = base;
        rows.push_back(static_cast<std::uint8_t>(mask));
        for (std::size_t u = 0; u + 1 < n; ++u) {
          if ((mask >> u) & 1u) rows[u] |= static_cast<std::uint8_t>(1u << (n - 1));
        }
        next.insert(canonical_code(rows));
      }
    }
    level.assign(next.begin(), next.end());
    for (auto code : level) out.push_back(rows_graph(decode(n, code)));
  }
  return out;
}

}  // namespace hic
