#include "hic/chordal.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

namespace hic {

HypothesisReport check_decomposition_hypotheses(const Graph& g, Vertex v, unsigned r) {
  if (r == 0) throw ChordalError("r must be positive");
  HypothesisReport report;
  report.family = supports(g, v, r);
  report.applicable = report.family.all_induced_connected() &&
                      report.family.all_dominate_neighborhood();
  return report;
}

std::vector<Branch> decompose_at_vertex(const Graph& g, Vertex v, unsigned r) {
  const auto report = check_decomposition_hypotheses(g, v, r);
  if (!report.applicable) {
    throw ChordalError("decomposition hypotheses fail at vertex " + std::to_string(v));
  }
  std::vector<Branch> out;
  for (const auto& s : report.family.supports) {
    out.push_back({s.set, delete_closed_neighborhood(g, s.set)});
  }
  return out;
}

bool cor44_condition(const Graph& g, Vertex v, unsigned r) {
  if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
  if (r <= g.degree(v)) return false;
  for (auto b : second_neighborhood(g, v)) {
    for (auto a : g.neighbors(v)) {
      if (!g.adjacent(a, b)) return false;
    }
  }
  return true;
}

HomotopyType replay(const TraceNode& node, unsigned r) {
  switch (node.step) {
    case TraceNode::Step::kEmpty: return HomotopyType::empty();
    case TraceNode::Step::kSmallComponent: return HomotopyType::contractible();
    case TraceNode::Step::kMemo:
      if (!node.result) throw ChordalError("memo node without a result");
      return *node.result;
    case TraceNode::Step::kDecompose: break;
  }
  if (node.children.empty()) throw ChordalError("unfinished trace node");
  std::vector<HomotopyType> parts;
  for (const auto& child : node.children) parts.push_back(suspend(replay(child, r), r));
  return wedge_combine(parts);
}

namespace {

struct BudgetHit {};

// Color refinement; equal graphs always collide, isomorphic ones usually do.
std::uint64_t refinement_hash(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint64_t> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  std::size_t classes = 0;
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (auto u : g.neighbors(v)) sig[v].second.push_back(color[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<std::uint64_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  std::sort(color.begin(), color.end());
  std::uint64_t h = 0x84222325cbf29ce4ULL ^ n ^ (g.edge_count() << 32);
  for (auto c : color) {
    h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

class Engine {
 public:
  Engine(unsigned r, const EngineOptions& options) : r_(r), options_(options) {}

  HomotopyType run(const Subgraph& sub, TraceNode& node) {
    if (++trace_.nodes > options_.max_nodes) throw BudgetHit{};
    node.vertices = sub.original;
    const Graph& g = sub.graph;

    if (g.empty()) {
      node.step = TraceNode::Step::kEmpty;
      node.result = HomotopyType::empty();
      return *node.result;
    }
    for (const auto& c : connected_components(g)) {
      if (c.size() <= r_) {
        node.step = TraceNode::Step::kSmallComponent;
        node.result = HomotopyType::contractible();
        return *node.result;
      }
    }

    const auto key = refinement_hash(g);
    if (options_.memoize) {
      for (const auto& [seen, type] : memo_[key]) {
        if (seen == g) {
          ++trace_.memo_hits;
          node.step = TraceNode::Step::kMemo;
          node.result = type;
          return type;
        }
      }
    }

    const auto simplicial = simplicial_vertices(g);
    if (simplicial.empty()) throw ChordalError("no simplicial vertex; graph is not chordal");
    const Vertex v = options_.choice == EngineOptions::Choice::kSmallestSimplicial
                         ? simplicial.front()
                         : simplicial.back();
    node.step = TraceNode::Step::kDecompose;
    node.vertex = sub.original[v];

    auto branches = decompose_at_vertex(g, v, r_);
    std::vector<HomotopyType> parts;
    node.children.reserve(branches.size());
    for (auto& branch : branches) {
      VertexSet support;
      for (auto u : branch.support) support.push_back(sub.original[u]);
      node.supports.push_back(std::move(support));
      for (auto& u : branch.residual.original) u = sub.original[u];
      node.children.emplace_back();
      parts.push_back(suspend(run(branch.residual, node.children.back()), r_));
    }
    node.result = wedge_combine(parts);
    if (options_.memoize) memo_[key].emplace_back(g, *node.result);
    return *node.result;
  }

  DecompositionTrace& trace() { return trace_; }

 private:
  unsigned r_;
  EngineOptions options_;
  DecompositionTrace trace_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<Graph, HomotopyType>>> memo_;
};

}  // namespace

EngineResult chordal_homotopy_type(const Graph& g, unsigned r, const EngineOptions& options) {
  if (r == 0) throw ChordalError("r must be positive");
  const auto cert = chordality(g);
  if (!cert.chordal) {
    std::string cycle;
    for (auto v : cert.chordless_cycle) cycle += (cycle.empty() ? "" : " ") + std::to_string(v);
    throw ChordalError("graph is not chordal; chordless cycle: " + cycle);
  }
  Subgraph whole;
  whole.graph = g;
  whole.original.resize(g.size());
  for (Vertex v = 0; v < g.size(); ++v) whole.original[v] = v;

  Engine engine(r, options);
  try {
    auto type = engine.run(whole, engine.trace().root);
    return {std::move(type), std::move(engine.trace())};
  } catch (const BudgetHit&) {
    throw RecursionBudgetError(options.max_nodes, std::move(engine.trace()));
  }
}

namespace {

Json ids(const VertexSet& s) {
  Json out = Json::array();
  for (auto v : s) out.push_back(std::to_string(v));
  return out;
}

const char* step_name(TraceNode::Step s) {
  switch (s) {
    case TraceNode::Step::kEmpty: return "empty";
    case TraceNode::Step::kSmallComponent: return "small_component";
    case TraceNode::Step::kDecompose: return "decompose";
    case TraceNode::Step::kMemo: return "memo";
  }
  return "";
}

Json node_json(const TraceNode& node) {
  Json j;
  j["vertices"] = ids(node.vertices);
  j["step"] = step_name(node.step);
  if (node.vertex) j["vertex"] = std::to_string(*node.vertex);
  if (node.step == TraceNode::Step::kDecompose) {
    Json branches = Json::array();
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      branches.push_back({{"support", ids(node.supports[i])}, {"residual", node_json(node.children[i])}});
    }
    j["branches"] = branches;
  }
  j["result"] = node.result ? to_json(*node.result) : Json();
  return j;
}

}  // namespace

Json to_json(const DecompositionTrace& trace) {
  return {{"nodes", trace.nodes}, {"memo_hits", trace.memo_hits}, {"root", node_json(trace.root)}};
}

}  // namespace hic
