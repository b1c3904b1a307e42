#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hic/complex.hpp"
#include "hic/domination.hpp"
#include "hic/graph.hpp"
#include "hic/homotopy_type.hpp"
#include "hic/json.hpp"

namespace hic {

class ChordalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HypothesisReport {
  SupportFamily family;
  /// Every support is induced-connected and dominates N(v).
  bool applicable = false;
};

HypothesisReport check_decomposition_hypotheses(const Graph& g, Vertex v, unsigned r);

struct Branch {
  VertexSet support;
  /// G - N[S], with ids mapped back into G.
  Subgraph residual;
};

/// One branch per r-support of v. Throws ChordalError unless the
/// decomposition hypotheses hold at v.
std::vector<Branch> decompose_at_vertex(const Graph& g, Vertex v, unsigned r);

/// Every neighbor of v is adjacent to every vertex at distance two, and r > deg(v).
bool cor44_condition(const Graph& g, Vertex v, unsigned r);

struct TraceNode {
  enum class Step { kEmpty, kSmallComponent, kDecompose, kMemo };

  /// Vertices of this node's graph, as ids of the input graph.
  VertexSet vertices;
  Step step = Step::kEmpty;
  /// Chosen simplicial vertex (kDecompose only).
  std::optional<Vertex> vertex;
  /// Parallel lists: supports[i] produced the residual children[i].
  std::vector<VertexSet> supports;
  std::vector<TraceNode> children;
  /// Unset while the node is still being expanded.
  std::optional<HomotopyType> result;
};

struct DecompositionTrace {
  TraceNode root;
  std::size_t nodes = 0;
  std::size_t memo_hits = 0;
};

/// Rebuilds a node's type bottom-up from its children with suspend and
/// wedge_combine. Throws ChordalError on an unfinished node.
HomotopyType replay(const TraceNode& node, unsigned r);

class RecursionBudgetError : public ResourceError {
 public:
  RecursionBudgetError(std::size_t limit, DecompositionTrace partial)
      : ResourceError("recursion", limit), partial_(std::move(partial)) {}
  const DecompositionTrace& partial_trace() const { return partial_; }

 private:
  DecompositionTrace partial_;
};

struct EngineOptions {
  enum class Choice { kSmallestSimplicial, kLargestSimplicial };
  Choice choice = Choice::kSmallestSimplicial;
  std::size_t max_nodes = 1'000'000;
  bool memoize = true;
};

struct EngineResult {
  HomotopyType type;
  DecompositionTrace trace;
};

/// Homotopy type of Ind_r(G) for chordal G. Throws ChordalError on
/// non-chordal input and RecursionBudgetError past max_nodes.
EngineResult chordal_homotopy_type(const Graph& g, unsigned r, const EngineOptions& options = {});

Json to_json(const DecompositionTrace& trace);

}  // namespace hic
