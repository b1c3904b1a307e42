#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hic {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Finite simple undirected graph on the vertices 0..n-1. Immutable once
/// constructed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Duplicate edges (in either orientation) collapse; self-loops and
  /// out-of-range endpoints throw GraphError.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adjacency_.size(); }
  bool empty() const { return adjacency_.empty(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * size() + v] != 0;
  }
  bool contains(Vertex v) const { return v < size(); }

  /// Edges as (min, max) pairs in ascending order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> matrix_;
  std::size_t edge_count_ = 0;
};

/// An induced subgraph together with the original id of each new vertex.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;
};

// Edge-list text format: `#` comment lines, a header `n m`, then m lines `u v`.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

/// Sorts and deduplicates; throws GraphError on ids outside the graph.
VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> vertices);

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices);
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
/// G - N[S].
Subgraph delete_closed_neighborhood(const Graph& g, const VertexSet& s);

/// Components ordered by their minimum vertex; each component is sorted.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected_subset(const Graph& g, const VertexSet& s);

/// std::nullopt encodes an infinite distance (unreachable).
using Distance = std::optional<std::size_t>;

std::vector<Distance> bfs_distances(const Graph& g, const VertexSet& sources);
/// Throws GraphError when `targets` is empty.
Distance distance_to_set(const Graph& g, Vertex v, const VertexSet& targets);
/// Vertices at distance exactly two from v.
VertexSet second_neighborhood(const Graph& g, Vertex v);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);
bool is_simplicial(const Graph& g, Vertex v);
std::vector<Vertex> simplicial_vertices(const Graph& g);

struct PeoCertificate {
  bool chordal = false;
  /// Perfect elimination ordering, present when chordal.
  std::vector<Vertex> order;
  /// Induced cycle of length >= 4, present when not chordal.
  std::vector<Vertex> chordless_cycle;
};

/// Lex-BFS ordering, verified independently as a perfect elimination order.
PeoCertificate chordality(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);

// Generators ------------------------------------------------------------------

enum class Family {
  kPath,
  kCycle,
  kWheel,
  kComplete,
  kStarOfPaths,
  kErdosRenyi,
  kRandomChordal,
};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// Parameters per family:
///   path(n), cycle(n >= 3), wheel(n >= 3; rim 0..n-1, hub n), complete(n),
///   star_of_paths(arms, length; center 0), erdos_renyi(n) with
///   edge_probability, random_chordal(n).
struct GeneratorSpec {
  Family family = Family::kPath;
  std::vector<std::int64_t> params;
  double edge_probability = 0.0;
  std::optional<std::uint64_t> seed;
};

Graph generate_graph(const GeneratorSpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph wheel_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_of_paths(std::size_t arms, std::size_t length);
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);
Graph random_chordal(std::size_t n, std::uint64_t seed);

}  // namespace hic
