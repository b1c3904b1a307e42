#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hic/graph.hpp"

namespace hic {

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction would exceed a configured budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string budget, std::size_t limit)
      : std::runtime_error(budget + " budget of " + std::to_string(limit) + " exceeded"),
        budget_(std::move(budget)),
        limit_(limit) {}
  const std::string& budget() const { return budget_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string budget_;
  std::size_t limit_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : s) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct BuildLimits {
  std::size_t max_faces = 2'000'000;
  /// Largest face dimension to construct; unlimited when unset.
  std::optional<int> max_dim;
};

/// Finite abstract simplicial complex stored as every face, grouped by
/// dimension. Dimension -1 holds the empty face. Faces are ascending vertex
/// lists and each dimension is sorted lexicographically; boundary maps use
/// the ascending order as orientation.
class SimplicialComplex {
 public:
  /// The void complex (no faces at all).
  SimplicialComplex() = default;

  /// Throws ComplexError unless `faces` is closed under taking subsets.
  static SimplicialComplex from_faces(std::size_t vertex_count, std::vector<VertexSet> faces);
  /// Downward closure of the given facets.
  static SimplicialComplex from_facets(std::size_t vertex_count,
                                       const std::vector<VertexSet>& facets);
  /// Every subset of {0..n-1}.
  static SimplicialComplex full_simplex(std::size_t n);

  bool is_void() const { return by_dim_.empty(); }
  /// -1 for the complex {∅}; -2 for the void complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 2; }
  std::size_t vertex_count() const { return vertex_count_; }

  /// Faces of dimension `dim` (empty list when out of range).
  const std::vector<VertexSet>& faces(int dim) const;
  /// Face counts f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> f_vector() const;
  std::size_t face_count() const { return index_.size(); }

  bool contains(const VertexSet& face) const { return index_.contains(face); }
  /// Position of `face` within faces(|face| - 1).
  std::optional<std::size_t> index_of(const VertexSet& face) const;

  std::vector<VertexSet> all_faces() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.by_dim_ == b.by_dim_;
  }

 private:
  friend SimplicialComplex build_ind_complex(const Graph&, unsigned, const BuildLimits&);
  void finalize();

  std::size_t vertex_count_ = 0;
  std::vector<std::vector<VertexSet>> by_dim_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
};

/// True iff every component of G[A] has at most r vertices.
bool is_r_independent(const Graph& g, const VertexSet& a, unsigned r);

/// The r-independence complex: every r-independent subset of V(G). Throws
/// ResourceError("face", limit) instead of truncating.
SimplicialComplex build_ind_complex(const Graph& g, unsigned r, const BuildLimits& limits = {});

/// Sum over d >= -1 of (-1)^d f_d.
std::int64_t euler_characteristic(const SimplicialComplex& k);

/// st(σ) = {τ ∈ K : σ ∪ τ ∈ K}, sorted by dimension then lexicographically.
std::vector<VertexSet> star(const SimplicialComplex& k, const VertexSet& sigma);

// `=== dim d ===` separated dump, one comma-separated face per line.
std::string dump_complex(const SimplicialComplex& k);
SimplicialComplex parse_complex_dump(std::string_view text, std::size_t vertex_count);

}  // namespace hic
