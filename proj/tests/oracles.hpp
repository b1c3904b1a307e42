#pragma once

// Brute-force reference computations for the unit tests. Everything here is
// written against plain bitmasks so it shares no code path with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hic/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct SmallGraph {
  int n = 0;
  std::vector<Mask> adj;  // adj[v] bit w set iff v ~ w
};

inline SmallGraph from(const hic::Graph& g) {
  SmallGraph s;
  s.n = static_cast<int>(g.size());
  s.adj.assign(s.n, 0);
  for (const auto& [u, v] : g.edges()) {
    s.adj[u] |= Mask{1} << v;
    s.adj[v] |= Mask{1} << u;
  }
  return s;
}

inline Mask full(int n) { return n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

inline std::vector<hic::Vertex> members(Mask m) {
  std::vector<hic::Vertex> out;
  for (int v = 0; v < 32; ++v) {
    if (m & (Mask{1} << v)) out.push_back(static_cast<hic::Vertex>(v));
  }
  return out;
}

inline Mask mask_of(const std::vector<hic::Vertex>& s) {
  Mask m = 0;
  for (auto v : s) m |= Mask{1} << v;
  return m;
}

// Component of `start` inside `within`.
inline Mask component(const SmallGraph& g, Mask within, int start) {
  Mask seen = Mask{1} << start;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (int v = 0; v < g.n; ++v) {
      if (frontier & (Mask{1} << v)) next |= g.adj[v];
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool connected(const SmallGraph& g, Mask s) {
  if (!s) return true;
  return component(g, s, std::countr_zero(s)) == s;
}

inline int largest_component(const SmallGraph& g, Mask s) {
  int best = 0;
  while (s) {
    const Mask c = component(g, s, std::countr_zero(s));
    best = std::max(best, std::popcount(c));
    s &= ~c;
  }
  return best;
}

/// f-vector of Ind_r(G) starting at dimension -1, by checking all 2^n subsets.
inline std::vector<std::size_t> ind_f_vector(const hic::Graph& graph, int r) {
  const auto g = from(graph);
  std::vector<std::size_t> f;
  for (Mask s = 0; s <= full(g.n); ++s) {
    if (largest_component(g, s) <= r) {
      const auto size = static_cast<std::size_t>(std::popcount(s));
      if (f.size() <= size) f.resize(size + 1, 0);
      ++f[size];
    }
    if (s == full(g.n)) break;
  }
  return f;
}

inline Mask closed_nbhd(const SmallGraph& g, Mask s) {
  Mask out = s;
  for (int v = 0; v < g.n; ++v) {
    if (s & (Mask{1} << v)) out |= g.adj[v];
  }
  return out;
}

inline Mask open_nbhd(const SmallGraph& g, Mask s) {
  Mask out = 0;
  for (int v = 0; v < g.n; ++v) {
    if (s & (Mask{1} << v)) out |= g.adj[v];
  }
  return out;
}

inline Mask ball(const SmallGraph& g, int v, int radius) {
  Mask b = Mask{1} << v;
  for (int i = 0; i < radius; ++i) b = closed_nbhd(g, b);
  return b;
}

/// Smallest |D| with pred(D), scanning subsets by size. nullopt if none.
inline std::optional<int> min_subset(int n, const std::function<bool(Mask)>& pred) {
  for (int k = 0; k <= n; ++k) {
    for (Mask s = 0; s <= full(n); ++s) {
      if (std::popcount(s) == k && pred(s)) return k;
      if (s == full(n)) break;
    }
  }
  return std::nullopt;
}

inline int gamma_r(const hic::Graph& graph, int r) {
  const auto g = from(graph);
  return *min_subset(g.n, [&](Mask d) {
    Mask covered = 0;
    for (int v = 0; v < g.n; ++v) {
      if (d & (Mask{1} << v)) covered |= ball(g, v, r);
    }
    return covered == full(g.n);
  });
}

inline int domination_number(const hic::Graph& graph) {
  const auto g = from(graph);
  return *min_subset(g.n, [&](Mask d) { return closed_nbhd(g, d) == full(g.n); });
}

inline std::optional<int> strong_domination_number(const hic::Graph& graph) {
  const auto g = from(graph);
  return min_subset(g.n, [&](Mask d) { return open_nbhd(g, d) == full(g.n); });
}

inline std::vector<Mask> connected_sets(const hic::Graph& graph, int max_size) {
  const auto g = from(graph);
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(g.n); ++s) {
    if (std::popcount(s) <= max_size && connected(g, s)) out.push_back(s);
    if (s == full(g.n)) break;
  }
  return out;
}

/// Minimum number of connected sets of size <= r whose closed neighborhoods
/// cover V, by iterating over combinations of increasing size.
inline int omega_r(const hic::Graph& graph, int r) {
  const auto g = from(graph);
  if (g.n == 0) return 0;
  const auto sets = connected_sets(graph, r);
  std::vector<Mask> cover;
  for (Mask s : sets) cover.push_back(closed_nbhd(g, s));
  std::function<bool(std::size_t, int, Mask)> search = [&](std::size_t from, int left, Mask acc) {
    if (acc == full(g.n)) return true;
    if (left == 0) return false;
    for (std::size_t i = from; i < cover.size(); ++i) {
      if (search(i + 1, left - 1, acc | cover[i])) return true;
    }
    return false;
  };
  for (int k = 1;; ++k) {
    if (search(0, k, 0)) return k;
  }
}

/// r-supports of v: sets S, v ∉ S, |S| = r, G[S ∪ {v}] connected.
inline std::vector<Mask> supports(const hic::Graph& graph, int v, int r) {
  const auto g = from(graph);
  std::vector<Mask> out;
  for (Mask s = 0; s <= full(g.n); ++s) {
    if (!(s & (Mask{1} << v)) && std::popcount(s) == r && connected(g, s | (Mask{1} << v))) {
      out.push_back(s);
    }
    if (s == full(g.n)) break;
  }
  return out;
}

/// Vertices of G - N[S] by scanning each vertex's adjacency row.
inline std::vector<hic::Vertex> outside_closed_nbhd(const hic::Graph& g,
                                                    const std::vector<hic::Vertex>& s) {
  std::vector<hic::Vertex> keep;
  for (hic::Vertex v = 0; v < g.size(); ++v) {
    bool hit = false;
    for (auto x : s) hit = hit || x == v || g.adjacent(x, v);
    if (!hit) keep.push_back(v);
  }
  return keep;
}

// Smith form via determinantal divisors: d_k = gcd of all k x k minors,
// invariant factor s_k = d_k / d_{k-1}. Only for tiny dense matrices.
using Big = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

inline Big det(std::vector<std::vector<Big>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  Big sign = 1;
  Big prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return n == 0 ? Big(1) : sign * m[n - 1][n - 1];
}

inline std::vector<Big> invariant_factors(const std::vector<std::vector<Big>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Big> out;
  Big previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Big g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t depth) {
      if (depth == k) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t i = start; i < rows; ++i) {
        ri[depth] = i;
        pick_rows(i + 1, depth + 1);
      }
    };
    pick_cols = [&](std::size_t start, std::size_t depth) {
      if (depth == k) {
        std::vector<std::vector<Big>> sub(k, std::vector<Big>(k));
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
        }
        Big d = det(sub);
        if (d < 0) d = -d;
        Big x = g;
        Big y = d;
        while (y != 0) {
          Big t = x % y;
          x = y;
          y = t;
        }
        g = x;
        return;
      }
      for (std::size_t j = start; j < cols; ++j) {
        ci[depth] = j;
        pick_cols(j + 1, depth + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace oracle
