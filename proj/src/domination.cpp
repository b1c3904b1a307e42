#include "hic/domination.hpp"

#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

namespace hic {

namespace {

using Bits = boost::dynamic_bitset<>;

class CoverSearch {
 public:
  CoverSearch(std::size_t universe, const std::vector<VertexSet>& sets) : universe_(universe) {
    Bits all(universe);
    for (const auto& s : sets) {
      Bits b(universe);
      for (auto e : s) b.set(e);
      all |= b;
      sets_.push_back(std::move(b));
    }
    if (all.count() != universe) throw DominationError("sets do not cover the universe");
    drop_dominated_sets();
    index_elements();
  }

  std::vector<std::size_t> solve() {
    Bits uncovered(universe_);
    uncovered.set();
    for (std::size_t e = 0; e < universe_; ++e) {
      if (implied_[e]) uncovered.reset(e);
    }
    best_ = greedy(uncovered);
    search(uncovered);
    std::vector<std::size_t> out;
    for (auto s : best_) out.push_back(original_[s]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // A set contained in another set is never needed.
  void drop_dominated_sets() {
    std::vector<std::size_t> order(sets_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return sets_[a].count() > sets_[b].count();
    });
    std::vector<Bits> kept;
    for (auto i : order) {
      bool covered = false;
      for (const auto& k : kept) {
        if (sets_[i].is_subset_of(k)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        kept.push_back(sets_[i]);
        original_.push_back(i);
      }
    }
    sets_ = std::move(kept);
  }

  // Element f is implied by e when every set containing e also contains f.
  void index_elements() {
    containing_.assign(universe_, {});
    std::vector<Bits> membership(universe_, Bits(sets_.size()));
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      for (auto e = sets_[s].find_first(); e != Bits::npos; e = sets_[s].find_next(e)) {
        containing_[e].push_back(s);
        membership[e].set(s);
      }
    }
    implied_.assign(universe_, false);
    for (std::size_t f = 0; f < universe_; ++f) {
      for (std::size_t e = 0; e < universe_ && !implied_[f]; ++e) {
        if (e == f || implied_[e]) continue;
        if (membership[e].is_subset_of(membership[f])) implied_[f] = true;
      }
    }
  }

  std::vector<std::size_t> greedy(Bits uncovered) const {
    std::vector<std::size_t> chosen;
    while (uncovered.any()) {
      std::size_t best = 0;
      std::size_t gain = 0;
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        const auto g = (sets_[s] & uncovered).count();
        if (g > gain) {
          gain = g;
          best = s;
        }
      }
      chosen.push_back(best);
      uncovered -= sets_[best];
    }
    return chosen;
  }

  void search(const Bits& uncovered) {
    if (uncovered.none()) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + 1 >= best_.size()) return;

    std::size_t max_gain = 0;
    for (const auto& s : sets_) max_gain = std::max(max_gain, (s & uncovered).count());
    const auto remaining = uncovered.count();
    const auto lower = (remaining + max_gain - 1) / max_gain;
    if (current_.size() + lower >= best_.size()) return;

    std::size_t pick = Bits::npos;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      if (pick == Bits::npos || containing_[e].size() < containing_[pick].size()) pick = e;
    }
    auto branches = containing_[pick];
    std::vector<std::size_t> gains(sets_.size(), 0);
    for (auto s : branches) gains[s] = (sets_[s] & uncovered).count();
    std::stable_sort(branches.begin(), branches.end(),
                     [&](std::size_t a, std::size_t b) { return gains[a] > gains[b]; });
    for (auto s : branches) {
      current_.push_back(s);
      search(uncovered - sets_[s]);
      current_.pop_back();
      if (current_.size() + 1 >= best_.size()) return;
    }
  }

  std::size_t universe_;
  std::vector<Bits> sets_;
  std::vector<std::size_t> original_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<bool> implied_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
};

// Candidate sets per component, and the vertices each one covers.
struct Candidates {
  std::vector<VertexSet> members;
  std::vector<VertexSet> covers;
};

template <typename Build>
DominationCertificate solve_by_component(const Graph& g, std::string problem, unsigned r,
                                         Build build) {
  DominationCertificate cert;
  cert.problem = std::move(problem);
  cert.r = r;
  for (const auto& component : connected_components(g)) {
    const auto sub = induced_subgraph(g, component);
    const Candidates c = build(sub.graph);
    for (auto i : minimum_set_cover(sub.graph.size(), c.covers)) {
      VertexSet mapped;
      for (auto v : c.members[i]) mapped.push_back(sub.original[v]);
      std::sort(mapped.begin(), mapped.end());
      cert.witness.push_back(std::move(mapped));
    }
  }
  std::sort(cert.witness.begin(), cert.witness.end());
  cert.value = cert.witness.size();
  return cert;
}

VertexSet ball(const Graph& g, Vertex v, unsigned r) {
  const auto dist = bfs_distances(g, {v});
  VertexSet out;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (dist[u] && *dist[u] <= r) out.push_back(u);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> minimum_set_cover(std::size_t universe,
                                           const std::vector<VertexSet>& sets) {
  if (universe == 0) return {};
  for (const auto& s : sets) {
    for (auto e : s) {
      if (e >= universe) throw DominationError("set element outside the universe");
    }
  }
  return CoverSearch(universe, sets).solve();
}

DominationCertificate distance_domination_number(const Graph& g, unsigned r) {
  if (r == 0) throw DominationError("r must be positive");
  return solve_by_component(g, "gamma_r", r, [r](const Graph& h) {
    Candidates c;
    for (Vertex v = 0; v < h.size(); ++v) {
      c.members.push_back({v});
      c.covers.push_back(ball(h, v, r));
    }
    return c;
  });
}

DominationCertificate set_domination_number(const Graph& g, unsigned r) {
  if (r == 0) throw DominationError("r must be positive");
  return solve_by_component(g, "omega_r", r, [r](const Graph& h) {
    Candidates c;
    c.members = enumerate_connected_sets(h, r);
    for (const auto& a : c.members) c.covers.push_back(closed_neighborhood(h, a));
    return c;
  });
}

DominationCertificate strong_domination_number(const Graph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) {
      throw DominationError("vertex " + std::to_string(v) +
                            " is isolated; no strong dominating set exists");
    }
  }
  return solve_by_component(g, "strong", 1, [](const Graph& h) {
    Candidates c;
    for (Vertex v = 0; v < h.size(); ++v) {
      c.members.push_back({v});
      const auto n = h.neighbors(v);
      c.covers.emplace_back(n.begin(), n.end());
    }
    return c;
  });
}

bool is_feasible(const Graph& g, const DominationCertificate& cert) {
  if (cert.witness.size() != cert.value) return false;
  std::vector<bool> covered(g.size(), false);
  for (const auto& element : cert.witness) {
    for (auto v : element) {
      if (!g.contains(v)) return false;
    }
    VertexSet cover;
    if (cert.problem == "gamma_r") {
      if (element.size() != 1) return false;
      cover = ball(g, element[0], cert.r);
    } else if (cert.problem == "omega_r") {
      if (element.empty() || element.size() > cert.r || !is_connected_subset(g, element)) {
        return false;
      }
      cover = closed_neighborhood(g, element);
    } else if (cert.problem == "strong") {
      if (element.size() != 1) return false;
      cover = open_neighborhood(g, element);
    } else {
      return false;
    }
    for (auto v : cover) covered[v] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<VertexSet> enumerate_connected_sets(const Graph& g, std::size_t max_size,
                                                std::optional<Vertex> anchor) {
  if (max_size == 0) throw DominationError("max_size must be positive");
  if (anchor && !g.contains(*anchor)) throw DominationError("anchor outside the graph");
  std::vector<VertexSet> out;
  const std::size_t n = g.size();
  // Each set is grown from its root (its minimum vertex, or the anchor), and a
  // vertex joins the extension only through the first set member it touches.
  std::vector<int> near(n, 0);  // members of the current set or adjacent to it
  VertexSet current;

  auto allowed = [&](Vertex root, Vertex u) { return anchor ? u != root : u > root; };

  auto mark = [&](Vertex w, int delta) {
    near[w] += delta;
    for (auto u : g.neighbors(w)) near[u] += delta;
  };

  auto extend = [&](auto&& self, Vertex root, std::vector<Vertex> ext) -> void {
    out.push_back(current);
    if (current.size() == max_size) return;
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      auto next = ext;
      for (auto u : g.neighbors(w)) {
        if (near[u] == 0 && allowed(root, u)) next.push_back(u);
      }
      current.push_back(w);
      mark(w, 1);
      self(self, root, std::move(next));
      mark(w, -1);
      current.pop_back();
    }
  };

  auto grow = [&](Vertex root) {
    std::vector<Vertex> ext;
    for (auto u : g.neighbors(root)) {
      if (allowed(root, u)) ext.push_back(u);
    }
    current = {root};
    mark(root, 1);
    extend(extend, root, std::move(ext));
    mark(root, -1);
  };

  if (anchor) {
    grow(*anchor);
  } else {
    for (Vertex v = 0; v < n; ++v) grow(v);
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool SupportFamily::all_induced_connected() const {
  return std::all_of(supports.begin(), supports.end(),
                     [](const Support& s) { return s.induced_connected; });
}

bool SupportFamily::all_dominate_neighborhood() const {
  return std::all_of(supports.begin(), supports.end(),
                     [](const Support& s) { return s.dominates_neighborhood; });
}

SupportFamily supports(const Graph& g, Vertex v, unsigned r) {
  if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
  SupportFamily family;
  family.v = v;
  family.r = r;
  const auto nv = g.neighbors(v);
  auto make = [&](VertexSet s) {
    Support support;
    support.induced_connected = is_connected_subset(g, s);
    const auto ns = closed_neighborhood(g, s);
    support.dominates_neighborhood = std::includes(ns.begin(), ns.end(), nv.begin(), nv.end());
    support.set = std::move(s);
    return support;
  };
  if (r == 0) {
    family.supports.push_back(make({}));
    return family;
  }
  for (auto& s : enumerate_connected_sets(g, r + 1, v)) {
    if (s.size() != r + 1) continue;
    s.erase(std::find(s.begin(), s.end(), v));
    family.supports.push_back(make(std::move(s)));
  }
  return family;
}

namespace {

Json id_list(const VertexSet& s) {
  Json out = Json::array();
  for (auto v : s) out.push_back(std::to_string(v));
  return out;
}

}  // namespace

Json to_json(const DominationCertificate& cert) {
  Json witness = Json::array();
  for (const auto& element : cert.witness) witness.push_back(id_list(element));
  return {{"problem", cert.problem}, {"r", cert.r}, {"value", cert.value}, {"witness", witness}};
}

Json to_json(const SupportFamily& family) {
  Json list = Json::array();
  for (const auto& s : family.supports) {
    list.push_back({{"set", id_list(s.set)},
                    {"induced_connected", s.induced_connected},
                    {"dominates_neighborhood", s.dominates_neighborhood}});
  }
  return {{"vertex", std::to_string(family.v)}, {"r", family.r}, {"supports", list}};
}

}  // namespace hic
