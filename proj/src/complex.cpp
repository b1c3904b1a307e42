#include "hic/complex.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hic {

void SimplicialComplex::finalize() {
  index_.clear();
  for (auto& level : by_dim_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    for (std::size_t i = 0; i < level.size(); ++i) index_.emplace(level[i], i);
  }
  while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count,
                                                std::vector<VertexSet> faces) {
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  for (auto& face : faces) {
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) {
      throw ComplexError("face with a repeated vertex");
    }
    if (!face.empty() && face.back() >= vertex_count) {
      throw ComplexError("face vertex " + std::to_string(face.back()) + " out of range");
    }
    if (k.by_dim_.size() <= face.size()) k.by_dim_.resize(face.size() + 1);
    k.by_dim_[face.size()].push_back(std::move(face));
  }
  k.finalize();
  VertexSet sub;
  for (const auto& level : k.by_dim_) {
    for (const auto& face : level) {
      for (std::size_t skip = 0; skip < face.size(); ++skip) {
        sub.assign(face.begin(), face.end());
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(skip));
        if (!k.contains(sub)) throw ComplexError("face set is not closed under subsets");
      }
    }
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 const std::vector<VertexSet>& facets) {
  std::vector<VertexSet> faces;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    if (facet.size() >= 31) throw ComplexError("facet too large to close downward");
    const std::uint32_t subsets = 1u << facet.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      VertexSet face;
      for (std::size_t i = 0; i < facet.size(); ++i) {
        if (mask & (1u << i)) face.push_back(facet[i]);
      }
      faces.push_back(std::move(face));
    }
  }
  if (facets.empty()) return SimplicialComplex{};
  return from_faces(vertex_count, std::move(faces));
}

SimplicialComplex SimplicialComplex::full_simplex(std::size_t n) {
  VertexSet all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  return from_facets(n, {all});
}

const std::vector<VertexSet>& SimplicialComplex::faces(int dim) const {
  static const std::vector<VertexSet> kNone;
  const int slot = dim + 1;
  if (slot < 0 || slot >= static_cast<int>(by_dim_.size())) return kNone;
  return by_dim_[slot];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : by_dim_) f.push_back(level.size());
  return f;
}

std::optional<std::size_t> SimplicialComplex::index_of(const VertexSet& face) const {
  const auto it = index_.find(face);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
  std::vector<VertexSet> out;
  for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

// r-independence --------------------------------------------------------------

bool is_r_independent(const Graph& g, const VertexSet& a, unsigned r) {
  if (r == 0) throw ComplexError("r must be positive");
  const VertexSet set = make_vertex_set(g, a);
  std::vector<char> member(g.size(), 0);
  for (Vertex v : set) member[v] = 1;
  std::vector<Vertex> stack;
  for (Vertex start : set) {
    if (member[start] != 1) continue;
    member[start] = 2;
    stack.assign(1, start);
    std::size_t size = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (member[w] == 1) {
          member[w] = 2;
          ++size;
          stack.push_back(w);
        }
      }
    }
    if (size > r) return false;
  }
  return true;
}

namespace {

class IndEnumerator {
 public:
  IndEnumerator(const Graph& g, unsigned r, const BuildLimits& limits,
                std::vector<std::vector<VertexSet>>& out)
      : g_(g), r_(r), limits_(limits), out_(out), member_(g.size(), 0), mark_(g.size(), 0) {}

  void run() {
    emit();
    extend(0);
  }

 private:
  // Size of the component of w in G[current ∪ {w}], capped at r + 1.
  std::size_t component_with(Vertex w) {
    ++stamp_;
    mark_[w] = stamp_;
    scratch_.assign(1, w);
    for (std::size_t head = 0; head < scratch_.size(); ++head) {
      for (Vertex x : g_.neighbors(scratch_[head])) {
        if (member_[x] && mark_[x] != stamp_) {
          mark_[x] = stamp_;
          scratch_.push_back(x);
          if (scratch_.size() > r_) return scratch_.size();
        }
      }
    }
    return scratch_.size();
  }

  void emit() {
    if (++emitted_ > limits_.max_faces) throw ResourceError("face", limits_.max_faces);
    if (out_.size() <= current_.size()) out_.resize(current_.size() + 1);
    out_[current_.size()].push_back(current_);
  }

  void extend(Vertex from) {
    if (limits_.max_dim && static_cast<int>(current_.size()) > *limits_.max_dim) return;
    for (Vertex w = from; w < g_.size(); ++w) {
      if (component_with(w) > r_) continue;
      current_.push_back(w);
      member_[w] = 1;
      emit();
      extend(w + 1);
      member_[w] = 0;
      current_.pop_back();
    }
  }

  const Graph& g_;
  unsigned r_;
  const BuildLimits& limits_;
  std::vector<std::vector<VertexSet>>& out_;
  std::vector<char> member_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<Vertex> scratch_;
  VertexSet current_;
  std::size_t emitted_ = 0;
};

}  // namespace

SimplicialComplex build_ind_complex(const Graph& g, unsigned r, const BuildLimits& limits) {
  if (r == 0) throw ComplexError("r must be positive");
  if (limits.max_faces == 0) throw ComplexError("max_faces must be at least 1");
  SimplicialComplex k;
  k.vertex_count_ = g.size();
  IndEnumerator(g, r, limits, k.by_dim_).run();
  k.finalize();
  return k;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  const auto f = k.f_vector();
  for (std::size_t slot = 0; slot < f.size(); ++slot) {
    // slot 0 is dimension -1.
    const auto count = static_cast<std::int64_t>(f[slot]);
    chi += (slot % 2 == 0) ? -count : count;
  }
  return chi;
}

std::vector<VertexSet> star(const SimplicialComplex& k, const VertexSet& sigma) {
  std::vector<VertexSet> out;
  VertexSet joined;
  for (int d = -1; d <= k.dimension(); ++d) {
    for (const auto& tau : k.faces(d)) {
      joined.clear();
      std::set_union(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                     std::back_inserter(joined));
      if (k.contains(joined)) out.push_back(tau);
    }
  }
  return out;
}

std::string dump_complex(const SimplicialComplex& k) {
  std::ostringstream out;
  for (int d = -1; d <= k.dimension(); ++d) {
    out << "=== dim " << d << " ===\n";
    for (const auto& face : k.faces(d)) {
      for (std::size_t i = 0; i < face.size(); ++i) out << (i ? "," : "") << face[i];
      out << '\n';
    }
  }
  return out.str();
}

SimplicialComplex parse_complex_dump(std::string_view text, std::size_t vertex_count) {
  std::vector<VertexSet> faces;
  std::optional<int> dim;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.starts_with("=== dim ")) {
      int d = 0;
      const auto body = line.substr(8);
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), d);
      if (ec != std::errc()) throw ComplexError("bad separator on line " + std::to_string(line_no));
      dim = d;
      continue;
    }
    if (!dim) throw ComplexError("face before first separator on line " + std::to_string(line_no));
    VertexSet face;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto comma = line.find(',', pos);
      const auto token = line.substr(pos, comma == std::string_view::npos ? line.size() - pos
                                                                          : comma - pos);
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ComplexError("bad vertex id on line " + std::to_string(line_no));
      }
      face.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (static_cast<int>(face.size()) != *dim + 1) {
      throw ComplexError("face size does not match its dimension on line " +
                         std::to_string(line_no));
    }
    faces.push_back(std::move(face));
  }
  if (faces.empty()) return SimplicialComplex{};
  return SimplicialComplex::from_faces(vertex_count, std::move(faces));
}

}  // namespace hic
