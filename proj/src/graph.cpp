#include "hic/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "hic/random.hpp"

namespace hic {

Graph::Graph(std::size_t n) : adjacency_(n), matrix_(n * n, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references a vertex outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    auto& cell = matrix_[static_cast<std::size_t>(u) * n + v];
    if (cell) continue;
    cell = 1;
    matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// Parsing ---------------------------------------------------------------------

namespace {

// Adjacency is stored densely as well as in lists.
constexpr std::uint64_t kMaxParsedVertices = 1u << 14;

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_natural(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    last_line = line_no;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two integers, got " + std::to_string(tokens.size()) +
                                    " tokens");
    }
    const auto a = parse_natural(tokens[0], line_no);
    const auto b = parse_natural(tokens[1], line_no);
    if (!header) {
      if (a > kMaxParsedVertices) {
        throw ParseError(line_no, "n=" + std::to_string(a) + " exceeds the supported maximum of " +
                                      std::to_string(kMaxParsedVertices));
      }
      header.emplace(a, b);
      continue;
    }
    if (edges.size() == header->second) {
      throw ParseError(line_no, "more edge lines than the declared " +
                                    std::to_string(header->second));
    }
    if (a >= header->first || b >= header->first) {
      throw ParseError(line_no, "vertex id out of range for n=" + std::to_string(header->first));
    }
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!header) throw ParseError(line_no, "missing 'n m' header");
  if (edges.size() != header->second) {
    throw ParseError(last_line, "declared " + std::to_string(header->second) +
                                    " edges but found " + std::to_string(edges.size()));
  }
  return Graph(header->first, edges);
}

std::string serialize_graph(const Graph& g) {
  const auto edges = g.edges();
  std::ostringstream out;
  out << g.size() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write graph file '" + path + "'");
  out << serialize_graph(g);
}

// Subgraphs and neighborhoods -------------------------------------------------

VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (!vertices.empty() && vertices.back() >= g.size()) {
    throw GraphError("vertex " + std::to_string(vertices.back()) + " out of range for n=" +
                     std::to_string(g.size()));
  }
  return vertices;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  const VertexSet keep = make_vertex_set(g, vertices);
  std::vector<std::int64_t> index(g.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (w > keep[i] && index[w] >= 0) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(index[w]));
      }
    }
  }
  return Subgraph{Graph(keep.size(), edges), keep};
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : make_vertex_set(g, s)) {
    out.insert(out.end(), g.neighbors(v).begin(), g.neighbors(v).end());
  }
  return make_vertex_set(g, std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  auto out = open_neighborhood(g, s);
  out.insert(out.end(), s.begin(), s.end());
  return make_vertex_set(g, std::move(out));
}

Subgraph delete_closed_neighborhood(const Graph& g, const VertexSet& s) {
  const auto removed = closed_neighborhood(g, s);
  VertexSet keep;
  std::size_t j = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (j < removed.size() && removed[j] == v) {
      ++j;
      continue;
    }
    keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.size(), 0);
  for (Vertex start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    VertexSet comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  std::vector<char> member(g.size(), 0);
  for (Vertex v : s) member[v] = 1;
  std::vector<Vertex> stack{s.front()};
  member[s.front()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (member[w] == 1) {
        member[w] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

// Distances -------------------------------------------------------------------

std::vector<Distance> bfs_distances(const Graph& g, const VertexSet& sources) {
  std::vector<Distance> dist(g.size());
  std::queue<Vertex> queue;
  for (Vertex s : make_vertex_set(g, sources)) {
    dist[s] = 0;
    queue.push(s);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

Distance distance_to_set(const Graph& g, Vertex v, const VertexSet& targets) {
  if (targets.empty()) throw GraphError("distance to an empty vertex set is undefined");
  if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return bfs_distances(g, targets)[v];
}

VertexSet second_neighborhood(const Graph& g, Vertex v) {
  const auto dist = bfs_distances(g, {v});
  VertexSet out;
  for (Vertex w = 0; w < g.size(); ++w) {
    if (dist[w] && *dist[w] == 2) out.push_back(w);
  }
  return out;
}

// Chordality ------------------------------------------------------------------

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, g.neighbors(v)); }

std::vector<Vertex> simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (is_simplicial(g, v)) out.push_back(v);
  }
  return out;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != g.size()) return false;
  std::vector<std::size_t> position(g.size(), g.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.size() || position[order[i]] != g.size()) return false;
    position[order[i]] = i;
  }
  std::vector<Vertex> later;
  for (Vertex v : order) {
    later.clear();
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) later.push_back(w);
    }
    if (!is_clique(g, later)) return false;
  }
  return true;
}

namespace {

std::vector<Vertex> lex_bfs(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<Vertex> best;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (!best || label[v] > label[*best]) best = v;
    }
    visited[*best] = 1;
    visit.push_back(*best);
    for (Vertex w : g.neighbors(*best)) {
      if (!visited[w]) label[w].push_back(n - step);
    }
  }
  return visit;
}

std::vector<Vertex> find_chordless_cycle(const Graph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const Vertex a = nbrs[i];
        const Vertex b = nbrs[j];
        if (g.adjacent(a, b)) continue;
        // Shortest a-b path avoiding N[v] apart from a and b is induced.
        std::vector<char> blocked(g.size(), 0);
        blocked[v] = 1;
        for (Vertex w : nbrs) blocked[w] = 1;
        blocked[a] = blocked[b] = 0;
        std::vector<std::int64_t> parent(g.size(), -1);
        std::queue<Vertex> queue;
        queue.push(a);
        parent[a] = a;
        while (!queue.empty() && parent[b] < 0) {
          const Vertex x = queue.front();
          queue.pop();
          for (Vertex y : g.neighbors(x)) {
            if (!blocked[y] && parent[y] < 0) {
              parent[y] = x;
              queue.push(y);
            }
          }
        }
        if (parent[b] < 0) continue;
        std::vector<Vertex> path;
        for (Vertex x = b; x != a; x = static_cast<Vertex>(parent[x])) path.push_back(x);
        path.push_back(a);
        std::reverse(path.begin(), path.end());
        std::vector<Vertex> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

PeoCertificate chordality(const Graph& g) {
  PeoCertificate cert;
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  if (is_perfect_elimination_order(g, order)) {
    cert.chordal = true;
    cert.order = std::move(order);
  } else {
    cert.chordless_cycle = find_chordless_cycle(g);
  }
  return cert;
}

// Generators ------------------------------------------------------------------

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kWheel: return "wheel";
    case Family::kComplete: return "complete";
    case Family::kStarOfPaths: return "star_of_paths";
    case Family::kErdosRenyi: return "erdos_renyi";
    case Family::kRandomChordal: return "random_chordal";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kPath, Family::kCycle, Family::kWheel, Family::kComplete,
                   Family::kStarOfPaths, Family::kErdosRenyi, Family::kRandomChordal}) {
    if (family_name(f) == name) return f;
  }
  throw GraphError("unknown graph family '" + std::string(name) + "'");
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, edges);
}

Graph wheel_graph(std::size_t n) {
  if (n < 3) throw GraphError("wheel needs n >= 3");
  std::vector<Edge> edges;
  const auto hub = static_cast<Vertex>(n);
  for (Vertex i = 0; i < n; ++i) {
    edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    edges.emplace_back(i, hub);
  }
  return Graph(n + 1, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph star_of_paths(std::size_t arms, std::size_t length) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t a = 0; a < arms; ++a) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < length; ++i, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return Graph(next, edges);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw GraphError("edge probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (bernoulli(rng, p)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph random_chordal(std::size_t n, std::uint64_t seed) {
  // Each new vertex attaches to a random clique of the current graph: an
  // anchor u plus a random subset of the clique u itself was attached to.
  // The earlier neighbors of every vertex form a clique, so the reverse
  // insertion order is a perfect elimination ordering.
  Rng rng(seed);
  std::vector<std::vector<Vertex>> attached(n);
  std::vector<Edge> edges;
  for (Vertex w = 1; w < n; ++w) {
    const auto anchor = static_cast<Vertex>(uniform_below(rng, w));
    std::vector<Vertex> clique{anchor};
    for (Vertex x : attached[anchor]) {
      if (bernoulli(rng, 0.5)) clique.push_back(x);
    }
    std::sort(clique.begin(), clique.end());
    for (Vertex x : clique) edges.emplace_back(x, w);
    attached[w] = std::move(clique);
  }
  return Graph(n, edges);
}

Graph generate_graph(const GeneratorSpec& spec) {
  const auto need = [&](std::size_t count) {
    if (spec.params.size() != count) {
      throw GraphError(std::string(family_name(spec.family)) + " expects " +
                       std::to_string(count) + " parameter(s), got " +
                       std::to_string(spec.params.size()));
    }
    for (auto p : spec.params) {
      if (p < 0) throw GraphError("generator parameters must be non-negative");
    }
  };
  const auto param = [&](std::size_t i) { return static_cast<std::size_t>(spec.params[i]); };
  const std::uint64_t seed = spec.seed.value_or(0);
  switch (spec.family) {
    case Family::kPath: need(1); return path_graph(param(0));
    case Family::kCycle: need(1); return cycle_graph(param(0));
    case Family::kWheel: need(1); return wheel_graph(param(0));
    case Family::kComplete: need(1); return complete_graph(param(0));
    case Family::kStarOfPaths: need(2); return star_of_paths(param(0), param(1));
    case Family::kErdosRenyi: need(1); return erdos_renyi(param(0), spec.edge_probability, seed);
    case Family::kRandomChordal: need(1); return random_chordal(param(0), seed);
  }
  throw GraphError("unhandled generator family");
}

}  // namespace hic
