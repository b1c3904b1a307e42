#include "hic/synthesis.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <string>

namespace hic {

namespace {

void validate(const WedgeSpec& spec) {
  if (spec.r < 2) throw SynthesisError("r must be at least 2");
  if (spec.summands.empty()) throw SynthesisError("at least one summand is required");
  for (const auto& s : spec.summands) {
    if (s.d < 1 || s.k < 1) throw SynthesisError("summand counts and dimensions must be positive");
  }
}

std::size_t checked_add(std::size_t a, std::size_t b) {
  if (a > std::numeric_limits<std::size_t>::max() - b) throw SynthesisError("vertex count overflow");
  return a + b;
}

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (b != 0 && a > std::numeric_limits<std::size_t>::max() / b) {
    throw SynthesisError("vertex count overflow");
  }
  return a * b;
}

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw SynthesisError("bad summand list '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::vector<Summand> parse_summands(std::string_view text) {
  std::vector<Summand> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(start, end - start);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw SynthesisError("summand '" + std::string(item) + "' is not d:k");
    out.push_back({parse_count(item.substr(0, colon), text), parse_count(item.substr(colon + 1), text)});
    start = end + 1;
  }
  return out;
}

HomotopyType expected_wedge(const WedgeSpec& spec) {
  validate(spec);
  std::map<int, std::uint64_t> spheres;
  for (const auto& s : spec.summands) {
    spheres[static_cast<int>(checked_mul(spec.r, s.k) - 1)] += s.d;
  }
  return HomotopyType::wedge(std::move(spheres));
}

SynthesisResult synthesize_chordal(const WedgeSpec& spec, const SynthesisLimits& limits) {
  validate(spec);
  const std::size_t r = spec.r;

  std::size_t total = r;
  for (const auto& s : spec.summands) {
    const auto path = checked_add(checked_mul(r + 2, s.k - 1), 1);
    total = checked_add(total, checked_mul(s.d, path));
  }
  if (total > limits.max_vertices) {
    throw SynthesisError("synthesized graph needs " + std::to_string(total) +
                         " vertices, above the limit of " + std::to_string(limits.max_vertices));
  }

  SynthesisResult result;
  result.labels.resize(total);
  for (std::size_t i = 0; i < r; ++i) result.labels[i] = {VertexLabel::Role::kSpine, i + 1, 0, 0};

  Vertex next = static_cast<Vertex>(r);
  std::vector<Vertex> all_hubs;
  std::vector<std::size_t> hub_k;
  for (std::size_t i = 0; i < spec.summands.size(); ++i) {
    result.hubs.emplace_back();
    for (std::size_t j = 0; j < spec.summands[i].d; ++j) {
      result.labels[next] = {VertexLabel::Role::kHub, i + 1, next, 0};
      result.hubs.back().push_back(next);
      all_hubs.push_back(next);
      hub_k.push_back(spec.summands[i].k);
      ++next;
    }
  }

  // paths[h] lists the hub followed by its path vertices.
  std::vector<std::vector<Vertex>> paths;
  for (std::size_t h = 0; h < all_hubs.size(); ++h) {
    const Vertex hub = all_hubs[h];
    paths.push_back({hub});
    const std::size_t extra = (r + 2) * (hub_k[h] - 1);
    for (std::size_t p = 1; p <= extra; ++p) {
      result.labels[next] = {VertexLabel::Role::kHubPath, result.labels[hub].index, hub, p};
      paths.back().push_back(next++);
    }
  }

  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
  const Vertex vr = static_cast<Vertex>(r - 1);
  for (std::size_t a = 0; a < all_hubs.size(); ++a) {
    edges.emplace_back(vr, all_hubs[a]);
    for (std::size_t b = a + 1; b < all_hubs.size(); ++b) edges.emplace_back(all_hubs[a], all_hubs[b]);
  }
  for (const auto& path : paths) {
    for (std::size_t p = 0; p + 1 < path.size(); ++p) edges.emplace_back(path[p], path[p + 1]);
  }
  for (std::size_t a = 0; a < all_hubs.size(); ++a) {
    for (std::size_t b = 0; b < paths.size(); ++b) {
      if (a == b) continue;
      for (std::size_t p = 1; p < paths[b].size(); ++p) edges.emplace_back(all_hubs[a], paths[b][p]);
    }
  }

  result.graph = Graph(total, edges);
  result.expected = expected_wedge(spec);
  return result;
}

Json sidecar_json(const WedgeSpec& spec, const SynthesisResult& result) {
  Json summands = Json::array();
  for (const auto& s : spec.summands) summands.push_back({{"d", s.d}, {"k", s.k}});
  Json labels = Json::array();
  for (std::size_t v = 0; v < result.labels.size(); ++v) {
    const auto& l = result.labels[v];
    Json entry = {{"vertex", std::to_string(v)}};
    switch (l.role) {
      case VertexLabel::Role::kSpine:
        entry["role"] = "spine";
        entry["index"] = l.index;
        break;
      case VertexLabel::Role::kHub:
        entry["role"] = "hub";
        entry["summand"] = l.index;
        break;
      case VertexLabel::Role::kHubPath:
        entry["role"] = "hub_path";
        entry["summand"] = l.index;
        entry["hub"] = std::to_string(l.hub);
        entry["position"] = l.position;
        break;
    }
    labels.push_back(std::move(entry));
  }
  return {{"r", spec.r}, {"summands", summands}, {"labels", labels}, {"expected", to_json(result.expected)}};
}

}  // namespace hic
