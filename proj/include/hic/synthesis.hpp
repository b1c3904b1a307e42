#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "hic/graph.hpp"
#include "hic/homotopy_type.hpp"
#include "hic/json.hpp"

namespace hic {

class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Summand {
  std::size_t d = 1;  // number of spheres
  std::size_t k = 1;  // each of dimension r*k - 1
  friend bool operator==(const Summand&, const Summand&) = default;
};

struct WedgeSpec {
  unsigned r = 2;
  std::vector<Summand> summands;
};

/// Parses "d1:k1,d2:k2,...".
std::vector<Summand> parse_summands(std::string_view text);

struct VertexLabel {
  enum class Role { kSpine, kHub, kHubPath };
  Role role = Role::kSpine;
  /// kSpine: i for v_i (1-based). Otherwise the 1-based summand index.
  std::size_t index = 0;
  /// kHub, kHubPath: the hub vertex this belongs to.
  Vertex hub = 0;
  /// kHubPath: distance from the hub along its path (1-based).
  std::size_t position = 0;
};

struct SynthesisResult {
  Graph graph;
  std::vector<VertexLabel> labels;
  HomotopyType expected = HomotopyType::contractible();
  /// Hub vertices grouped by summand.
  std::vector<std::vector<Vertex>> hubs;
};

struct SynthesisLimits {
  std::size_t max_vertices = 1 << 14;
};

/// Vertices: v_1..v_r as 0..r-1, then the hubs in summand order, then each
/// hub's path (hub excluded) in hub order. Every hub sees every vertex of
/// every other hub's path.
SynthesisResult synthesize_chordal(const WedgeSpec& spec, const SynthesisLimits& limits = {});

/// Wedge of d_i copies of S^{r k_i - 1}, equal dimensions merged.
HomotopyType expected_wedge(const WedgeSpec& spec);

/// {"r":..,"summands":[..],"labels":[..],"expected":{..}}
Json sidecar_json(const WedgeSpec& spec, const SynthesisResult& result);

}  // namespace hic
