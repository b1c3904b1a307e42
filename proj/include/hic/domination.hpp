#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hic/graph.hpp"
#include "hic/json.hpp"

namespace hic {

class DominationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optimal value plus a witness. Every witness element is a vertex set:
/// singletons for gamma_r and strong domination, connected sets of size <= r
/// for omega_r. |witness| == value.
struct DominationCertificate {
  std::string problem;  // "gamma_r", "omega_r" or "strong"
  unsigned r = 0;
  std::size_t value = 0;
  std::vector<VertexSet> witness;
};

/// γ_r(G): fewest vertices whose radius-r balls cover V(G).
DominationCertificate distance_domination_number(const Graph& g, unsigned r);
/// ω_r(G): fewest connected sets of size <= r whose closed neighborhoods cover V(G).
DominationCertificate set_domination_number(const Graph& g, unsigned r);
/// Γ₀(G): fewest vertices S with N(v) ∩ S nonempty for every v. Throws
/// DominationError if G has an isolated vertex.
DominationCertificate strong_domination_number(const Graph& g);

/// Checks the witness against the definition of its problem.
bool is_feasible(const Graph& g, const DominationCertificate& cert);

/// Connected vertex sets of size 1..max_size, each containing `anchor` when
/// given, ordered by size then lexicographically.
std::vector<VertexSet> enumerate_connected_sets(const Graph& g, std::size_t max_size,
                                                std::optional<Vertex> anchor = std::nullopt);

struct Support {
  VertexSet set;
  bool induced_connected = false;      // G[S] connected
  bool dominates_neighborhood = false;  // N(v) ⊆ N[S]
};

struct SupportFamily {
  Vertex v = 0;
  unsigned r = 0;
  std::vector<Support> supports;

  bool all_induced_connected() const;
  bool all_dominate_neighborhood() const;
};

/// r-supports of v: S with v ∉ S, |S| = r, G[S ∪ {v}] connected. r = 0 gives
/// the single empty support.
SupportFamily supports(const Graph& g, Vertex v, unsigned r);

/// Exact minimum set cover of {0..universe-1}; returns indices into `sets`.
/// Throws DominationError when the sets do not cover the universe.
std::vector<std::size_t> minimum_set_cover(std::size_t universe,
                                           const std::vector<VertexSet>& sets);

/// `{"problem":"gamma_r","r":2,"value":1,"witness":[["4"]]}`
Json to_json(const DominationCertificate& cert);
Json to_json(const SupportFamily& family);

}  // namespace hic
