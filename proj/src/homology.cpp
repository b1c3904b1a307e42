#include "hic/homology.hpp"

#include <string>

namespace hic {

BigInt IntegerMatrix::get(std::size_t row, std::size_t col) const {
  const auto it = entries_.find({row, col});
  return it == entries_.end() ? BigInt(0) : it->second;
}

void IntegerMatrix::set(std::size_t row, std::size_t col, BigInt value) {
  if (row >= rows_ || col >= cols_) throw HomologyError("matrix index out of range");
  if (value.is_zero()) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = std::move(value);
  }
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw HomologyError("matrix shapes do not compose");
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> b_rows(b.rows());
  for (const auto& [index, value] : b.entries()) b_rows[index.first].emplace_back(index.second, value);
  std::map<IntegerMatrix::Index, BigInt> acc;
  for (const auto& [index, value] : a.entries()) {
    for (const auto& [col, other] : b_rows[index.second]) acc[{index.first, col}] += value * other;
  }
  IntegerMatrix out(a.rows(), b.cols());
  for (auto& [index, value] : acc) out.set(index.first, index.second, std::move(value));
  return out;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  if (k.is_void()) throw HomologyError("boundary of the void complex");
  if (d < 0 || d > k.dimension() + 1) {
    throw HomologyError("boundary dimension " + std::to_string(d) + " outside 0.." +
                        std::to_string(k.dimension() + 1));
  }
  const auto& lower = k.faces(d - 1);
  const auto& upper = k.faces(d);
  IntegerMatrix m(lower.size(), upper.size());
  VertexSet facet;
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const auto& face = upper[col];
    for (std::size_t skip = 0; skip < face.size(); ++skip) {
      facet.assign(face.begin(), face.end());
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(skip));
      const auto row = k.index_of(facet);
      if (!row) throw HomologyError("complex is not closed under subsets");
      m.set(*row, col, skip % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

// Profiles --------------------------------------------------------------------

void HomologyProfile::set(int d, HomologyGroup group) {
  if (group.is_zero()) {
    groups_.erase(d);
  } else {
    groups_[d] = std::move(group);
  }
}

std::uint64_t HomologyProfile::betti(int d) const {
  const auto it = groups_.find(d);
  return it == groups_.end() ? 0 : it->second.betti;
}

const std::vector<BigInt>& HomologyProfile::torsion(int d) const {
  static const std::vector<BigInt> kNone;
  const auto it = groups_.find(d);
  return it == groups_.end() ? kNone : it->second.torsion;
}

bool HomologyProfile::torsion_free() const {
  for (const auto& [d, group] : groups_) {
    if (!group.torsion.empty()) return false;
  }
  return true;
}

bool HomologyProfile::vanishes_through(int d) const {
  return groups_.empty() || groups_.begin()->first > d;
}

std::int64_t HomologyProfile::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& [d, group] : groups_) {
    const auto b = static_cast<std::int64_t>(group.betti);
    chi += ((d % 2) + 2) % 2 == 0 ? b : -b;
  }
  return chi;
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
  if (k.is_void()) return HomologyProfile{};
  const int top = k.dimension();
  // ranks[d + 1] = rank ∂_d for d = -1..top+1, with ∂_{-1} = ∂_{top+1} = 0.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 3, 0);
  std::vector<std::vector<BigInt>> factors(ranks.size());
  for (int d = 0; d <= top; ++d) {
    auto snf = smith_normal_form(boundary_matrix(k, d));
    ranks[d + 1] = snf.rank;
    factors[d + 1] = std::move(snf.factors);
  }
  HomologyProfile profile(top);
  for (int d = -1; d <= top; ++d) {
    HomologyGroup group;
    group.betti = k.faces(d).size() - ranks[d + 1] - ranks[d + 2];
    for (const auto& f : factors[d + 2]) {
      if (f > 1) group.torsion.push_back(f);
    }
    profile.set(d, std::move(group));
  }
  return profile;
}

std::vector<std::uint64_t> betti_mod_p(const SimplicialComplex& k, std::uint64_t p) {
  if (!is_prime(p)) throw HomologyError("modulus " + std::to_string(p) + " is not prime");
  if (k.is_void()) return {};
  const int top = k.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 3, 0);
  for (int d = 0; d <= top; ++d) ranks[d + 1] = rank_mod_p(boundary_matrix(k, d), p);
  std::vector<std::uint64_t> out;
  for (int d = -1; d <= top; ++d) out.push_back(k.faces(d).size() - ranks[d + 1] - ranks[d + 2]);
  return out;
}

HomologyProfile homology_of_type(const HomotopyType& t) {
  switch (t.kind()) {
    case HomotopyType::Kind::kContractible: return HomologyProfile(0);
    case HomotopyType::Kind::kEmpty: {
      HomologyProfile profile(-1);
      profile.set(-1, HomologyGroup{1, {}});
      return profile;
    }
    case HomotopyType::Kind::kWedge: break;
  }
  HomologyProfile profile(t.spheres().rbegin()->first);
  for (const auto& [dim, count] : t.spheres()) profile.set(dim, HomologyGroup{count, {}});
  return profile;
}

Json to_json(const HomologyProfile& profile) {
  Json dims = Json::array();
  for (const auto& [d, group] : profile.nonzero()) {
    Json torsion = Json::array();
    for (const auto& t : group.torsion) {
      if (t <= std::numeric_limits<std::int64_t>::max()) {
        torsion.push_back(static_cast<std::int64_t>(t));
      } else {
        torsion.push_back(t.str());
      }
    }
    dims.push_back({{"d", d}, {"betti", group.betti}, {"torsion", torsion}});
  }
  return {{"dims", dims}};
}

}  // namespace hic
