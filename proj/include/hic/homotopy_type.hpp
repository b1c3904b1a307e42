#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>

#include "hic/json.hpp"

namespace hic {

class HomotopyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symbolic homotopy type: a point, the empty complex {∅} (the (-1)-sphere),
/// or a finite wedge of spheres stored as dimension -> multiplicity.
class HomotopyType {
 public:
  enum class Kind { kContractible, kEmpty, kWedge };

  static HomotopyType contractible() { return HomotopyType(Kind::kContractible, {}); }
  static HomotopyType empty() { return HomotopyType(Kind::kEmpty, {}); }
  static HomotopyType sphere(int dim, std::uint64_t count = 1);
  /// Zero counts are dropped; an all-zero map gives contractible().
  static HomotopyType wedge(std::map<int, std::uint64_t> spheres);

  Kind kind() const { return kind_; }
  bool is_contractible() const { return kind_ == Kind::kContractible; }
  bool is_empty() const { return kind_ == Kind::kEmpty; }
  bool is_wedge() const { return kind_ == Kind::kWedge; }
  const std::map<int, std::uint64_t>& spheres() const { return spheres_; }

  /// e.g. "contractible", "empty", "S^1 v 2xS^3".
  std::string to_string() const;

  friend bool operator==(const HomotopyType&, const HomotopyType&) = default;

 private:
  HomotopyType(Kind kind, std::map<int, std::uint64_t> spheres)
      : kind_(kind), spheres_(std::move(spheres)) {}

  Kind kind_ = Kind::kContractible;
  std::map<int, std::uint64_t> spheres_;
};

/// r-fold suspension: Σ^r(∅) = S^{r-1}, Σ^r(S^d) = S^{d+r}.
HomotopyType suspend(const HomotopyType& t, unsigned r);

/// One-point union; contractible summands vanish. Throws HomotopyError on an
/// Empty summand.
HomotopyType wedge_combine(std::span<const HomotopyType> parts);

/// Every wedge dimension d satisfies d + 1 = r*s with s >= 1.
bool dims_mod_r_valid(const HomotopyType& t, unsigned r);

Json to_json(const HomotopyType& t);
HomotopyType homotopy_type_from_json(const Json& j);

}  // namespace hic
