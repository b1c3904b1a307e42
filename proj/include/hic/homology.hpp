#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "hic/json.hpp"

#include "hic/complex.hpp"
#include "hic/homotopy_type.hpp"

namespace hic {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

class HomologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse integer matrix; only nonzero entries are stored.
class IntegerMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<Index, BigInt>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  BigInt get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, BigInt value);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Index, BigInt> entries_;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

/// ∂_d: rows indexed by the (d-1)-faces, columns by the d-faces, in the
/// complex's face order. ∂_0 is the augmentation onto the empty face.
/// Throws HomologyError when d < 0 or d > dim(K) + 1.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d);

struct SmithForm {
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<BigInt> factors;
  std::size_t rank = 0;
};

/// Exact Smith normal form. Runs in checked 64-bit arithmetic and reruns in
/// arbitrary precision if any intermediate value overflows.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Rank over GF(p); p must be prime.
std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p);

struct HomologyGroup {
  std::uint64_t betti = 0;
  /// Invariant factors > 1 in divisibility order.
  std::vector<BigInt> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced integral homology in dimensions -1..top_dimension(). Equality
/// compares the nonzero groups only.
class HomologyProfile {
 public:
  /// Profile of the void complex: no dimensions at all.
  HomologyProfile() = default;
  explicit HomologyProfile(int top_dimension) : top_(top_dimension) {}

  int top_dimension() const { return top_; }
  void set(int d, HomologyGroup group);

  std::uint64_t betti(int d) const;
  const std::vector<BigInt>& torsion(int d) const;
  const std::map<int, HomologyGroup>& nonzero() const { return groups_; }

  bool is_zero() const { return groups_.empty(); }
  bool torsion_free() const;
  /// H̃_j = 0 for every j <= d.
  bool vanishes_through(int d) const;
  /// Sum of (-1)^d betti_d.
  std::int64_t euler_characteristic() const;

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    return a.groups_ == b.groups_;
  }

 private:
  int top_ = -2;
  std::map<int, HomologyGroup> groups_;
};

HomologyProfile reduced_homology(const SimplicialComplex& k);

/// dim H̃_d(K; Z/p) for d = -1..dim(K). Throws HomologyError unless p is prime.
std::vector<std::uint64_t> betti_mod_p(const SimplicialComplex& k, std::uint64_t p);

/// Homology predicted by a symbolic homotopy type.
HomologyProfile homology_of_type(const HomotopyType& t);

bool is_prime(std::uint64_t p);

/// `{"dims":[{"d":1,"betti":1,"torsion":[]},...]}`, all-zero dimensions omitted.
Json to_json(const HomologyProfile& profile);

}  // namespace hic
