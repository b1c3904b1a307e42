#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>

#include "hic/homology.hpp"

namespace hic {

namespace {

struct Overflow {};

// Arithmetic used by the eliminator. The 64-bit variant keeps every value
// strictly inside ±2^62 so that negation and rounding never overflow.
struct Checked64 {
  using Int = std::int64_t;
  static constexpr Int kLimit = Int{1} << 62;

  static Int from(const BigInt& v) {
    if (v >= kLimit || v <= -kLimit) throw Overflow{};
    return static_cast<Int>(v);
  }
  static BigInt to_big(Int v) { return BigInt(v); }
  static Int abs(Int v) { return v < 0 ? -v : v; }
  static bool is_zero(Int v) { return v == 0; }
  static Int mul_sub(Int x, Int q, Int y) {
    Int prod = 0;
    Int out = 0;
    if (__builtin_mul_overflow(q, y, &prod) || __builtin_sub_overflow(x, prod, &out) ||
        out >= kLimit || out <= -kLimit) {
      throw Overflow{};
    }
    return out;
  }
  // Quotient rounded to nearest, so |b - q a| <= |a| / 2.
  static Int round_quot(Int b, Int a) {
    Int q = b / a;
    const Int r = b - q * a;
    if (2 * abs(r) > abs(a)) q += ((r < 0) == (a < 0)) ? 1 : -1;
    return q;
  }
};

struct Arbitrary {
  using Int = BigInt;
  static Int from(const BigInt& v) { return v; }
  static BigInt to_big(const Int& v) { return v; }
  static Int abs(const Int& v) { return v < 0 ? Int(-v) : v; }
  static bool is_zero(const Int& v) { return v.is_zero(); }
  static Int mul_sub(const Int& x, const Int& q, const Int& y) { return x - q * y; }
  static Int round_quot(const Int& b, const Int& a) {
    Int q = b / a;
    const Int r = b - q * a;
    if (2 * abs(r) > abs(a)) q += ((r < 0) == (a < 0)) ? 1 : -1;
    return q;
  }
};

// Diagonalizes a sparse matrix with unimodular row and column operations,
// choosing the smallest-magnitude pivot and, among those, the one with the
// least expected fill-in. The diagonal is not yet in divisibility order.
template <class A>
class Eliminator {
 public:
  using Int = typename A::Int;
  using Entry = std::pair<std::uint32_t, Int>;
  using Column = std::vector<Entry>;

  explicit Eliminator(const IntegerMatrix& m)
      : cols_(m.cols()), alive_(m.cols(), 1), row_cols_(m.rows()), row_count_(m.rows(), 0) {
    for (const auto& [index, value] : m.entries()) {
      const auto [row, col] = index;
      cols_[col].emplace_back(static_cast<std::uint32_t>(row), A::from(value));
    }
    for (std::uint32_t c = 0; c < cols_.size(); ++c) {
      for (const auto& [row, value] : cols_[c]) {
        row_cols_[row].push_back(c);
        ++row_count_[row];
      }
    }
  }

  std::vector<BigInt> run() {
    while (auto pivot = choose_pivot()) eliminate(pivot->first, pivot->second);
    return std::move(diagonal_);
  }

 private:
  const Int* find(std::uint32_t col, std::uint32_t row) const {
    const auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, std::uint32_t r) { return e.first < r; });
    return (it != c.end() && it->first == row) ? &it->second : nullptr;
  }

  std::optional<std::pair<std::uint32_t, std::uint32_t>> choose_pivot() const {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
    Int best_abs{};
    std::size_t best_cost = 0;
    for (std::uint32_t c = 0; c < cols_.size(); ++c) {
      if (!alive_[c]) continue;
      for (const auto& [row, value] : cols_[c]) {
        const Int mag = A::abs(value);
        const std::size_t cost = (cols_[c].size() - 1) * (row_count_[row] - 1);
        if (!best || mag < best_abs || (mag == best_abs && cost < best_cost)) {
          best = {row, c};
          best_abs = mag;
          best_cost = cost;
        }
      }
    }
    return best;
  }

  // cols_[target] -= q * cols_[source]
  void axpy(std::uint32_t target, const Int& q, std::uint32_t source) {
    const Column& src = cols_[source];
    Column& dst = cols_[target];
    Column merged;
    merged.reserve(dst.size() + src.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
        merged.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || src[j].first < dst[i].first) {
        Int v = A::mul_sub(Int{0}, q, src[j].second);
        row_cols_[src[j].first].push_back(target);
        ++row_count_[src[j].first];
        merged.emplace_back(src[j].first, std::move(v));
        ++j;
      } else {
        Int v = A::mul_sub(dst[i].second, q, src[j].second);
        if (A::is_zero(v)) {
          --row_count_[dst[i].first];
        } else {
          merged.emplace_back(dst[i].first, std::move(v));
        }
        ++i;
        ++j;
      }
    }
    dst = std::move(merged);
  }

  std::vector<std::uint32_t> columns_in_row(std::uint32_t row, std::uint32_t except) {
    auto& list = row_cols_[row];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::erase_if(list, [&](std::uint32_t c) { return !alive_[c] || !find(c, row); });
    std::vector<std::uint32_t> out;
    for (auto c : list) {
      if (c != except) out.push_back(c);
    }
    return out;
  }

  void eliminate(std::uint32_t p, std::uint32_t c) {
    while (true) {
      const Int a = *find(c, p);
      // Column operations clear row p outside column c.
      std::optional<std::uint32_t> smaller_col;
      Int smaller_abs{};
      for (std::uint32_t j : columns_in_row(p, c)) {
        const Int q = A::round_quot(*find(j, p), a);
        if (!A::is_zero(q)) axpy(j, q, c);
        if (const Int* rest = find(j, p)) {
          const Int mag = A::abs(*rest);
          if (!smaller_col || mag < smaller_abs) {
            smaller_col = j;
            smaller_abs = mag;
          }
        }
      }
      if (smaller_col) {
        c = *smaller_col;
        continue;
      }
      // Row p is now zero outside column c, so row operations clearing column
      // c touch no other column.
      Column reduced;
      std::optional<std::uint32_t> smaller_row;
      for (auto& [row, value] : cols_[c]) {
        if (row == p) {
          reduced.emplace_back(row, value);
          continue;
        }
        Int rest = A::mul_sub(value, A::round_quot(value, a), a);
        if (A::is_zero(rest)) {
          --row_count_[row];
          continue;
        }
        if (!smaller_row || A::abs(rest) < smaller_abs) {
          smaller_row = row;
          smaller_abs = A::abs(rest);
        }
        reduced.emplace_back(row, std::move(rest));
      }
      cols_[c] = std::move(reduced);
      if (smaller_row) {
        p = *smaller_row;
        continue;
      }
      diagonal_.push_back(A::to_big(A::abs(a)));
      --row_count_[p];
      cols_[c].clear();
      alive_[c] = 0;
      return;
    }
  }

  std::vector<Column> cols_;
  std::vector<char> alive_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::vector<std::size_t> row_count_;
  std::vector<BigInt> diagonal_;
};

BigInt gcd(BigInt a, BigInt b) {
  while (!b.is_zero()) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  std::vector<BigInt> diagonal;
  try {
    diagonal = Eliminator<Checked64>(m).run();
  } catch (const Overflow&) {
    diagonal = Eliminator<Arbitrary>(m).run();
  }
  // diag(a, b) ~ diag(gcd, lcm); sweeping all pairs yields a divisibility chain.
  std::sort(diagonal.begin(), diagonal.end());
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      if ((diagonal[j] % diagonal[i]).is_zero()) continue;
      const BigInt g = gcd(diagonal[i], diagonal[j]);
      const BigInt l = diagonal[i] / g * diagonal[j];
      diagonal[i] = g;
      diagonal[j] = l;
    }
  }
  SmithForm out;
  out.rank = diagonal.size();
  out.factors = std::move(diagonal);
  return out;
}

std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw HomologyError("modulus " + std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 31)) throw HomologyError("modulus too large");
  using Column = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::vector<Column> cols(m.cols());
  for (const auto& [index, value] : m.entries()) {
    BigInt r = value % BigInt(p);
    if (r < 0) r += p;
    if (!r.is_zero()) {
      cols[index.second].emplace_back(static_cast<std::uint32_t>(index.first),
                                      static_cast<std::uint64_t>(r));
    }
  }
  const auto inverse = [p](std::uint64_t a) {
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  };
  // Standard column reduction keyed by the largest row index.
  std::vector<std::int64_t> owner(m.rows(), -1);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Column& col = cols[j];
    while (!col.empty()) {
      const auto [low, value] = col.back();
      if (owner[low] < 0) break;
      const Column& piv = cols[static_cast<std::size_t>(owner[low])];
      const std::uint64_t factor = value * inverse(piv.back().second) % p;
      Column merged;
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          merged.push_back(col[a++]);
        } else if (a == col.size() || piv[b].first < col[a].first) {
          merged.emplace_back(piv[b].first, (p - factor * piv[b].second % p) % p);
          ++b;
        } else {
          const std::uint64_t v = (col[a].second + p - factor * piv[b].second % p) % p;
          if (v) merged.emplace_back(col[a].first, v);
          ++a;
          ++b;
        }
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      owner[col.back().first] = static_cast<std::int64_t>(j);
      ++rank;
    }
  }
  return rank;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace hic
