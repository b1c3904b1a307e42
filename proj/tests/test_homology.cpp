#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hic/homology.hpp"
#include "hic/random.hpp"
#include "oracles.hpp"

using namespace hic;

namespace {

IntegerMatrix from_dense(const std::vector<std::vector<long long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::vector<std::vector<oracle::Big>> to_dense(const IntegerMatrix& m) {
  std::vector<std::vector<oracle::Big>> out(m.rows(), std::vector<oracle::Big>(m.cols()));
  for (const auto& [index, value] : m.entries()) out[index.first][index.second] = value;
  return out;
}

std::vector<BigInt> big(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

SimplicialComplex triangle_boundary() {
  return SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
}

// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets(
      6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {1, 2, 3}, {1, 2, 4},
          {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("boundary matrices") {
  const auto tri = triangle_boundary();
  const auto d1 = boundary_matrix(tri, 1);
  CHECK(d1.rows() == 3);
  CHECK(d1.cols() == 3);
  for (std::size_t col = 0; col < 3; ++col) {
    int plus = 0;
    int minus = 0;
    for (std::size_t row = 0; row < 3; ++row) {
      plus += d1.get(row, col) == 1;
      minus += d1.get(row, col) == -1;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
  }
  // Edge {0,1}: ∂ = {1} - {0}.
  CHECK(d1.get(0, 0) == -1);
  CHECK(d1.get(1, 0) == 1);

  const auto p4 = build_ind_complex(path_graph(4), 2);
  const auto d0 = boundary_matrix(p4, 0);
  CHECK(d0.rows() == 1);
  CHECK(d0.cols() == 4);
  for (std::size_t col = 0; col < 4; ++col) CHECK(d0.get(0, col) == 1);
  CHECK(multiply(d0, boundary_matrix(p4, 1)).is_zero());

  CHECK(boundary_matrix(p4, 3).cols() == 0);
  CHECK_THROWS_AS(boundary_matrix(p4, 4), HomologyError);
  CHECK_THROWS_AS(boundary_matrix(p4, -1), HomologyError);
  CHECK_THROWS_AS(boundary_matrix(SimplicialComplex{}, 0), HomologyError);
}

TEST_CASE("boundary of a boundary vanishes on built complexes") {
  Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = erdos_renyi(1 + uniform_below(rng, 9), 0.4, rng());
    const auto k = build_ind_complex(g, 1 + static_cast<unsigned>(uniform_below(rng, 3)));
    for (int d = 0; d < k.dimension() + 1; ++d) {
      CHECK(multiply(boundary_matrix(k, d), boundary_matrix(k, d + 1)).is_zero());
    }
  }
}

TEST_CASE("smith_normal_form examples") {
  const auto diag = smith_normal_form(from_dense({{2, 0}, {0, 3}}));
  CHECK(diag.factors == big({1, 6}));
  CHECK(diag.rank == 2);

  const auto zero = smith_normal_form(IntegerMatrix(3, 4));
  CHECK(zero.factors.empty());
  CHECK(zero.rank == 0);

  const auto d1 = boundary_matrix(triangle_boundary(), 1);
  CHECK(oracle::invariant_factors(to_dense(d1)) == big({1, 1}));
  const auto tri = smith_normal_form(d1);
  CHECK(tri.factors == big({1, 1}));
  CHECK(tri.rank == 2);

  CHECK(smith_normal_form(from_dense({{4, 6}, {6, 4}})).factors == big({2, 10}));
  CHECK(smith_normal_form(from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).factors ==
        big({2, 6, 12}));
}

TEST_CASE("smith_normal_form matches determinantal divisors on random matrices") {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = 1 + uniform_below(rng, 4);
    const auto cols = 1 + uniform_below(rng, 4);
    std::vector<std::vector<long long>> dense(rows, std::vector<long long>(cols));
    for (auto& row : dense) {
      for (auto& x : row) x = bernoulli(rng, 0.3) ? 0 : static_cast<long long>(uniform_below(rng, 21)) - 10;
    }
    const auto m = from_dense(dense);
    const auto snf = smith_normal_form(m);
    REQUIRE(snf.factors == oracle::invariant_factors(to_dense(m)));
    for (std::size_t i = 1; i < snf.factors.size(); ++i) {
      CHECK((snf.factors[i] % snf.factors[i - 1]).is_zero());
    }
  }
}

TEST_CASE("smith_normal_form falls back to arbitrary precision") {
  const long long huge = (1LL << 61) + 1;
  const auto m = from_dense({{huge, 3}, {5, huge}, {7, 11}});
  CHECK(smith_normal_form(m).factors == oracle::invariant_factors(to_dense(m)));

  IntegerMatrix beyond(2, 2);
  beyond.set(0, 0, BigInt(1) << 80);
  beyond.set(1, 1, BigInt(6));
  const auto snf = smith_normal_form(beyond);
  CHECK(snf.factors == std::vector<BigInt>{BigInt(2), BigInt(3) * (BigInt(1) << 80)});
}

TEST_CASE("reduced_homology examples") {
  const auto p4 = reduced_homology(build_ind_complex(path_graph(4), 2));
  CHECK(p4.betti(1) == 1);
  CHECK(p4.nonzero().size() == 1);
  CHECK(p4.torsion_free());

  const auto k4 = reduced_homology(build_ind_complex(complete_graph(4), 2));
  CHECK(k4.betti(1) == 3);
  CHECK(k4.nonzero().size() == 1);

  CHECK(reduced_homology(SimplicialComplex::full_simplex(5)).is_zero());

  const auto empty = reduced_homology(build_ind_complex(Graph{}, 1));
  CHECK(empty.betti(-1) == 1);
  CHECK(reduced_homology(SimplicialComplex{}).top_dimension() == -2);
  CHECK(reduced_homology(SimplicialComplex{}).is_zero());

  // S^0: two isolated points, r = 1 gives the full edge; two points joined, r = 1 gives S^0.
  const auto s0 = reduced_homology(build_ind_complex(path_graph(2), 1));
  CHECK(s0.betti(0) == 1);
}

TEST_CASE("torsion is detected") {
  const auto rp2 = projective_plane();
  const auto h = reduced_homology(rp2);
  CHECK(h.betti(1) == 0);
  CHECK(h.betti(2) == 0);
  CHECK(h.torsion(1) == big({2}));
  CHECK_FALSE(h.torsion_free());

  CHECK(betti_mod_p(rp2, 2) == std::vector<std::uint64_t>{0, 0, 1, 1});
  CHECK(betti_mod_p(rp2, 3) == std::vector<std::uint64_t>{0, 0, 0, 0});
  CHECK(to_json(h).dump() == R"({"dims":[{"d":1,"betti":0,"torsion":[2]}]})");
}

TEST_CASE("betti_mod_p") {
  const auto p4 = build_ind_complex(path_graph(4), 2);
  CHECK(betti_mod_p(p4, 2) == std::vector<std::uint64_t>{0, 0, 1, 0});
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (auto b : betti_mod_p(SimplicialComplex::full_simplex(4), p)) CHECK(b == 0);
  }
  CHECK_THROWS_AS(betti_mod_p(p4, 4), HomologyError);
  CHECK_THROWS_AS(betti_mod_p(p4, 1), HomologyError);
}

TEST_CASE("homology invariants on random r-independence complexes") {
  Rng rng(8);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = erdos_renyi(1 + uniform_below(rng, 10), 0.2 + 0.5 * uniform_unit(rng), rng());
    const unsigned r = 1 + static_cast<unsigned>(uniform_below(rng, 3));
    const auto k = build_ind_complex(g, r);
    const auto h = reduced_homology(k);
    CHECK(h.euler_characteristic() == euler_characteristic(k));
    for (int d = 0; d <= k.dimension(); ++d) {
      const auto m = boundary_matrix(k, d);
      const auto snf = smith_normal_form(m);
      for (std::size_t i = 1; i < snf.factors.size(); ++i) {
        CHECK((snf.factors[i] % snf.factors[i - 1]).is_zero());
      }
      for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        bool divides = false;
        for (const auto& f : snf.factors) divides = divides || (f % p).is_zero();
        if (!divides) CHECK(rank_mod_p(m, p) == snf.rank);
      }
    }
    if (h.torsion_free()) {
      for (std::uint64_t p : {2, 3}) {
        const auto mod = betti_mod_p(k, p);
        for (int d = -1; d <= k.dimension(); ++d) CHECK(mod[d + 1] == h.betti(d));
      }
    }
  }
}

TEST_CASE("homology_of_type") {
  const auto wedge = homology_of_type(HomotopyType::wedge({{1, 1}, {3, 2}}));
  CHECK(wedge.betti(1) == 1);
  CHECK(wedge.betti(3) == 2);
  CHECK(wedge.nonzero().size() == 2);
  CHECK(homology_of_type(HomotopyType::contractible()).is_zero());
  CHECK(homology_of_type(HomotopyType::empty()).betti(-1) == 1);
  CHECK(homology_of_type(HomotopyType::empty()) ==
        reduced_homology(build_ind_complex(Graph{}, 3)));
  CHECK(to_json(wedge).dump() ==
        R"({"dims":[{"d":1,"betti":1,"torsion":[]},{"d":3,"betti":2,"torsion":[]}]})");
}
