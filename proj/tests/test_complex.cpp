#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hic/complex.hpp"
#include "hic/random.hpp"
#include "oracles.hpp"

using namespace hic;

TEST_CASE("is_r_independent") {
  const Graph p4 = path_graph(4);
  CHECK(is_r_independent(p4, {0, 1, 3}, 2));
  CHECK_FALSE(is_r_independent(p4, {0, 1, 2}, 2));
  CHECK(is_r_independent(p4, {}, 1));
  CHECK(is_r_independent(p4, {}, 7));
  CHECK_THROWS_AS(is_r_independent(p4, {0}, 0), ComplexError);
  CHECK_THROWS_AS(is_r_independent(p4, {9}, 1), GraphError);
}

TEST_CASE("build_ind_complex face vectors") {
  const auto p3 = build_ind_complex(path_graph(3), 1);
  CHECK(p3.f_vector() == std::vector<std::size_t>{1, 3, 1});
  CHECK(p3.faces(1) == std::vector<VertexSet>{{0, 2}});

  const auto k4 = build_ind_complex(complete_graph(4), 2);
  CHECK(k4.f_vector() == oracle::ind_f_vector(complete_graph(4), 2));
  CHECK(k4.f_vector() == std::vector<std::size_t>{1, 4, 6});

  const auto p4 = build_ind_complex(path_graph(4), 2);
  CHECK(p4.f_vector() == oracle::ind_f_vector(path_graph(4), 2));
  CHECK(p4.f_vector() == std::vector<std::size_t>{1, 4, 6, 2});
  CHECK(p4.faces(2) == std::vector<VertexSet>{{0, 1, 3}, {0, 2, 3}});

  const auto empty = build_ind_complex(Graph{}, 1);
  CHECK(empty.f_vector() == std::vector<std::size_t>{1});
  CHECK(empty.dimension() == -1);
}

TEST_CASE("build_ind_complex matches subset enumeration on random graphs") {
  Rng rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = uniform_below(rng, 11);
    const Graph g = erdos_renyi(n, 0.15 + 0.5 * uniform_unit(rng), rng());
    const unsigned r = 1 + static_cast<unsigned>(uniform_below(rng, 4));
    const auto k = build_ind_complex(g, r);
    REQUIRE(k.f_vector() == oracle::ind_f_vector(g, static_cast<int>(r)));
    for (int d = -1; d <= k.dimension(); ++d) {
      CHECK(std::is_sorted(k.faces(d).begin(), k.faces(d).end()));
      for (const auto& face : k.faces(d)) CHECK(is_r_independent(g, face, r));
    }
  }
}

TEST_CASE("heredity holds on sampled faces") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = erdos_renyi(12, 0.3, rng());
    const auto k = build_ind_complex(g, 2);
    const auto faces = k.all_faces();
    for (int sample = 0; sample < 50; ++sample) {
      const auto& face = faces[uniform_below(rng, faces.size())];
      for (std::size_t skip = 0; skip < face.size(); ++skip) {
        VertexSet sub = face;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(skip));
        CHECK(k.contains(sub));
      }
    }
  }
}

TEST_CASE("large r gives every subset, and faces grow monotonically in r") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = 1 + uniform_below(rng, 9);
    const Graph g = erdos_renyi(n, 0.35, rng());
    std::size_t biggest = 0;
    for (const auto& c : connected_components(g)) biggest = std::max(biggest, c.size());
    const auto all = build_ind_complex(g, static_cast<unsigned>(biggest));
    CHECK(all == SimplicialComplex::full_simplex(n));
    for (unsigned r = 1; r < 4; ++r) {
      const auto lower = build_ind_complex(g, r);
      const auto upper = build_ind_complex(g, r + 1);
      for (const auto& face : lower.all_faces()) CHECK(upper.contains(face));
    }
  }
}

TEST_CASE("face budget is a hard error") {
  BuildLimits limits;
  limits.max_faces = 10;
  CHECK_THROWS_AS(build_ind_complex(complete_graph(5), 5, limits), ResourceError);
  try {
    build_ind_complex(complete_graph(5), 5, limits);
  } catch (const ResourceError& e) {
    CHECK(e.budget() == "face");
    CHECK(e.limit() == 10);
  }
  limits.max_faces = 32;
  CHECK(build_ind_complex(complete_graph(5), 5, limits).face_count() == 32);
  limits.max_faces = 0;
  CHECK_THROWS_AS(build_ind_complex(complete_graph(5), 5, limits), ComplexError);
}

TEST_CASE("max_dim caps the constructed dimension") {
  BuildLimits limits;
  limits.max_dim = 1;
  const auto k = build_ind_complex(Graph(6), 1, limits);
  CHECK(k.dimension() == 1);
  CHECK(k.f_vector() == std::vector<std::size_t>{1, 6, 15});
}

TEST_CASE("euler_characteristic") {
  CHECK(euler_characteristic(SimplicialComplex::full_simplex(3)) == 0);
  CHECK(euler_characteristic(build_ind_complex(path_graph(4), 2)) == -1);
  CHECK(euler_characteristic(build_ind_complex(complete_graph(4), 2)) == -3);
  CHECK(euler_characteristic(build_ind_complex(Graph{}, 2)) == -1);
}

TEST_CASE("from_faces validates heredity") {
  CHECK_THROWS_AS(SimplicialComplex::from_faces(3, {{}, {0, 1}}), ComplexError);
  CHECK_THROWS_AS(SimplicialComplex::from_faces(2, {{}, {2}}), ComplexError);
  const auto k = SimplicialComplex::from_faces(3, {{1}, {}, {0}, {0, 1}});
  CHECK(k.f_vector() == std::vector<std::size_t>{1, 2, 1});
  CHECK(SimplicialComplex{}.is_void());
}

TEST_CASE("star of a face") {
  const auto k = build_ind_complex(path_graph(3), 1);
  // st({0}) = faces τ with {0} ∪ τ independent: ∅, {0}, {2}, {0,2}.
  CHECK(star(k, {0}) == std::vector<VertexSet>{{}, {0}, {2}, {0, 2}});
  CHECK(star(k, {1}) == std::vector<VertexSet>{{}, {1}});
}

TEST_CASE("complex dump round trip") {
  const auto k = build_ind_complex(path_graph(4), 2);
  const auto text = dump_complex(k);
  CHECK(text.starts_with("=== dim -1 ===\n\n=== dim 0 ===\n0\n1\n"));
  CHECK(parse_complex_dump(text, 4) == k);
  CHECK_THROWS_AS(parse_complex_dump("=== dim 1 ===\n0\n", 4), ComplexError);
}
