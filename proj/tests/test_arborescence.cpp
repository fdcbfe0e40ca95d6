#include <doctest.h>

#include "arbor/arborescence.hpp"
#include "arbor/error.hpp"
#include "arbor/linalg.hpp"
#include "arbor/random_gen.hpp"
#include "support.hpp"

using namespace arbor;
using test_support::R;

TEST_CASE("tree enumerators on fixtures") {
  for (int root = 0; root < 3; ++root) {
    CHECK(tree_enumerator(test_support::c3(), root) == R(1));
    CHECK(tree_enumerator(test_support::k3pm(), root) == R(3));
  }
  // 3-cycle with the closing edge removed: only the tail of the chain can be
  // a root.
  WeightedDigraph chain = unit_digraph(3, {{0, 1}, {1, 2}});
  CHECK(tree_enumerator(chain, 0) == R(0));
  CHECK(tree_enumerator(chain, 2) == R(1));
  CHECK_THROWS_AS(tree_enumerator(chain, 3), Error);
}

TEST_CASE("enumeration oracle") {
  auto arbs = enumerate_arborescences(test_support::c3(), 0);
  REQUIRE(arbs.size() == 1);
  CHECK(arbs[0].chosen_edge == std::vector<int>{-1, 1, 2});

  CHECK(enumerate_arborescences(test_support::k3pm(), 0).size() == 3);
  CHECK(enumerate_arborescences(test_support::m2(), 0).size() == 2);

  // Parallel edges give distinct trees but the same weight products.
  auto m2_arbs = enumerate_arborescences(test_support::m2(), 0);
  CHECK(m2_arbs[0].chosen_edge != m2_arbs[1].chosen_edge);

  CHECK_THROWS_AS(enumerate_arborescences(test_support::k3pm(), 0, 1), Error);

  WeightedDigraph single(1, {});
  CHECK(enumerate_arborescences(single, 0).size() == 1);
  CHECK(tree_enumerator(single, 0) == R(1));
}

TEST_CASE("matrix-tree equals brute force on random weighted digraphs") {
  Rng rng(31);
  for (int it = 0; it < 40; ++it) {
    RandomDigraphOptions options;
    options.max_vertices = 5;
    options.min_out_degree_one = it % 2 == 0;
    options.weights = WeightKind::kRational;
    WeightedDigraph g = random_digraph(rng, options);
    std::vector<Rational> batch = tree_enumerators(g);
    for (int root = 0; root < g.vertex_count(); ++root) {
      Rational direct = tree_enumerator(g, root);
      CHECK(direct == arborescence_sum(g, root));
      CHECK(direct == batch[static_cast<size_t>(root)]);
    }
  }
}

TEST_CASE("all-minors sign identity") {
  Rng rng(37);
  for (int it = 0; it < 20; ++it) {
    WeightedDigraph g = random_digraph(rng, RandomDigraphOptions{});
    if (g.vertex_count() < 2) continue;
    Matrix l = laplacian(g);
    int i = rng.uniform(0, g.vertex_count() - 1);
    int j = rng.uniform(0, g.vertex_count() - 1);
    Rational sign = (i + j) % 2 == 0 ? R(1) : R(-1);
    CHECK(minor_det(l, {i}, {j}) == sign * tree_enumerator(g, i));
  }
}

TEST_CASE("eulerian hosts have root-independent counts") {
  for (const WeightedDigraph& g : {test_support::c3(), test_support::m2(), test_support::k3pm(),
                                   line_digraph(test_support::k3pm()).line}) {
    Rational first = tree_enumerator(g, 0);
    for (int v = 1; v < g.vertex_count(); ++v) CHECK(tree_enumerator(g, v) == first);
  }
}

TEST_CASE("eulerian circuit counts") {
  CHECK(count_eulerian_circuits(test_support::c3()) == 1);
  CHECK(count_eulerian_circuits(test_support::d2()) == 1);
  CHECK(count_eulerian_circuits(test_support::m2()) == 2);
  CHECK(count_eulerian_circuits(test_support::k3pm()) == 3);

  CHECK(enumerate_eulerian_circuits(test_support::c3()) == 1);
  CHECK(enumerate_eulerian_circuits(test_support::d2()) == 1);
  CHECK(enumerate_eulerian_circuits(test_support::m2()) == 2);
  CHECK(enumerate_eulerian_circuits(test_support::k3pm()) == 3);

  WeightedDigraph lk = line_digraph(test_support::k3pm()).line;
  CHECK(count_eulerian_circuits(lk) == 12);
  CHECK(enumerate_eulerian_circuits(lk) == 12);

  CHECK_THROWS_AS(count_eulerian_circuits(unit_digraph(3, {{0, 1}, {1, 2}})), Error);
  CHECK_THROWS_AS(count_eulerian_circuits(WeightedDigraph(2, {{0, 1, R(2)}, {1, 0, R(2)}})), Error);
  CHECK_THROWS_AS(enumerate_eulerian_circuits(blow_up(test_support::k3pm(), 2).graph), Error);

  Rng rng(41);
  for (int it = 0; it < 10; ++it) {
    WeightedDigraph g = random_eulerian(rng, 4, 12);
    CHECK(count_eulerian_circuits(g) == enumerate_eulerian_circuits(g));
  }
}
