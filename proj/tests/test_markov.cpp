#include <doctest.h>

#include "arbor/error.hpp"
#include "arbor/linalg.hpp"
#include "arbor/markov.hpp"
#include "arbor/random_gen.hpp"
#include "support.hpp"

using namespace arbor;
using test_support::R;

TEST_CASE("transition matrices") {
  Matrix pc3 = transition_matrix(test_support::c3());
  CHECK(pc3(0, 1) == R(1));
  CHECK(pc3(0, 0) == R(0));

  Matrix pk3 = transition_matrix(test_support::k3pm());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(pk3(i, j) == (i == j ? R(0) : R(1, 2)));

  Matrix pm2 = transition_matrix(test_support::m2());
  CHECK(pm2(0, 1) == R(1));
  CHECK(pm2(1, 0) == R(1));

  CHECK_THROWS_AS(transition_matrix(unit_digraph(2, {{0, 1}})), Error);
}

TEST_CASE("stationary distributions") {
  Vector pi_c3 = stationary_distribution(test_support::c3());
  for (int v = 0; v < 3; ++v) CHECK(pi_c3(v) == R(1, 3));

  Vector pi_k3 = stationary_distribution(test_support::k3pm());
  for (int v = 0; v < 3; ++v) CHECK(pi_k3(v) == R(1, 3));

  Vector pi_path = stationary_distribution(bidirect(test_support::path3()));
  CHECK(pi_path(0) == R(1, 4));
  CHECK(pi_path(1) == R(1, 2));
  CHECK(pi_path(2) == R(1, 4));

  CHECK_THROWS_AS(stationary_distribution(unit_digraph(3, {{0, 1}, {1, 2}})), Error);

  Rng rng(59);
  for (int it = 0; it < 10; ++it) {
    WeightedDigraph g = random_strongly_connected(rng, 2, 6, 5, WeightKind::kRational);
    Vector pi = stationary_distribution(g);
    Rational sum(0);
    for (int v = 0; v < g.vertex_count(); ++v) sum += pi(v);
    CHECK(sum == R(1));
  }
}

TEST_CASE("mean first passage times") {
  Matrix m = mean_first_passage(test_support::c3());
  CHECK(m(0, 1) == R(1));
  CHECK(m(0, 2) == R(2));
  CHECK(m(0, 0) == R(0));

  Matrix mk = mean_first_passage(test_support::k3pm());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(mk(i, j) == (i == j ? R(0) : R(2)));

  Matrix md = mean_first_passage(test_support::d2());
  CHECK(md(0, 1) == R(1));
  CHECK(md(1, 0) == R(1));
}

TEST_CASE("kemeny constant, three routes") {
  CHECK(kemeny_constant(test_support::c3()) == R(1));
  CHECK(kemeny_constant(test_support::k3pm()) == R(4, 3));
  CHECK(kemeny_constant(test_support::d2()) == R(1, 2));

  for (const WeightedDigraph& g :
       {test_support::c3(), test_support::k3pm(), test_support::d2(), test_support::m2(),
        bidirect(test_support::path3()), line_digraph(test_support::k3pm()).line}) {
    Rational via_poly = kemeny_constant(g);
    CHECK(via_poly == kemeny_from_fundamental_matrix(g));
    for (int start = 0; start < g.vertex_count(); ++start)
      CHECK(via_poly == kemeny_from_first_passage(g, start));
  }

  Rng rng(61);
  for (int it = 0; it < 8; ++it) {
    WeightedDigraph g = random_strongly_connected(rng, 2, 6, 5, WeightKind::kRational);
    Rational via_poly = kemeny_constant(g);
    CHECK(via_poly == kemeny_from_first_passage(g, 0));
    CHECK(via_poly == kemeny_from_fundamental_matrix(g));
  }
}

TEST_CASE("stationary vector through the partition") {
  Vector pi = stationary_via_partition(star_partition(test_support::c3()));
  for (int v = 0; v < 3; ++v) CHECK(pi(v) == R(1, 3));

  Vector pik = stationary_via_partition(star_partition(test_support::k3pm()));
  for (int v = 0; v < 3; ++v) CHECK(pik(v) == R(1, 3));

  // Blow-up: every stationary entry splits evenly across the class.
  BlowUpResult blown = blow_up(test_support::c3(), 2);
  BicliquePartition lifted = blow_up_partition(blown, star_partition(test_support::c3()));
  Vector pi_blown = stationary_via_partition(lifted);
  for (int v = 0; v < 6; ++v) CHECK(pi_blown(v) == R(1, 6));
  Vector pi_direct = stationary_distribution(blown.graph);
  for (int v = 0; v < 6; ++v) CHECK(pi_blown(v) == pi_direct(v));

  CHECK_THROWS_AS(stationary_via_partition(star_partition(WeightedDigraph(
                      2, {{0, 1, R(2)}, {1, 0, R(2)}}))),
                  Error);
}

TEST_CASE("kemeny through the partition") {
  CHECK(kemeny_via_partition(star_partition(test_support::c3())) == R(1));
  CHECK(kemeny_via_partition(star_partition(test_support::k3pm())) == R(4, 3));

  BlowUpResult blown = blow_up(test_support::c3(), 2);
  BicliquePartition lifted = blow_up_partition(blown, star_partition(test_support::c3()));
  CHECK(kemeny_via_partition(lifted) == R(4));  // 1 + 6 - 3
  CHECK(kemeny_constant(blown.graph) == R(4));

  // One biclique per edge: more bicliques than vertices still reduces
  // exactly (the adjustment n - r goes negative).
  WeightedDigraph k3 = test_support::k3pm();
  std::vector<Biclique> singletons;
  for (const Edge& e : k3.edges()) singletons.emplace_back(std::vector<int>{e.tail}, std::vector<int>{e.head});
  BicliquePartition per_edge = validate_partition(k3, singletons);
  CHECK(kemeny_via_partition(per_edge) == R(4, 3));
}

TEST_CASE("eigenvalue bookkeeping under reduction") {
  Rng rng(67);
  for (int it = 0; it < 8; ++it) {
    WeightedDigraph g = random_strongly_connected(rng, 2, 6, 5);
    BicliquePartition stars = star_partition(g);
    Polynomial host = char_poly(transition_matrix(g));
    Polynomial reduced = char_poly(transition_matrix(theta_digraph(stars).digraph));
    CHECK(host == reduced.shifted_up(g.vertex_count() - stars.size()));
  }
}

TEST_CASE("line digraph stationary vector and kemeny") {
  LineStationaryResult c3 = line_stationary(test_support::c3());
  for (const Rational& value : c3.edge_stationary) CHECK(value == R(1, 3));
  CHECK(c3.kemeny == R(1));

  LineStationaryResult k3 = line_stationary(test_support::k3pm());
  for (const Rational& value : k3.edge_stationary) CHECK(value == R(1, 6));
  CHECK(k3.kemeny == R(13, 3));
  CHECK(kemeny_constant(line_digraph(test_support::k3pm()).line) == R(13, 3));

  LineStationaryResult d2 = line_stationary(test_support::d2());
  for (const Rational& value : d2.edge_stationary) CHECK(value == R(1, 2));
  CHECK(d2.kemeny == R(1, 2));
}

TEST_CASE("iterated line digraph kemeny") {
  CHECK(iterated_line_kemeny(test_support::c3(), 5) == R(1));
  CHECK(iterated_line_kemeny(test_support::k3pm(), 0) == R(4, 3));
  CHECK(iterated_line_kemeny(test_support::k3pm(), 1) == R(13, 3));
  CHECK(iterated_line_kemeny(test_support::k3pm(), 2) == R(31, 3));
  CHECK_THROWS_AS(iterated_line_kemeny(test_support::k3pm(), 2, 8), Error);
}
