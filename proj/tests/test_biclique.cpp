#include <doctest.h>

#include <functional>
#include <string>

#include "arbor/biclique.hpp"
#include "arbor/error.hpp"
#include "arbor/linalg.hpp"
#include "arbor/markov.hpp"
#include "arbor/random_gen.hpp"
#include "support.hpp"

using namespace arbor;
using test_support::R;

namespace {

std::string error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("partition validation") {
  WeightedDigraph c3 = test_support::c3();
  BicliquePartition stars = validate_partition(
      c3, {Biclique({0}, {1}), Biclique({1}, {2}), Biclique({2}, {0})});
  CHECK(stars.size() == 3);

  WeightedDigraph k3 = test_support::k3pm();
  CHECK(validate_partition(k3, {Biclique({0}, {1, 2}), Biclique({1}, {0, 2}), Biclique({2}, {0, 1})})
            .size() == 3);

  CHECK(error_kind([&] { validate_partition(c3, {Biclique({0, 1}, {1, 2})}); }) == "NotABiclique");
  CHECK(error_kind([&] { validate_partition(c3, {Biclique({0}, {1}), Biclique({1}, {2})}); }) ==
        "CoverageGap");
  CHECK(error_kind([&] {
          validate_partition(c3, {Biclique({0}, {1}), Biclique({0}, {1}), Biclique({1}, {2}),
                                  Biclique({2}, {0})});
        }) == "CoverageOverlap");
  CHECK(error_kind([&] { validate_partition(c3, {Biclique({0}, {}), Biclique({0}, {1})}); }) ==
        "NotABiclique");

  // Parallel edges need a multiplicity-matching cover.
  WeightedDigraph m2 = test_support::m2();
  CHECK(validate_partition(m2, {Biclique({0}, {1, 1}), Biclique({1}, {0, 0})}).size() == 2);
  CHECK(error_kind([&] { validate_partition(m2, {Biclique({0}, {1}), Biclique({1}, {0})}); }) ==
        "CoverageGap");
}

TEST_CASE("star partitions") {
  BicliquePartition stars = star_partition(test_support::k3pm());
  CHECK(stars.size() == 3);
  for (const Biclique& b : stars.bicliques()) {
    CHECK(b.tail_size() == 1);
    CHECK(b.head_size() == 2);
  }

  WeightedDigraph with_sink = unit_digraph(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}});
  CHECK(star_partition(with_sink).size() == 2);  // the sink contributes no star

  BicliquePartition m2_stars = star_partition(test_support::m2());
  CHECK(m2_stars.bicliques()[0].heads() == std::vector<int>{1, 1});
}

TEST_CASE("natural line partition") {
  auto [line_c3, part_c3] = natural_line_partition(test_support::c3());
  CHECK(part_c3.size() == 3);
  for (const Biclique& b : part_c3.bicliques()) {
    CHECK(b.tail_size() == 1);
    CHECK(b.head_size() == 1);
  }

  auto [line_k3, part_k3] = natural_line_partition(test_support::k3pm());
  CHECK(part_k3.size() == 3);
  int covered = 0;
  for (const Biclique& b : part_k3.bicliques()) covered += b.tail_size() * b.head_size();
  CHECK(covered == line_k3.line.edge_count());  // 3 bicliques x 4 edges = 12

  auto [line_d2, part_d2] = natural_line_partition(test_support::d2());
  CHECK(part_d2.size() == 2);
}

TEST_CASE("omega digraph") {
  // Unit weights: stars reduce the cycle to itself.
  std::vector<Rational> ones3(3, R(1));
  ReducedDigraph omega_c3 = omega_digraph(star_partition(test_support::c3()), ones3);
  CHECK(omega_c3.digraph == test_support::c3());

  ReducedDigraph omega_k3 = omega_digraph(star_partition(test_support::k3pm()), ones3);
  CHECK(test_support::same_adjacency(omega_k3.digraph, test_support::k3pm()));
  CHECK(omega_k3.digraph.has_unit_weights());

  // Hand-evaluated weights on the cycle with vertex weights (1, 2, 4).
  std::vector<Rational> w{R(1), R(2), R(4)};
  WeightedDigraph host = induced_weighting(test_support::c3(), w);
  ReducedDigraph omega = omega_digraph(star_partition(host), w);
  CHECK(omega.digraph.pair_weight(0, 1) == R(2));   // w(Q1) * w_1/d_1 = 4 * (2/4)
  CHECK(omega.digraph.pair_weight(1, 2) == R(4));   // 1 * (4/1)
  CHECK(omega.digraph.pair_weight(2, 0) == R(1));   // 2 * (1/2)

  CHECK_THROWS_AS(omega_digraph(star_partition(test_support::c3()), w), Error);
}

TEST_CASE("theta digraph") {
  ReducedDigraph theta_c3 = theta_digraph(star_partition(test_support::c3()));
  CHECK(theta_c3.digraph == test_support::c3());

  ReducedDigraph theta_k3 = theta_digraph(star_partition(test_support::k3pm()));
  CHECK(test_support::same_adjacency(theta_k3.digraph, test_support::k3pm()));

  // Natural partition of the line digraph reduces back to the source.
  auto [line, partition] = natural_line_partition(test_support::k3pm());
  ReducedDigraph theta_line = theta_digraph(partition);
  CHECK(test_support::same_adjacency(theta_line.digraph, test_support::k3pm()));
}

TEST_CASE("tree enumerator through the partition") {
  BicliquePartition stars_c3 = star_partition(test_support::c3());
  for (int root = 0; root < 3; ++root)
    CHECK(tree_enum_via_partition(stars_c3, std::nullopt, root) == R(1));

  BicliquePartition stars_k3 = star_partition(test_support::k3pm());
  for (int root = 0; root < 3; ++root)
    CHECK(tree_enum_via_partition(stars_k3, std::nullopt, root) == R(3));

  // Weighted host: exact match with the direct Laplacian minor.
  std::vector<Rational> w{R(1), R(2), R(4)};
  WeightedDigraph host = induced_weighting(test_support::c3(), w);
  BicliquePartition stars_w = star_partition(host);
  for (int root = 0; root < 3; ++root)
    CHECK(tree_enum_via_partition(stars_w, w, root) == tree_enumerator(host, root));

  // Multigraph host through multiset parts.
  BicliquePartition stars_m2 = star_partition(test_support::m2());
  CHECK(tree_enum_via_partition(stars_m2, std::nullopt, 0) == R(2));

  WeightedDigraph no_in = unit_digraph(3, {{0, 1}, {1, 0}, {2, 0}});
  BicliquePartition stars_no_in = star_partition(no_in);
  try {
    tree_enum_via_partition(stars_no_in, std::nullopt, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == "RootNotCovered");
  }

  WeightedDigraph chain = unit_digraph(3, {{0, 1}, {1, 2}});
  try {
    tree_enum_via_partition(star_partition(chain), std::nullopt, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == "ZeroOutDegree");
  }
}

TEST_CASE("reduced enumerator from host values") {
  BicliquePartition stars_c3 = star_partition(test_support::c3());
  CHECK(partition_tree_enum_from_host(stars_c3, std::nullopt, 0) == R(1));

  BicliquePartition stars_k3 = star_partition(test_support::k3pm());
  ReducedDigraph theta = theta_digraph(stars_k3);
  for (int i = 0; i < 3; ++i) {
    CHECK(partition_tree_enum_from_host(stars_k3, std::nullopt, i) == R(3));
    CHECK(partition_tree_enum_from_host(stars_k3, std::nullopt, i) ==
          tree_enumerator(theta.digraph, i));
  }

  auto [line, partition] = natural_line_partition(test_support::k3pm());
  ReducedDigraph theta_line = theta_digraph(partition);
  for (int i = 0; i < partition.size(); ++i)
    CHECK(partition_tree_enum_from_host(partition, std::nullopt, i) ==
          tree_enumerator(theta_line.digraph, i));
}

TEST_CASE("eulerian counts through the partition") {
  EulerianCounts c3 = eulerian_count_via_partition(star_partition(test_support::c3()), 0);
  CHECK(c3.arborescence_count == 1);
  CHECK(c3.circuit_count == 1);

  EulerianCounts k3 = eulerian_count_via_partition(star_partition(test_support::k3pm()), 1);
  CHECK(k3.arborescence_count == 3);
  CHECK(k3.circuit_count == 3);

  // Multigraph: the multiset cover reproduces both counts.
  EulerianCounts m2 = eulerian_count_via_partition(star_partition(test_support::m2()), 0);
  CHECK(m2.arborescence_count == 2);
  CHECK(m2.circuit_count == 2);

  CHECK_THROWS_AS(eulerian_count_via_partition(star_partition(unit_digraph(3, {{0, 1}, {1, 2}})), 0),
                  Error);
}

TEST_CASE("line digraph closed forms") {
  CHECK(line_tree_knuth(test_support::c3(), 0) == R(1));
  CHECK(line_tree_knuth(test_support::k3pm(), 0) == R(12));
  CHECK(line_tree_knuth(test_support::d2(), 0) == R(1));
  CHECK(error_kind([&] { line_tree_knuth(unit_digraph(3, {{0, 1}, {1, 0}, {0, 2}}), 0); }) ==
        "DegreeHypothesisViolated");

  std::vector<Rational> unit3(3, R(1));
  CHECK(line_tree_levine(test_support::k3pm(), unit3, 0) == R(12));
  CHECK(error_kind([&] { line_tree_levine(test_support::c3(), unit3, 0); }) == "HypothesisViolated");

  // Weighted: equality against the direct minor on the weighted line digraph.
  std::vector<Rational> w{R(1), R(1), R(2)};
  WeightedDigraph host = induced_weighting(test_support::k3pm(), w);
  LineDigraphResult line = line_digraph(host);
  for (int e = 0; e < host.edge_count(); ++e)
    CHECK(line_tree_levine(host, w, e) == tree_enumerator(line.line, e));

  // Knuth and Levine agree on unit weights wherever both hypotheses hold.
  WeightedDigraph k3 = test_support::k3pm();
  for (int e = 0; e < k3.edge_count(); ++e)
    CHECK(line_tree_knuth(k3, e) == line_tree_levine(k3, unit3, e));
}

TEST_CASE("line enumerator sum identity") {
  IdentityPair c3 = line_sum_identity_check(test_support::c3());
  CHECK(c3.lhs == R(3));
  CHECK(c3.rhs == R(3));

  IdentityPair k3 = line_sum_identity_check(test_support::k3pm());
  CHECK(k3.lhs == R(72));
  CHECK(k3.rhs == R(72));

  // Zero out-degree vertex with two inbound edges: both sides vanish.
  WeightedDigraph sink = unit_digraph(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}});
  IdentityPair zero = line_sum_identity_check(sink);
  CHECK(zero.lhs == R(0));
  CHECK(zero.rhs == R(0));

  CHECK(error_kind([&] { line_sum_identity_check(unit_digraph(3, {{0, 1}, {1, 0}, {2, 0}})); }) ==
        "InDegreeZero");

  std::vector<Rational> w{R(3), R(1), R(2)};
  IdentityPair weighted = line_sum_identity_check(test_support::k3pm(), w);
  CHECK(weighted.holds());
}

TEST_CASE("schur split identity") {
  IdentityPair p = schur_partition_identity(test_support::k3pm(), {0, 1}, 0);
  CHECK(p.lhs == R(3, 2));
  CHECK(p.rhs == R(3, 2));
  IdentityPair q = schur_partition_identity(test_support::k3pm(), {0, 1}, 1);
  CHECK(q.holds());

  CHECK(error_kind([&] {
          schur_partition_identity(unit_digraph(3, {{0, 1}, {1, 0}, {2, 0}}), {0, 1}, 0);
        }) == "SingularBlock");
  CHECK_THROWS_AS(schur_partition_identity(test_support::k3pm(), {0, 1, 2}, 0), Error);
  CHECK_THROWS_AS(schur_partition_identity(test_support::k3pm(), {0, 1}, 2), Error);

  Rng rng(43);
  int done = 0;
  while (done < 15) {
    RandomDigraphOptions options;
    options.min_vertices = 3;
    options.max_vertices = 6;
    options.weights = WeightKind::kRational;
    WeightedDigraph g = random_digraph(rng, options);
    std::vector<int> part = random_proper_subset(rng, g.vertex_count());
    int u = part[static_cast<size_t>(rng.uniform(0, static_cast<int>(part.size()) - 1))];
    try {
      IdentityPair p = schur_partition_identity(g, part, u);
      CHECK(p.holds());
      ++done;
    } catch (const Error& e) {
      CHECK(e.kind() == "SingularBlock");
    }
  }
}

TEST_CASE("undirected spanning tree counts") {
  auto count = [](const UndirectedGraph& h) {
    return undirected_tree_count(h, star_partition(bidirect(h)));
  };
  CHECK(count(test_support::triangle()) == 3);
  CHECK(count(test_support::single_edge()) == 1);
  CHECK(count(test_support::square()) == 4);

  CHECK(error_kind([&] {
          UndirectedGraph split(4, {{0, 1, R(1)}, {2, 3, R(1)}});
          undirected_tree_count(split, star_partition(bidirect(split)));
        }) == "Disconnected");
  CHECK(error_kind([&] {
          undirected_tree_count(test_support::triangle(),
                                star_partition(bidirect(test_support::square())));
        }) == "HostMismatch");

  Rng rng(47);
  for (int it = 0; it < 10; ++it) {
    UndirectedGraph h = random_connected_graph(rng, 2, 6);
    WeightedDigraph doubled = bidirect(h);
    CHECK(Rational(count(h)) == tree_enumerator(doubled, 0));
  }
}

TEST_CASE("blow-up partitions stay valid") {
  BlowUpResult blown = blow_up(test_support::c3(), 2);
  BicliquePartition base = star_partition(test_support::c3());
  BicliquePartition lifted = blow_up_partition(blown, base);
  CHECK(lifted.size() == base.size());
  CHECK(lifted.bicliques()[0].tail_size() == 2);
  CHECK(lifted.bicliques()[0].head_size() == 2);
}

TEST_CASE("incidence factorizations behind the reductions") {
  // Tree reduction: the coupled bipartite Laplacian eliminates to the host
  // Laplacian on one side and the reduced Laplacian on the other.
  auto check_tree_factorization = [](const WeightedDigraph& host, const std::vector<Rational>& w) {
    BicliquePartition partition = star_partition(host);
    auto inc = test_support::tree_incidence(partition, w);
    Matrix host_side = inc.d1 - inc.r * inverse(inc.d2) * inc.s;
    CHECK(matrices_equal(host_side, laplacian(host)));
    Matrix reduced_side = inc.d2 - inc.s * inverse(inc.d1) * inc.r;
    CHECK(matrices_equal(reduced_side, laplacian(omega_digraph(partition, w).digraph)));
  };
  std::vector<Rational> w{R(1), R(2), R(4)};
  check_tree_factorization(induced_weighting(test_support::c3(), w), w);
  check_tree_factorization(test_support::k3pm(), {R(1), R(1), R(1)});
  check_tree_factorization(test_support::m2(), {R(1), R(1)});

  // Walk reduction: the incidence pair multiplies to the two transition
  // matrices.
  auto check_walk_factorization = [](const WeightedDigraph& host) {
    BicliquePartition partition = star_partition(host);
    auto inc = test_support::walk_incidence(partition);
    CHECK(matrices_equal(Matrix(inc.r * inc.s), transition_matrix(host)));
    CHECK(matrices_equal(Matrix(inc.s * inc.r),
                         transition_matrix(theta_digraph(partition).digraph)));
  };
  check_walk_factorization(test_support::c3());
  check_walk_factorization(test_support::k3pm());
  check_walk_factorization(test_support::m2());
  Rng rng(53);
  check_walk_factorization(random_strongly_connected(rng, 2, 6, 5));
}
