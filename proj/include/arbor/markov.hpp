#pragma once

#include <vector>

#include "arbor/biclique.hpp"
#include "arbor/digraph.hpp"

namespace arbor {

/// Row-stochastic transition matrix of the weighted random walk: entry
/// (i, j) is the total weight of edges i -> j over the weighted degree of i.
/// Throws ZeroDegree when some vertex has no outgoing edge.
Matrix transition_matrix(const WeightedDigraph& g);

/// Exact stationary distribution via principal minors of I - P, normalized
/// to sum 1. Strongly connected hosts only; the fixed-point property
/// pi^T P = pi^T is re-checked before returning.
Vector stationary_distribution(const WeightedDigraph& g);

/// Mean first passage times m(i, j) (expected steps from i until the first
/// visit to j), diagonal fixed at 0. One exact linear solve per target.
Matrix mean_first_passage(const WeightedDigraph& g);

/// Kemeny's constant from the characteristic polynomial q of the transition
/// matrix: q''(1) / (2 q'(1)), which equals the sum of 1 / (1 - lambda) over
/// the non-unit eigenvalues. Exact rational.
Rational kemeny_constant(const WeightedDigraph& g);

/// Definitional cross-check: sum over j != start of m(start, j) pi_j.
Rational kemeny_from_first_passage(const WeightedDigraph& g, int start);

/// Fundamental-matrix cross-check: trace((I - P + 1 pi^T)^{-1}) - 1.
Rational kemeny_from_fundamental_matrix(const WeightedDigraph& g);

/// Stationary distribution of a unit-weight host assembled from the theta
/// digraph of a biclique partition: pi_u is the sum over bicliques whose
/// head part contains u of pi_Q / |head part|.
Vector stationary_via_partition(const BicliquePartition& partition);

/// Kemeny's constant of the host from the theta digraph:
/// K(theta) + n - r.
Rational kemeny_via_partition(const BicliquePartition& partition);

struct LineStationaryResult {
  std::vector<Rational> edge_stationary;  // indexed by edge of the host
  Rational kemeny;
};

/// Stationary distribution and Kemeny's constant of the line digraph of a
/// strongly connected unit-weight digraph, without building it:
/// pi_e = pi_tail(e) / out_degree(tail(e)) and K + m - n.
LineStationaryResult line_stationary(const WeightedDigraph& g);

/// Kemeny's constant of the s-fold iterated line digraph, via the closed
/// form K(g) + |V(L^s)| - n; the iterated digraph is also built explicitly
/// and the direct value must match. Guarded by `max_vertices`.
Rational iterated_line_kemeny(const WeightedDigraph& g, int iterations, int max_vertices = 4096);

}  // namespace arbor
