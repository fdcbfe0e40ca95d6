#pragma once

#include <utility>
#include <vector>

#include "arbor/biclique.hpp"
#include "arbor/digraph.hpp"
#include "arbor/markov.hpp"

namespace test_support {

using namespace arbor;

inline Rational R(long long p, long long q = 1) { return Rational(p, q); }

// Directed 3-cycle, unit weights.
inline WeightedDigraph c3() { return unit_digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// Two vertices, one edge each way.
inline WeightedDigraph d2() { return unit_digraph(2, {{0, 1}, {1, 0}}); }

// Bidirected triangle, all six ordered pairs.
inline WeightedDigraph k3pm() {
  return unit_digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
}

// Two parallel edges each way on two vertices.
inline WeightedDigraph m2() { return unit_digraph(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}}); }

inline UndirectedGraph triangle() {
  return UndirectedGraph(3, {{0, 1, R(1)}, {1, 2, R(1)}, {2, 0, R(1)}});
}

inline UndirectedGraph single_edge() { return UndirectedGraph(2, {{0, 1, R(1)}}); }

inline UndirectedGraph square() {
  return UndirectedGraph(4, {{0, 1, R(1)}, {1, 2, R(1)}, {2, 3, R(1)}, {3, 0, R(1)}});
}

inline UndirectedGraph path3() { return UndirectedGraph(3, {{0, 1, R(1)}, {1, 2, R(1)}}); }

// Same vertex set and the same total weight between every ordered pair.
inline bool same_adjacency(const WeightedDigraph& a, const WeightedDigraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  for (int u = 0; u < a.vertex_count(); ++u)
    for (int v = 0; v < a.vertex_count(); ++v) {
      if (u == v) continue;
      if (a.pair_weight(u, v) != b.pair_weight(u, v)) return false;
    }
  return true;
}

// Incidence pair behind the tree-enumerator reduction: R keyed by tail
// membership and part weights, S by head membership and vertex weights. The
// two Schur complements of the coupled bipartite Laplacian must reproduce
// the host Laplacian and the reduced Laplacian.
struct IncidencePair {
  Matrix r;   // |V| x r
  Matrix s;   // r x |V|
  Matrix d1;  // diag of weighted degrees
  Matrix d2;  // diag of part weights
};

inline IncidencePair tree_incidence(const BicliquePartition& partition,
                                    const std::vector<Rational>& vertex_weights) {
  const WeightedDigraph& g = partition.host();
  const int n = g.vertex_count();
  const int r = partition.size();
  IncidencePair out;
  out.r = Matrix::Zero(n, r);
  out.s = Matrix::Zero(r, n);
  out.d1 = Matrix::Zero(n, n);
  out.d2 = Matrix::Zero(r, r);
  std::vector<Rational> part_weight(static_cast<size_t>(r), Rational(0));
  for (int i = 0; i < r; ++i)
    for (int u : partition.bicliques()[static_cast<size_t>(i)].heads())
      part_weight[static_cast<size_t>(i)] += vertex_weights[static_cast<size_t>(u)];
  for (int u = 0; u < n; ++u) {
    out.d1(u, u) = g.weighted_degree(u);
    for (int i = 0; i < r; ++i) {
      const Biclique& b = partition.bicliques()[static_cast<size_t>(i)];
      out.r(u, i) = Rational(b.tail_multiplicity(u)) * part_weight[static_cast<size_t>(i)];
      out.s(i, u) = Rational(b.head_multiplicity(u)) * vertex_weights[static_cast<size_t>(u)];
    }
  }
  for (int i = 0; i < r; ++i) out.d2(i, i) = part_weight[static_cast<size_t>(i)];
  return out;
}

// Incidence pair behind the random-walk reduction: R S must be the host
// transition matrix, S R the reduced one.
struct WalkIncidencePair {
  Matrix r;
  Matrix s;
};

inline WalkIncidencePair walk_incidence(const BicliquePartition& partition) {
  const WeightedDigraph& g = partition.host();
  const int n = g.vertex_count();
  const int r = partition.size();
  WalkIncidencePair out;
  out.r = Matrix::Zero(n, r);
  out.s = Matrix::Zero(r, n);
  for (int u = 0; u < n; ++u)
    for (int i = 0; i < r; ++i) {
      const Biclique& b = partition.bicliques()[static_cast<size_t>(i)];
      if (b.tail_multiplicity(u) > 0)
        out.r(u, i) = Rational(b.tail_multiplicity(u) * b.head_size()) / Rational(g.out_degree(u));
      if (b.head_multiplicity(u) > 0)
        out.s(i, u) = Rational(b.head_multiplicity(u)) / Rational(b.head_size());
    }
  return out;
}

}  // namespace test_support
