#pragma once

#include <cstdint>
#include <vector>

#include "arbor/digraph.hpp"

namespace arbor {

/// Spanning tree enumerator t_root(g): the principal Laplacian minor with
/// the root's row and column removed. Counts oriented spanning trees (every
/// non-root vertex keeps out-degree one, all edges flow toward the root)
/// weighted by edge-weight products; for unit weights this is the plain
/// arborescence count.
Rational tree_enumerator(const WeightedDigraph& g, int root);

/// All-roots batch: one adjugate of the Laplacian instead of n minors.
/// Agrees entry-by-entry with tree_enumerator.
std::vector<Rational> tree_enumerators(const WeightedDigraph& g);

/// Explicit oriented spanning tree: one chosen out-edge per non-root vertex.
struct Arborescence {
  int root = 0;
  std::vector<int> chosen_edge;  // edge index per vertex, -1 at the root

  Rational weight_product(const WeightedDigraph& g) const;
};

/// Brute-force enumeration of all oriented spanning trees rooted at `root`,
/// by exhaustive choice of one out-edge per non-root vertex plus a
/// reachability check. Guarded: the candidate count (product of out-degrees)
/// must stay within `cap`, else TooLarge. Oracle for tree_enumerator.
std::vector<Arborescence> enumerate_arborescences(const WeightedDigraph& g, int root,
                                                  std::uint64_t cap = 10'000'000);

/// Sum of weight products over enumerate_arborescences.
Rational arborescence_sum(const WeightedDigraph& g, int root, std::uint64_t cap = 10'000'000);

/// Eulerian circuit count via the arborescence count: kappa_u * prod over
/// vertices of (out_degree - 1)!. Circuits are cyclic equivalence classes of
/// closed edge sequences. Requires an Eulerian unit-weight digraph.
BigInt count_eulerian_circuits(const WeightedDigraph& g);

/// Backtracking oracle: counts Eulerian trails that start with the lowest
/// edge index, which is exactly the number of cyclic circuit classes.
/// Guarded to `max_edges` edges.
BigInt enumerate_eulerian_circuits(const WeightedDigraph& g, int max_edges = 12);

}  // namespace arbor
