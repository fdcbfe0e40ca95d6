#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"

namespace arbor {

/// Biclique inside a digraph: tail part and head part, with every
/// (tail, head) pair present as an edge. Parts are sorted multisets; a
/// repeated entry lets one biclique cover parallel edges (each occurrence
/// counts separately in sizes, weight sums and intersections).
struct Biclique {
  Biclique() = default;
  Biclique(std::vector<int> tail_part, std::vector<int> head_part);

  const std::vector<int>& tails() const { return tails_; }
  const std::vector<int>& heads() const { return heads_; }
  int tail_size() const { return static_cast<int>(tails_.size()); }
  int head_size() const { return static_cast<int>(heads_.size()); }
  int tail_multiplicity(int v) const;
  int head_multiplicity(int v) const;

  friend bool operator==(const Biclique& a, const Biclique& b) {
    return a.tails_ == b.tails_ && a.heads_ == b.heads_;
  }

 private:
  std::vector<int> tails_;
  std::vector<int> heads_;
};

/// Validated edge-disjoint cover of a digraph by bicliques: every
/// (tail, head) pair of every biclique is an edge, and each edge is covered
/// exactly once (counting multiplicity for parallel edges). Only obtainable
/// through validate_partition and the partition builders.
class BicliquePartition {
 public:
  const WeightedDigraph& host() const { return host_; }
  const std::vector<Biclique>& bicliques() const { return bicliques_; }
  int size() const { return static_cast<int>(bicliques_.size()); }

 private:
  BicliquePartition(WeightedDigraph host, std::vector<Biclique> bicliques)
      : host_(std::move(host)), bicliques_(std::move(bicliques)) {}

  friend BicliquePartition validate_partition(const WeightedDigraph&, std::vector<Biclique>);

  WeightedDigraph host_;
  std::vector<Biclique> bicliques_;
};

/// Checks the exact-cover conditions. Throws NotABiclique when a claimed
/// pair is not an edge, CoverageOverlap / CoverageGap when an edge is
/// covered too often / not often enough.
BicliquePartition validate_partition(const WeightedDigraph& g, std::vector<Biclique> bicliques);

/// One biclique ({u}, out-neighbors of u with multiplicity) per vertex u
/// with positive out-degree.
BicliquePartition star_partition(const WeightedDigraph& g);

struct NaturalLinePartition {
  LineDigraphResult line;
  BicliquePartition partition;
};

/// The natural biclique partition of the line digraph: for each vertex i of
/// g with in- and out-degree positive, the biclique (edges into i, edges out
/// of i). When every vertex qualifies, the biclique digraph reproduces g's
/// adjacency under the identity labeling (checked).
NaturalLinePartition natural_line_partition(const WeightedDigraph& g);

/// Partition of a blow-up obtained by blowing up each biclique of a
/// partition of the base digraph.
BicliquePartition blow_up_partition(const BlowUpResult& blown, const BicliquePartition& base);

enum class ReductionKind { kOmega, kTheta };

/// Weighted biclique digraph: one vertex per biclique, an edge Q_i -> Q_j
/// whenever head part of Q_i meets tail part of Q_j.
struct ReducedDigraph {
  WeightedDigraph digraph;
  ReductionKind kind = ReductionKind::kTheta;
  std::vector<Biclique> bicliques;  // vertex i of `digraph` is bicliques[i]
};

/// Omega reduction for hosts whose weights are induced by vertex weights
/// (edge u -> v weighted w_v): edge Q_i -> Q_j carries
/// w(Q_j) * sum over u in the part intersection of w_u / d_u.
/// Throws WeightsNotInduced / ZeroDegree.
ReducedDigraph omega_digraph(const BicliquePartition& partition, const std::vector<Rational>& vertex_weights);

/// Theta reduction (the all-ones specialization of omega): edge Q_i -> Q_j
/// carries |heads(Q_j)| * sum over u in the intersection of 1 / out_degree(u).
ReducedDigraph theta_digraph(const BicliquePartition& partition);

/// Host tree enumerator recovered from the reduced digraph:
/// t_root(host) scaled from the enumerators of the bicliques whose head part
/// contains the root. Unit hosts may pass no weights. Exactly equals
/// tree_enumerator(host, root).
Rational tree_enum_via_partition(const BicliquePartition& partition,
                                 const std::optional<std::vector<Rational>>& vertex_weights, int root);

/// The reverse direction: the reduced digraph's enumerator at one biclique,
/// assembled from host enumerators over its tail part.
Rational partition_tree_enum_from_host(const BicliquePartition& partition,
                                       const std::optional<std::vector<Rational>>& vertex_weights,
                                       int biclique_index);

struct EulerianCounts {
  BigInt arborescence_count;  // kappa, root-independent for Eulerian hosts
  BigInt circuit_count;
};

/// Eulerian-host reduction: arborescence and Eulerian-circuit counts from a
/// single enumerator of the theta digraph. Values are independent of the
/// biclique index (checked across all of them).
EulerianCounts eulerian_count_via_partition(const BicliquePartition& partition, int biclique_index);

/// Closed-form arborescence count of the line digraph rooted at an edge, for
/// unit-weight hosts with positive in- and out-degrees everywhere.
Rational line_tree_knuth(const WeightedDigraph& g, int edge_index);

/// Weighted line-digraph enumerator at an edge e = ij, for hosts with
/// weights induced by vertex weights and in-degree of j at least two.
Rational line_tree_levine(const WeightedDigraph& g, const std::vector<Rational>& vertex_weights,
                          int edge_index);

struct IdentityPair {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// Both sides of the line-digraph enumerator sum identity: the sum of
/// t_e over the line digraph against the degree-product multiple of the sum
/// of t_v over the host. Optional vertex weights re-weight the host
/// (induced) first.
IdentityPair line_sum_identity_check(const WeightedDigraph& g,
                                     const std::optional<std::vector<Rational>>& vertex_weights = std::nullopt);

/// Both sides of the two-block Schur complement spanning-tree identity for a
/// vertex split (part_one, rest): enumerators here are principal minors of
/// the two Schur complements, which are Laplacians of reduced weighted
/// digraphs. Throws SingularBlock when either diagonal block is singular.
IdentityPair schur_partition_identity(const WeightedDigraph& g, const IndexList& part_one, int u);

/// Spanning tree count of a connected undirected graph via the theta
/// reduction of its bidirected double cover.
BigInt undirected_tree_count(const UndirectedGraph& h, const BicliquePartition& partition_of_bidirect);

}  // namespace arbor
