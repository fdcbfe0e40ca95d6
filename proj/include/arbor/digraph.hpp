#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "arbor/matrix.hpp"

namespace arbor {

/// Directed edge with exact positive weight. The edge's position in the
/// digraph's edge list is its identity (edge_index); parallel edges are
/// distinct entries.
struct Edge {
  int tail = 0;
  int head = 0;
  Rational weight{1};

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.tail == b.tail && a.head == b.head && a.weight == b.weight;
  }
};

using EdgeSpec = std::tuple<int, int, Rational>;

/// Weighted digraph on dense vertex ids {0..n-1}. Immutable after
/// construction; edge list order is construction order. Parallel edges are
/// kept distinct, self-loops are rejected.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  WeightedDigraph(int vertex_count, const std::vector<EdgeSpec>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const;

  /// Edge indices with the given tail/head, in construction order.
  const std::vector<int>& out_edges(int v) const;
  const std::vector<int>& in_edges(int v) const;

  int out_degree(int v) const { return static_cast<int>(out_edges(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_edges(v).size()); }

  /// Weighted degree d(v): sum of outgoing edge weights.
  Rational weighted_degree(int v) const;

  /// Total weight of all parallel edges u -> v (zero when absent).
  Rational pair_weight(int u, int v) const;

  bool has_unit_weights() const;
  bool has_edge(int u, int v) const;

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Convenience builder for unit-weight digraphs.
WeightedDigraph unit_digraph(int vertex_count, const std::vector<std::pair<int, int>>& arcs);

/// Copy with every weight replaced by 1.
WeightedDigraph unit_weighting(const WeightedDigraph& g);

/// Copy where each edge u -> v carries vertex_weights[v] (weights induced by
/// a vertex weighting).
WeightedDigraph induced_weighting(const WeightedDigraph& g, const std::vector<Rational>& vertex_weights);

/// Out-degree Laplacian: diagonal d(v), entry (i, j) minus the total weight
/// of edges i -> j. Every row sums to zero.
Matrix laplacian(const WeightedDigraph& g);

struct LineDigraphResult {
  WeightedDigraph line;
  /// Line-digraph vertex for each edge index of the source (identity map,
  /// kept explicit for callers that track edges symbolically).
  std::vector<int> vertex_of_edge;
};

/// Line digraph: one vertex per edge of g, an edge e -> f whenever
/// head(e) = tail(f). By default the edge (e, f) carries the weight of f in
/// g (weights induced by the edge weights of g); `line_vertex_weights`
/// overrides the per-target-vertex weight.
LineDigraphResult line_digraph(const WeightedDigraph& g,
                               const std::optional<std::vector<Rational>>& line_vertex_weights = std::nullopt);

struct BlowUpResult {
  WeightedDigraph graph;
  std::vector<int> class_of;  // class index per blown-up vertex
  int k = 1;
};

/// k-blow-up of an unweighted digraph: vertex i becomes class {ik..ik+k-1},
/// each edge becomes a complete k x k bundle of unit edges.
BlowUpResult blow_up(const WeightedDigraph& g, int k);

/// Simple undirected weighted graph (no loops, no repeated edges).
class UndirectedGraph {
 public:
  struct UEdge {
    int a = 0;
    int b = 0;
    Rational weight{1};
  };

  UndirectedGraph(int vertex_count, const std::vector<EdgeSpec>& edges);

  int vertex_count() const { return n_; }
  const std::vector<UEdge>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<UEdge> edges_;
};

/// Replaces each undirected edge {i, j} by directed edges i -> j and j -> i
/// of the same weight.
WeightedDigraph bidirect(const UndirectedGraph& h);

bool is_connected(const UndirectedGraph& h);
bool is_strongly_connected(const WeightedDigraph& g);

/// Eulerian as used here: at least one edge, strongly connected, and
/// in-degree equals out-degree at every vertex.
bool is_eulerian(const WeightedDigraph& g);

}  // namespace arbor
