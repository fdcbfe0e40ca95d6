#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "arbor/digraph.hpp"

namespace arbor {

/// Deterministic seeded generator. All sampling goes through the modulo
/// reduction below so that a seed fixes the byte-exact instance stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi], inclusive.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(int num, int den) { return uniform(1, den) <= num; }

  Rational positive_rational(int max_num = 12, int max_den = 6) {
    return Rational(uniform(1, max_num), uniform(1, max_den));
  }

 private:
  std::mt19937_64 engine_;
};

enum class WeightKind { kUnit, kSmallInt, kRational };

struct RandomDigraphOptions {
  int min_vertices = 2;
  int max_vertices = 6;
  bool base_cycle = false;        // seed with a Hamiltonian cycle (forces strong connectivity)
  bool min_out_degree_one = true; // give every vertex at least one out-edge
  int max_extra_edges = 6;
  bool allow_parallel = true;
  WeightKind weights = WeightKind::kUnit;
};

WeightedDigraph random_digraph(Rng& rng, const RandomDigraphOptions& options);

/// Strongly connected unit-weight digraph (cycle plus extras).
WeightedDigraph random_strongly_connected(Rng& rng, int min_vertices, int max_vertices, int max_extra_edges,
                                          WeightKind weights = WeightKind::kUnit);

/// Eulerian digraph assembled from overlapping cycles, capped at `max_edges`
/// edges.
WeightedDigraph random_eulerian(Rng& rng, int max_vertices, int max_edges);

/// Digraph with one sink vertex of out-degree zero and in-degree >= 2, all
/// in-degrees positive.
WeightedDigraph random_digraph_with_sink(Rng& rng, int min_vertices, int max_vertices);

UndirectedGraph random_connected_graph(Rng& rng, int min_vertices, int max_vertices);

std::vector<Rational> random_vertex_weights(Rng& rng, int n, int lo, int hi);

/// Nonempty proper subset of {0..n-1}, sorted.
std::vector<int> random_proper_subset(Rng& rng, int n);

}  // namespace arbor
