#include "arbor/random_gen.hpp"

#include <algorithm>
#include <utility>

#include "arbor/error.hpp"

namespace arbor {

namespace {

Rational draw_weight(Rng& rng, WeightKind kind) {
  switch (kind) {
    case WeightKind::kUnit:
      return Rational(1);
    case WeightKind::kSmallInt:
      return Rational(rng.uniform(1, 9));
    case WeightKind::kRational:
      return rng.positive_rational();
  }
  return Rational(1);
}

}  // namespace

WeightedDigraph random_digraph(Rng& rng, const RandomDigraphOptions& options) {
  const int n = rng.uniform(options.min_vertices, options.max_vertices);
  std::vector<EdgeSpec> edges;
  std::vector<std::pair<int, int>> present;
  auto add = [&](int t, int h) {
    edges.emplace_back(t, h, draw_weight(rng, options.weights));
    present.emplace_back(t, h);
  };
  if (options.base_cycle && n >= 2)
    for (int v = 0; v < n; ++v) add(v, (v + 1) % n);
  if (options.min_out_degree_one && !options.base_cycle && n >= 2)
    for (int v = 0; v < n; ++v) {
      int h = rng.uniform(0, n - 2);
      if (h >= v) ++h;
      add(v, h);
    }
  int extra = rng.uniform(0, options.max_extra_edges);
  for (int i = 0; i < extra && n >= 2; ++i) {
    int t = rng.uniform(0, n - 1);
    int h = rng.uniform(0, n - 2);
    if (h >= t) ++h;
    if (!options.allow_parallel &&
        std::find(present.begin(), present.end(), std::pair<int, int>(t, h)) != present.end())
      continue;
    add(t, h);
  }
  return WeightedDigraph(n, edges);
}

WeightedDigraph random_strongly_connected(Rng& rng, int min_vertices, int max_vertices, int max_extra_edges,
                                          WeightKind weights) {
  RandomDigraphOptions options;
  options.min_vertices = min_vertices;
  options.max_vertices = max_vertices;
  options.base_cycle = true;
  options.max_extra_edges = max_extra_edges;
  options.weights = weights;
  return random_digraph(rng, options);
}

WeightedDigraph random_eulerian(Rng& rng, int max_vertices, int max_edges) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    const int n = rng.uniform(2, max_vertices);
    std::vector<EdgeSpec> edges;
    int cycles = rng.uniform(1, 3);
    for (int c = 0; c < cycles; ++c) {
      int len = rng.uniform(2, n);
      std::vector<int> vertices(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) vertices[static_cast<size_t>(v)] = v;
      // Deterministic Fisher-Yates prefix shuffle for the cycle support.
      for (int i = 0; i < len; ++i) {
        int j = rng.uniform(i, n - 1);
        std::swap(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(j)]);
      }
      for (int i = 0; i < len; ++i)
        edges.emplace_back(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>((i + 1) % len)],
                           Rational(1));
    }
    if (static_cast<int>(edges.size()) > max_edges) continue;
    WeightedDigraph g(n, edges);
    if (is_eulerian(g)) return g;
  }
  // Overlapping cycles show up fast in practice; keep a fixed fallback so
  // the generator is total.
  return unit_digraph(3, {{0, 1}, {1, 2}, {2, 0}});
}

WeightedDigraph random_digraph_with_sink(Rng& rng, int min_vertices, int max_vertices) {
  const int n = rng.uniform(std::max(3, min_vertices), max_vertices);
  const int sink = n - 1;
  std::vector<EdgeSpec> edges;
  // Cycle over the non-sink vertices keeps their in-degrees positive.
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, (v + 1) % (n - 1), Rational(1));
  // At least two edges into the sink, none out of it.
  int into_sink = rng.uniform(2, n - 1);
  for (int i = 0; i < into_sink; ++i) edges.emplace_back(rng.uniform(0, n - 2), sink, Rational(1));
  int extra = rng.uniform(0, n);
  for (int i = 0; i < extra; ++i) {
    int t = rng.uniform(0, n - 2);
    int h = rng.uniform(0, n - 2);
    if (t != h) edges.emplace_back(t, h, Rational(1));
  }
  return WeightedDigraph(n, edges);
}

UndirectedGraph random_connected_graph(Rng& rng, int min_vertices, int max_vertices) {
  const int n = rng.uniform(min_vertices, max_vertices);
  std::vector<EdgeSpec> edges;
  std::vector<std::pair<int, int>> present;
  auto try_add = [&](int a, int b) {
    auto key = std::minmax(a, b);
    if (a == b) return;
    if (std::find(present.begin(), present.end(), std::pair<int, int>(key.first, key.second)) != present.end())
      return;
    present.emplace_back(key.first, key.second);
    edges.emplace_back(a, b, Rational(1));
  };
  for (int v = 1; v < n; ++v) try_add(v, rng.uniform(0, v - 1));  // random spanning tree
  int extra = rng.uniform(0, n);
  for (int i = 0; i < extra; ++i) try_add(rng.uniform(0, n - 1), rng.uniform(0, n - 1));
  return UndirectedGraph(n, edges);
}

std::vector<Rational> random_vertex_weights(Rng& rng, int n, int lo, int hi) {
  std::vector<Rational> w(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) w[static_cast<size_t>(v)] = Rational(rng.uniform(lo, hi));
  return w;
}

std::vector<int> random_proper_subset(Rng& rng, int n) {
  std::vector<int> subset;
  while (true) {
    subset.clear();
    for (int v = 0; v < n; ++v)
      if (rng.chance(1, 2)) subset.push_back(v);
    if (!subset.empty() && static_cast<int>(subset.size()) < n) return subset;
  }
}

}  // namespace arbor
