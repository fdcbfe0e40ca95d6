#include "arbor/arborescence.hpp"

#include <string>

#include "arbor/error.hpp"
#include "arbor/linalg.hpp"

namespace arbor {

Rational tree_enumerator(const WeightedDigraph& g, int root) {
  if (root < 0 || root >= g.vertex_count())
    fail("IndexOutOfRange", "root " + std::to_string(root) + " outside [0, " +
                                std::to_string(g.vertex_count()) + ")");
  return minor_det(laplacian(g), {root}, {root});
}

std::vector<Rational> tree_enumerators(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  std::vector<Rational> t(static_cast<size_t>(n));
  if (n == 0) return t;
  // adj(L) has constant columns equal to the per-root enumerators, so one
  // row carries all of them.
  Matrix adj = adjugate(laplacian(g));
  for (int v = 0; v < n; ++v) t[static_cast<size_t>(v)] = adj(0, v);
  return t;
}

Rational Arborescence::weight_product(const WeightedDigraph& g) const {
  Rational p(1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == root) continue;
    p *= g.edge(chosen_edge[static_cast<size_t>(v)]).weight;
  }
  return p;
}

std::vector<Arborescence> enumerate_arborescences(const WeightedDigraph& g, int root, std::uint64_t cap) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n)
    fail("IndexOutOfRange", "root " + std::to_string(root) + " outside [0, " + std::to_string(n) + ")");

  std::vector<int> free_vertices;
  BigInt candidates = 1;
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    if (g.out_degree(v) == 0) return {};
    free_vertices.push_back(v);
    candidates *= g.out_degree(v);
  }
  if (candidates > cap)
    fail("TooLarge", "candidate count " + candidates.str() + " exceeds cap " + std::to_string(cap));

  std::vector<Arborescence> trees;
  std::vector<size_t> choice(free_vertices.size(), 0);
  std::vector<int> next(static_cast<size_t>(n), -1);
  while (true) {
    for (size_t i = 0; i < free_vertices.size(); ++i) {
      int v = free_vertices[i];
      int e = g.out_edges(v)[choice[i]];
      next[static_cast<size_t>(v)] = g.edge(e).head;
    }
    // Every vertex must reach the root; a chain longer than n steps would
    // have to repeat, so cutting there rejects cycles.
    bool ok = true;
    for (int v : free_vertices) {
      int cur = v;
      int steps = 0;
      while (cur != root && steps <= n) {
        cur = next[static_cast<size_t>(cur)];
        ++steps;
      }
      if (cur != root) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Arborescence t;
      t.root = root;
      t.chosen_edge.assign(static_cast<size_t>(n), -1);
      for (size_t i = 0; i < free_vertices.size(); ++i)
        t.chosen_edge[static_cast<size_t>(free_vertices[i])] = g.out_edges(free_vertices[i])[choice[i]];
      trees.push_back(std::move(t));
    }
    // Mixed-radix increment over the per-vertex out-edge choices.
    size_t pos = 0;
    while (pos < choice.size()) {
      if (++choice[pos] < static_cast<size_t>(g.out_degree(free_vertices[pos]))) break;
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) break;
  }
  return trees;
}

Rational arborescence_sum(const WeightedDigraph& g, int root, std::uint64_t cap) {
  Rational sum(0);
  for (const Arborescence& t : enumerate_arborescences(g, root, cap)) sum += t.weight_product(g);
  return sum;
}

BigInt count_eulerian_circuits(const WeightedDigraph& g) {
  if (!is_eulerian(g)) fail("NotEulerian", "digraph is not Eulerian");
  if (!g.has_unit_weights()) fail("NonUnitWeights", "Eulerian circuit counting needs unit weights");
  Rational kappa = tree_enumerator(g, 0);
  auto count = to_integer(kappa);
  if (!count) fail("NonIntegerResult", "arborescence count " + kappa.str() + " is not an integer");
  BigInt result = *count;
  for (int v = 0; v < g.vertex_count(); ++v) result *= factorial(g.out_degree(v) - 1);
  return result;
}

namespace {

std::uint64_t count_trails(const WeightedDigraph& g, int at, std::vector<bool>& used, int remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (int e : g.out_edges(at)) {
    if (used[static_cast<size_t>(e)]) continue;
    used[static_cast<size_t>(e)] = true;
    total += count_trails(g, g.edge(e).head, used, remaining - 1);
    used[static_cast<size_t>(e)] = false;
  }
  return total;
}

}  // namespace

BigInt enumerate_eulerian_circuits(const WeightedDigraph& g, int max_edges) {
  if (!is_eulerian(g)) fail("NotEulerian", "digraph is not Eulerian");
  if (g.edge_count() > max_edges)
    fail("TooLarge", std::to_string(g.edge_count()) + " edges exceeds enumeration cap " +
                         std::to_string(max_edges));
  // Anchor at the lowest edge index: each cyclic circuit class uses it
  // exactly once, so anchored trails and classes are in bijection.
  std::vector<bool> used(static_cast<size_t>(g.edge_count()), false);
  used[0] = true;
  return BigInt(count_trails(g, g.edge(0).head, used, g.edge_count() - 1));
}

}  // namespace arbor
