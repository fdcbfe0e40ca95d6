#include "arbor/markov.hpp"

#include <string>

#include "arbor/error.hpp"
#include "arbor/linalg.hpp"

namespace arbor {

Matrix transition_matrix(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  Matrix p = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Rational d = g.weighted_degree(i);
    if (d.is_zero()) fail("ZeroDegree", "vertex " + std::to_string(i) + " has zero weighted degree");
    for (int e : g.out_edges(i)) p(i, g.edge(e).head) += g.edge(e).weight / d;
  }
  return p;
}

namespace {

void require_strongly_connected(const WeightedDigraph& g) {
  if (!is_strongly_connected(g)) fail("NotStronglyConnected", "digraph is not strongly connected");
}

void require_unit(const WeightedDigraph& g, const char* what) {
  if (!g.has_unit_weights()) fail("NonUnitWeights", std::string(what) + " needs a unit-weight digraph");
}

}  // namespace

Vector stationary_distribution(const WeightedDigraph& g) {
  require_strongly_connected(g);
  const int n = g.vertex_count();
  Matrix p = transition_matrix(g);
  // I - P is the Laplacian of the walk-normalized digraph, so one adjugate
  // row yields every principal minor det(I - P(v, v)) at once.
  Matrix adj = adjugate(Matrix(Matrix::Identity(n, n) - p));
  Vector pi(n);
  Rational total(0);
  for (int v = 0; v < n; ++v) {
    pi(v) = adj(0, v);
    total += pi(v);
  }
  if (total.is_zero()) fail("InternalCheck", "stationary normalization is zero");
  for (int v = 0; v < n; ++v) {
    pi(v) /= total;
    if (!pi(v).is_positive()) fail("InternalCheck", "stationary entry is not positive");
  }
  Vector residual = p.transpose() * pi - pi;
  for (int v = 0; v < n; ++v)
    if (!residual(v).is_zero()) fail("InternalCheck", "stationary vector is not a fixed point");
  return pi;
}

Matrix mean_first_passage(const WeightedDigraph& g) {
  require_strongly_connected(g);
  const int n = g.vertex_count();
  Matrix p = transition_matrix(g);
  Matrix m = Matrix::Zero(n, n);
  for (int target = 0; target < n; ++target) {
    IndexList others = complement_indices(n, {target});
    Matrix a = Matrix::Identity(n - 1, n - 1) - select_submatrix(p, others, others);
    Vector ones = Vector::Constant(n - 1, Rational(1));
    Vector x = solve(a, ones);
    for (size_t idx = 0; idx < others.size(); ++idx) m(others[idx], target) = x(static_cast<Eigen::Index>(idx));
  }
  return m;
}

Rational kemeny_constant(const WeightedDigraph& g) {
  require_strongly_connected(g);
  Polynomial q = char_poly(transition_matrix(g));
  Polynomial dq = q.derivative();
  Rational dq1 = dq.eval(Rational(1));
  if (dq1.is_zero()) fail("InternalCheck", "unit eigenvalue is not simple");
  return dq.derivative().eval(Rational(1)) / (Rational(2) * dq1);
}

Rational kemeny_from_first_passage(const WeightedDigraph& g, int start) {
  if (start < 0 || start >= g.vertex_count())
    fail("IndexOutOfRange", "start vertex " + std::to_string(start) + " outside range");
  Vector pi = stationary_distribution(g);
  Matrix m = mean_first_passage(g);
  Rational k(0);
  for (int j = 0; j < g.vertex_count(); ++j) {
    if (j == start) continue;
    k += m(start, j) * pi(j);
  }
  return k;
}

Rational kemeny_from_fundamental_matrix(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  Vector pi = stationary_distribution(g);
  Matrix p = transition_matrix(g);
  Matrix z = Matrix::Identity(n, n) - p + Vector::Constant(n, Rational(1)) * pi.transpose();
  return inverse(z).trace() - Rational(1);
}

Vector stationary_via_partition(const BicliquePartition& partition) {
  const WeightedDigraph& g = partition.host();
  require_unit(g, "partition reduction of the walk");
  require_strongly_connected(g);
  ReducedDigraph theta = theta_digraph(partition);
  if (!is_strongly_connected(theta.digraph))
    fail("ReducedNotStronglyConnected", "theta digraph is not strongly connected");
  Vector pi_theta = stationary_distribution(theta.digraph);
  Vector pi = Vector::Constant(g.vertex_count(), Rational(0));
  for (int i = 0; i < partition.size(); ++i) {
    const Biclique& b = partition.bicliques()[static_cast<size_t>(i)];
    int prev = -1;
    for (int u : b.heads()) {
      if (u == prev) continue;
      prev = u;
      pi(u) += Rational(b.head_multiplicity(u)) * pi_theta(i) / Rational(b.head_size());
    }
  }
  return pi;
}

Rational kemeny_via_partition(const BicliquePartition& partition) {
  const WeightedDigraph& g = partition.host();
  require_unit(g, "partition reduction of the walk");
  require_strongly_connected(g);
  ReducedDigraph theta = theta_digraph(partition);
  if (!is_strongly_connected(theta.digraph))
    fail("ReducedNotStronglyConnected", "theta digraph is not strongly connected");
  return kemeny_constant(theta.digraph) + Rational(g.vertex_count() - partition.size());
}

LineStationaryResult line_stationary(const WeightedDigraph& g) {
  require_unit(g, "line digraph stationary reduction");
  require_strongly_connected(g);
  Vector pi = stationary_distribution(g);
  LineStationaryResult out;
  out.edge_stationary.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) out.edge_stationary.push_back(pi(e.tail) / Rational(g.out_degree(e.tail)));
  out.kemeny = kemeny_constant(g) + Rational(g.edge_count() - g.vertex_count());
  return out;
}

Rational iterated_line_kemeny(const WeightedDigraph& g, int iterations, int max_vertices) {
  if (iterations < 0) fail("IndexOutOfRange", "iteration count must be non-negative");
  require_unit(g, "iterated line digraph reduction");
  require_strongly_connected(g);
  WeightedDigraph current = g;
  for (int s = 0; s < iterations; ++s) {
    if (current.edge_count() > max_vertices)
      fail("TooLarge", "iterated line digraph would have " + std::to_string(current.edge_count()) +
                           " vertices, cap is " + std::to_string(max_vertices));
    current = line_digraph(current).line;
  }
  Rational closed = kemeny_constant(g) + Rational(current.vertex_count() - g.vertex_count());
  Rational direct = kemeny_constant(current);
  if (closed != direct)
    fail("InternalCheck", "iterated line digraph closed form " + closed.str() +
                              " disagrees with direct value " + direct.str());
  return closed;
}

}  // namespace arbor
