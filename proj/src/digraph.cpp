#include "arbor/digraph.hpp"

#include <algorithm>
#include <string>

#include "arbor/error.hpp"

namespace arbor {

WeightedDigraph::WeightedDigraph(int vertex_count, const std::vector<EdgeSpec>& edges) : n_(vertex_count) {
  if (vertex_count < 0) fail("IndexOutOfRange", "negative vertex count");
  out_.resize(static_cast<size_t>(n_));
  in_.resize(static_cast<size_t>(n_));
  edges_.reserve(edges.size());
  for (const auto& [tail, head, weight] : edges) {
    if (tail < 0 || tail >= n_ || head < 0 || head >= n_)
      fail("IndexOutOfRange", "edge (" + std::to_string(tail) + ", " + std::to_string(head) +
                                  ") outside vertex range [0, " + std::to_string(n_) + ")");
    if (tail == head) fail("SelfLoop", "self-loop at vertex " + std::to_string(tail));
    if (!weight.is_positive())
      fail("NonPositiveWeight", "edge (" + std::to_string(tail) + ", " + std::to_string(head) +
                                    ") has weight " + weight.str());
    int index = static_cast<int>(edges_.size());
    edges_.push_back(Edge{tail, head, weight});
    out_[static_cast<size_t>(tail)].push_back(index);
    in_[static_cast<size_t>(head)].push_back(index);
  }
}

void WeightedDigraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail("IndexOutOfRange", "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
}

const Edge& WeightedDigraph::edge(int e) const {
  if (e < 0 || e >= edge_count())
    fail("IndexOutOfRange", "edge index " + std::to_string(e) + " outside [0, " + std::to_string(edge_count()) + ")");
  return edges_[static_cast<size_t>(e)];
}

const std::vector<int>& WeightedDigraph::out_edges(int v) const {
  check_vertex(v);
  return out_[static_cast<size_t>(v)];
}

const std::vector<int>& WeightedDigraph::in_edges(int v) const {
  check_vertex(v);
  return in_[static_cast<size_t>(v)];
}

Rational WeightedDigraph::weighted_degree(int v) const {
  Rational d(0);
  for (int e : out_edges(v)) d += edges_[static_cast<size_t>(e)].weight;
  return d;
}

Rational WeightedDigraph::pair_weight(int u, int v) const {
  check_vertex(v);
  Rational w(0);
  for (int e : out_edges(u))
    if (edges_[static_cast<size_t>(e)].head == v) w += edges_[static_cast<size_t>(e)].weight;
  return w;
}

bool WeightedDigraph::has_unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == Rational(1); });
}

bool WeightedDigraph::has_edge(int u, int v) const {
  check_vertex(v);
  for (int e : out_edges(u))
    if (edges_[static_cast<size_t>(e)].head == v) return true;
  return false;
}

WeightedDigraph unit_digraph(int vertex_count, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<EdgeSpec> specs;
  specs.reserve(arcs.size());
  for (auto [t, h] : arcs) specs.emplace_back(t, h, Rational(1));
  return WeightedDigraph(vertex_count, specs);
}

WeightedDigraph unit_weighting(const WeightedDigraph& g) {
  std::vector<EdgeSpec> specs;
  specs.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) specs.emplace_back(e.tail, e.head, Rational(1));
  return WeightedDigraph(g.vertex_count(), specs);
}

WeightedDigraph induced_weighting(const WeightedDigraph& g, const std::vector<Rational>& vertex_weights) {
  if (static_cast<int>(vertex_weights.size()) != g.vertex_count())
    fail("IndexOutOfRange", "vertex weight vector has size " + std::to_string(vertex_weights.size()) +
                                ", expected " + std::to_string(g.vertex_count()));
  std::vector<EdgeSpec> specs;
  specs.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges())
    specs.emplace_back(e.tail, e.head, vertex_weights[static_cast<size_t>(e.head)]);
  return WeightedDigraph(g.vertex_count(), specs);
}

Matrix laplacian(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  Matrix l = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    l(e.tail, e.tail) += e.weight;
    l(e.tail, e.head) -= e.weight;
  }
  return l;
}

LineDigraphResult line_digraph(const WeightedDigraph& g,
                               const std::optional<std::vector<Rational>>& line_vertex_weights) {
  const int m = g.edge_count();
  if (line_vertex_weights) {
    if (static_cast<int>(line_vertex_weights->size()) != m)
      fail("IndexOutOfRange", "line vertex weight vector has size " + std::to_string(line_vertex_weights->size()) +
                                  ", expected " + std::to_string(m));
    for (const Rational& w : *line_vertex_weights)
      if (!w.is_positive()) fail("NonPositiveWeight", "line vertex weight " + w.str());
  }
  auto weight_of = [&](int f) {
    return line_vertex_weights ? (*line_vertex_weights)[static_cast<size_t>(f)]
                               : g.edge(f).weight;
  };
  std::vector<EdgeSpec> specs;
  for (int e = 0; e < m; ++e)
    for (int f : g.out_edges(g.edge(e).head)) specs.emplace_back(e, f, weight_of(f));
  LineDigraphResult out{WeightedDigraph(m, specs), {}};
  out.vertex_of_edge.resize(static_cast<size_t>(m));
  for (int e = 0; e < m; ++e) out.vertex_of_edge[static_cast<size_t>(e)] = e;
  return out;
}

BlowUpResult blow_up(const WeightedDigraph& g, int k) {
  if (k < 1) fail("IndexOutOfRange", "blow-up factor must be positive");
  if (!g.has_unit_weights()) fail("NonUnitWeights", "blow-up is defined for unit-weight digraphs");
  const int n = g.vertex_count();
  std::vector<EdgeSpec> specs;
  specs.reserve(static_cast<size_t>(g.edge_count()) * static_cast<size_t>(k) * static_cast<size_t>(k));
  for (const Edge& e : g.edges())
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) specs.emplace_back(e.tail * k + a, e.head * k + b, Rational(1));
  BlowUpResult out{WeightedDigraph(n * k, specs), {}, k};
  out.class_of.resize(static_cast<size_t>(n) * static_cast<size_t>(k));
  for (int v = 0; v < n * k; ++v) out.class_of[static_cast<size_t>(v)] = v / k;
  return out;
}

UndirectedGraph::UndirectedGraph(int vertex_count, const std::vector<EdgeSpec>& edges) : n_(vertex_count) {
  if (vertex_count < 0) fail("IndexOutOfRange", "negative vertex count");
  std::vector<std::pair<int, int>> seen;
  for (const auto& [a, b, weight] : edges) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      fail("IndexOutOfRange", "edge {" + std::to_string(a) + ", " + std::to_string(b) + "} outside vertex range");
    if (a == b) fail("SelfLoop", "loop at vertex " + std::to_string(a));
    if (!weight.is_positive()) fail("NonPositiveWeight", "edge weight " + weight.str());
    auto key = std::minmax(a, b);
    if (std::find(seen.begin(), seen.end(), std::pair<int, int>(key.first, key.second)) != seen.end())
      fail("DuplicateEdge", "edge {" + std::to_string(a) + ", " + std::to_string(b) + "} repeated");
    seen.emplace_back(key.first, key.second);
    edges_.push_back(UEdge{a, b, weight});
  }
}

WeightedDigraph bidirect(const UndirectedGraph& h) {
  std::vector<EdgeSpec> specs;
  specs.reserve(h.edges().size() * 2);
  for (const auto& e : h.edges()) {
    specs.emplace_back(e.a, e.b, e.weight);
    specs.emplace_back(e.b, e.a, e.weight);
  }
  return WeightedDigraph(h.vertex_count(), specs);
}

bool is_connected(const UndirectedGraph& h) {
  const int n = h.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : h.edges()) {
    adj[static_cast<size_t>(e.a)].push_back(e.b);
    adj[static_cast<size_t>(e.b)].push_back(e.a);
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  return count == n;
}

namespace {

int reachable_count(const WeightedDigraph& g, bool reversed) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    const auto& incident = reversed ? g.in_edges(v) : g.out_edges(v);
    for (int e : incident) {
      int w = reversed ? g.edge(e).tail : g.edge(e).head;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  return reachable_count(g, false) == n && reachable_count(g, true) == n;
}

bool is_eulerian(const WeightedDigraph& g) {
  if (g.edge_count() == 0) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) != g.in_degree(v)) return false;
  return is_strongly_connected(g);
}

}  // namespace arbor
