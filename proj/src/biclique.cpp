#include "arbor/biclique.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "arbor/error.hpp"
#include "arbor/linalg.hpp"

namespace arbor {

Biclique::Biclique(std::vector<int> tail_part, std::vector<int> head_part)
    : tails_(std::move(tail_part)), heads_(std::move(head_part)) {
  std::sort(tails_.begin(), tails_.end());
  std::sort(heads_.begin(), heads_.end());
}

int Biclique::tail_multiplicity(int v) const {
  auto [lo, hi] = std::equal_range(tails_.begin(), tails_.end(), v);
  return static_cast<int>(hi - lo);
}

int Biclique::head_multiplicity(int v) const {
  auto [lo, hi] = std::equal_range(heads_.begin(), heads_.end(), v);
  return static_cast<int>(hi - lo);
}

BicliquePartition validate_partition(const WeightedDigraph& g, std::vector<Biclique> bicliques) {
  const int n = g.vertex_count();
  std::map<std::pair<int, int>, int> edge_multiplicity;
  for (const Edge& e : g.edges()) ++edge_multiplicity[{e.tail, e.head}];

  std::map<std::pair<int, int>, int> covered;
  for (size_t q = 0; q < bicliques.size(); ++q) {
    const Biclique& b = bicliques[q];
    if (b.tail_size() == 0 || b.head_size() == 0)
      fail("NotABiclique", "biclique " + std::to_string(q) + " has an empty part");
    for (int v : b.tails())
      if (v < 0 || v >= n) fail("IndexOutOfRange", "biclique vertex " + std::to_string(v));
    for (int v : b.heads())
      if (v < 0 || v >= n) fail("IndexOutOfRange", "biclique vertex " + std::to_string(v));
    for (int u : b.tails())
      for (int v : b.heads()) {
        if (!edge_multiplicity.count({u, v}))
          fail("NotABiclique", "biclique " + std::to_string(q) + " claims pair (" + std::to_string(u) +
                                   ", " + std::to_string(v) + ") which is not an edge");
        ++covered[{u, v}];
      }
  }
  for (const auto& [pair, mult] : edge_multiplicity) {
    auto it = covered.find(pair);
    int got = it == covered.end() ? 0 : it->second;
    if (got > mult)
      fail("CoverageOverlap", "pair (" + std::to_string(pair.first) + ", " + std::to_string(pair.second) +
                                  ") covered " + std::to_string(got) + " times for multiplicity " +
                                  std::to_string(mult));
    if (got < mult)
      fail("CoverageGap", "pair (" + std::to_string(pair.first) + ", " + std::to_string(pair.second) +
                              ") covered " + std::to_string(got) + " times for multiplicity " +
                              std::to_string(mult));
  }
  return BicliquePartition(g, std::move(bicliques));
}

BicliquePartition star_partition(const WeightedDigraph& g) {
  std::vector<Biclique> bicliques;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.out_degree(u) == 0) continue;
    std::vector<int> heads;
    heads.reserve(g.out_edges(u).size());
    for (int e : g.out_edges(u)) heads.push_back(g.edge(e).head);
    bicliques.emplace_back(std::vector<int>{u}, std::move(heads));
  }
  return validate_partition(g, std::move(bicliques));
}

NaturalLinePartition natural_line_partition(const WeightedDigraph& g) {
  LineDigraphResult line = line_digraph(g);
  std::vector<Biclique> bicliques;
  std::vector<int> biclique_vertex;  // host vertex behind each biclique
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (g.in_degree(i) == 0 || g.out_degree(i) == 0) continue;
    bicliques.emplace_back(g.in_edges(i), g.out_edges(i));
    biclique_vertex.push_back(i);
  }
  BicliquePartition partition = validate_partition(line.line, std::move(bicliques));

  bool all_positive = true;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.in_degree(v) == 0 || g.out_degree(v) == 0) all_positive = false;
  if (all_positive) {
    // Biclique adjacency must reproduce the host adjacency one-to-one.
    const auto& bs = partition.bicliques();
    for (size_t i = 0; i < bs.size(); ++i)
      for (size_t j = 0; j < bs.size(); ++j) {
        if (i == j) continue;
        bool meets = false;
        for (int e : bs[i].heads())
          if (bs[j].tail_multiplicity(e) > 0) meets = true;
        if (meets != g.has_edge(biclique_vertex[i], biclique_vertex[j]))
          fail("InternalCheck", "natural line partition does not reproduce the source adjacency");
      }
  }
  return {std::move(line), std::move(partition)};
}

BicliquePartition blow_up_partition(const BlowUpResult& blown, const BicliquePartition& base) {
  const int k = blown.k;
  std::vector<Biclique> bicliques;
  bicliques.reserve(base.bicliques().size());
  for (const Biclique& b : base.bicliques()) {
    std::vector<int> tails;
    std::vector<int> heads;
    for (int v : b.tails())
      for (int c = 0; c < k; ++c) tails.push_back(v * k + c);
    for (int v : b.heads())
      for (int c = 0; c < k; ++c) heads.push_back(v * k + c);
    bicliques.emplace_back(std::move(tails), std::move(heads));
  }
  return validate_partition(blown.graph, std::move(bicliques));
}

namespace {

std::vector<Rational> unit_weights(int n) { return std::vector<Rational>(static_cast<size_t>(n), Rational(1)); }

void require_induced(const WeightedDigraph& g, const std::vector<Rational>& vertex_weights) {
  if (static_cast<int>(vertex_weights.size()) != g.vertex_count())
    fail("WeightsNotInduced", "vertex weight vector has size " + std::to_string(vertex_weights.size()) +
                                  ", expected " + std::to_string(g.vertex_count()));
  for (const Rational& w : vertex_weights)
    if (!w.is_positive()) fail("NonPositiveWeight", "vertex weight " + w.str());
  for (const Edge& e : g.edges())
    if (e.weight != vertex_weights[static_cast<size_t>(e.head)])
      fail("WeightsNotInduced", "edge (" + std::to_string(e.tail) + ", " + std::to_string(e.head) +
                                    ") has weight " + e.weight.str() + ", expected " +
                                    vertex_weights[static_cast<size_t>(e.head)].str());
}

Rational part_weight(const Biclique& b, const std::vector<Rational>& w) {
  Rational sum(0);
  for (int u : b.heads()) sum += w[static_cast<size_t>(u)];
  return sum;
}

// Multiset intersection of heads(i) and tails(j) with product multiplicity,
// each vertex u contributing factor(u).
Rational intersection_sum(const Biclique& from, const Biclique& to,
                          const std::vector<Rational>& factor) {
  Rational sum(0);
  int prev = -1;
  for (int u : from.heads()) {
    if (u == prev) continue;  // handled with full multiplicity below
    prev = u;
    int m = from.head_multiplicity(u) * to.tail_multiplicity(u);
    if (m > 0) sum += Rational(m) * factor[static_cast<size_t>(u)];
  }
  return sum;
}

ReducedDigraph build_reduced(const BicliquePartition& partition, const std::vector<Rational>& vertex_weights,
                             ReductionKind kind) {
  const WeightedDigraph& g = partition.host();
  require_induced(g, vertex_weights);
  const auto& bs = partition.bicliques();
  const int r = partition.size();

  std::vector<Rational> weight_over_degree(static_cast<size_t>(g.vertex_count()));
  for (int u = 0; u < g.vertex_count(); ++u) {
    bool is_tail = false;
    for (const Biclique& b : bs)
      if (b.tail_multiplicity(u) > 0) is_tail = true;
    if (!is_tail) continue;
    Rational d = g.weighted_degree(u);
    if (d.is_zero()) fail("ZeroDegree", "tail vertex " + std::to_string(u) + " has zero weighted degree");
    weight_over_degree[static_cast<size_t>(u)] = vertex_weights[static_cast<size_t>(u)] / d;
  }

  std::vector<EdgeSpec> specs;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;  // would need a self-loop in the host
      Rational s = intersection_sum(bs[static_cast<size_t>(i)], bs[static_cast<size_t>(j)], weight_over_degree);
      if (s.is_zero()) continue;
      specs.emplace_back(i, j, part_weight(bs[static_cast<size_t>(j)], vertex_weights) * s);
    }
  return ReducedDigraph{WeightedDigraph(r, specs), kind, bs};
}

}  // namespace

ReducedDigraph omega_digraph(const BicliquePartition& partition,
                             const std::vector<Rational>& vertex_weights) {
  return build_reduced(partition, vertex_weights, ReductionKind::kOmega);
}

ReducedDigraph theta_digraph(const BicliquePartition& partition) {
  // Theta depends only on the host structure: build it on the unit copy so
  // weighted hosts reduce the same way as their underlying digraph.
  BicliquePartition unit_partition =
      validate_partition(unit_weighting(partition.host()), partition.bicliques());
  return build_reduced(unit_partition, unit_weights(partition.host().vertex_count()),
                       ReductionKind::kTheta);
}

namespace {

struct ReductionScaling {
  std::vector<Rational> weights;   // resolved vertex weights
  Rational degree_product{1};      // product of weighted degrees
  Rational part_product{1};        // product of w(Q_i)
};

ReductionScaling reduction_scaling(const BicliquePartition& partition,
                                   const std::optional<std::vector<Rational>>& vertex_weights) {
  const WeightedDigraph& g = partition.host();
  ReductionScaling s;
  s.weights = vertex_weights ? *vertex_weights : unit_weights(g.vertex_count());
  require_induced(g, s.weights);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) == 0)
      fail("ZeroOutDegree", "vertex " + std::to_string(v) + " has out-degree zero");
    s.degree_product *= g.weighted_degree(v);
  }
  for (const Biclique& b : partition.bicliques()) s.part_product *= part_weight(b, s.weights);
  return s;
}

}  // namespace

Rational tree_enum_via_partition(const BicliquePartition& partition,
                                 const std::optional<std::vector<Rational>>& vertex_weights, int root) {
  const WeightedDigraph& g = partition.host();
  if (root < 0 || root >= g.vertex_count())
    fail("IndexOutOfRange", "root " + std::to_string(root) + " outside vertex range");
  ReductionScaling s = reduction_scaling(partition, vertex_weights);
  if (g.in_degree(root) == 0)
    fail("RootNotCovered", "root " + std::to_string(root) +
                               " lies in no head part; query the Laplacian minor directly");

  ReducedDigraph reduced = build_reduced(partition, s.weights,
                                         vertex_weights ? ReductionKind::kOmega : ReductionKind::kTheta);
  std::vector<Rational> t_reduced = tree_enumerators(reduced.digraph);
  Rational sum(0);
  for (int i = 0; i < partition.size(); ++i) {
    int mult = partition.bicliques()[static_cast<size_t>(i)].head_multiplicity(root);
    if (mult > 0) sum += Rational(mult) * t_reduced[static_cast<size_t>(i)];
  }
  Rational w_root = s.weights[static_cast<size_t>(root)];
  Rational degrees_except_root = s.degree_product / g.weighted_degree(root);
  return w_root * degrees_except_root / s.part_product * sum;
}

Rational partition_tree_enum_from_host(const BicliquePartition& partition,
                                       const std::optional<std::vector<Rational>>& vertex_weights,
                                       int biclique_index) {
  if (biclique_index < 0 || biclique_index >= partition.size())
    fail("IndexOutOfRange", "biclique index " + std::to_string(biclique_index) + " outside range");
  ReductionScaling s = reduction_scaling(partition, vertex_weights);
  std::vector<Rational> t_host = tree_enumerators(partition.host());
  const Biclique& b = partition.bicliques()[static_cast<size_t>(biclique_index)];
  Rational sum(0);
  int prev = -1;
  for (int u : b.tails()) {
    if (u == prev) continue;
    prev = u;
    sum += Rational(b.tail_multiplicity(u)) * t_host[static_cast<size_t>(u)];
  }
  return s.part_product / s.degree_product * sum;
}

EulerianCounts eulerian_count_via_partition(const BicliquePartition& partition, int biclique_index) {
  const WeightedDigraph& g = partition.host();
  if (biclique_index < 0 || biclique_index >= partition.size())
    fail("IndexOutOfRange", "biclique index " + std::to_string(biclique_index) + " outside range");
  if (!is_eulerian(g)) fail("NotEulerian", "host digraph is not Eulerian");
  if (!g.has_unit_weights()) fail("NonUnitWeights", "Eulerian reduction needs a unit-weight host");

  ReducedDigraph theta = theta_digraph(partition);
  std::vector<Rational> t_theta = tree_enumerators(theta.digraph);

  Rational degree_product(1);
  Rational degree_factorial_product(1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    degree_product *= Rational(g.out_degree(v));
    degree_factorial_product *= Rational(factorial(g.out_degree(v)));
  }
  Rational head_size_product(1);
  for (const Biclique& b : partition.bicliques()) head_size_product *= Rational(b.head_size());

  std::optional<Rational> kappa;
  std::optional<Rational> circuits;
  for (int i = 0; i < partition.size(); ++i) {
    const Biclique& b = partition.bicliques()[static_cast<size_t>(i)];
    Rational base = t_theta[static_cast<size_t>(i)] / Rational(b.tail_size()) / head_size_product;
    Rational k = degree_product * base;
    Rational e = degree_factorial_product * base;
    if (!kappa) {
      kappa = k;
      circuits = e;
    } else if (*kappa != k || *circuits != e) {
      fail("InternalCheck", "reduction value differs across biclique indices");
    }
  }
  auto kappa_int = to_integer(*kappa);
  auto circuits_int = to_integer(*circuits);
  if (!kappa_int || !circuits_int || *kappa_int <= 0 || *circuits_int <= 0)
    fail("NonIntegerResult", "reduction produced " + kappa->str() + " and " + circuits->str() +
                                 "; expected positive integers");
  return EulerianCounts{*kappa_int, *circuits_int};
}

Rational line_tree_knuth(const WeightedDigraph& g, int edge_index) {
  if (!g.has_unit_weights()) fail("NonUnitWeights", "closed form applies to unit-weight digraphs");
  const Edge& e = g.edge(edge_index);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) == 0 || g.in_degree(v) == 0)
      fail("DegreeHypothesisViolated",
           "vertex " + std::to_string(v) + " needs positive in- and out-degree");

  std::vector<Rational> kappa = tree_enumerators(g);
  const int j = e.head;
  Rational others(0);
  for (int f : g.in_edges(j)) {
    if (f == edge_index) continue;
    others += kappa[static_cast<size_t>(g.edge(f).tail)];
  }
  Rational bracket = kappa[static_cast<size_t>(j)] - others / Rational(g.out_degree(j));
  Rational degree_factor(1);
  for (int v = 0; v < g.vertex_count(); ++v)
    degree_factor *= pow(Rational(g.out_degree(v)), g.in_degree(v) - 1);
  return bracket * degree_factor;
}

Rational line_tree_levine(const WeightedDigraph& g, const std::vector<Rational>& vertex_weights,
                          int edge_index) {
  require_induced(g, vertex_weights);
  const Edge& e = g.edge(edge_index);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.in_degree(v) == 0)
      fail("HypothesisViolated", "vertex " + std::to_string(v) + " has in-degree zero");
  const int j = e.head;
  if (g.in_degree(j) < 2)
    fail("HypothesisViolated",
         "edge head " + std::to_string(j) + " has in-degree " + std::to_string(g.in_degree(j)) +
             "; the formula needs at least 2");

  Rational value = e.weight * tree_enumerator(g, e.tail);
  value *= pow(g.weighted_degree(j), g.in_degree(j) - 2);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == j) continue;
    value *= pow(g.weighted_degree(v), g.in_degree(v) - 1);
  }
  return value;
}

IdentityPair line_sum_identity_check(const WeightedDigraph& g,
                                     const std::optional<std::vector<Rational>>& vertex_weights) {
  WeightedDigraph host = vertex_weights ? induced_weighting(g, *vertex_weights) : g;
  for (int v = 0; v < host.vertex_count(); ++v)
    if (host.in_degree(v) == 0)
      fail("InDegreeZero", "vertex " + std::to_string(v) + " has in-degree zero");

  Rational lhs(0);
  for (const Rational& t : tree_enumerators(line_digraph(host).line)) lhs += t;

  Rational rhs(0);
  for (const Rational& t : tree_enumerators(host)) rhs += t;
  for (int v = 0; v < host.vertex_count(); ++v)
    rhs *= pow(host.weighted_degree(v), host.in_degree(v) - 1);
  return IdentityPair{lhs, rhs};
}

IdentityPair schur_partition_identity(const WeightedDigraph& g, const IndexList& part_one, int u) {
  const int n = g.vertex_count();
  IndexList v1 = checked_index_set(n, part_one, "partition");
  if (v1.empty() || static_cast<int>(v1.size()) == n)
    fail("IndexOutOfRange", "vertex split must be a nonempty proper subset");
  if (!std::binary_search(v1.begin(), v1.end(), u))
    fail("IndexOutOfRange", "vertex " + std::to_string(u) + " is not in the first part");
  IndexList v2 = complement_indices(n, v1);

  Matrix l = laplacian(g);
  Rational det_l1 = det(select_submatrix(l, v1, v1));
  Rational det_l2 = det(select_submatrix(l, v2, v2));
  if (det_l1.is_zero() || det_l2.is_zero()) fail("SingularBlock", "diagonal Laplacian block is singular");

  // schur_complement(l, v2) eliminates the second part, leaving the reduced
  // Laplacian on part one (rows/cols in ascending part-one order).
  Matrix s1 = schur_complement(l, v2);
  Matrix s2 = schur_complement(l, v1);
  auto enumerators = [](const Matrix& lap) {
    const int size = static_cast<int>(lap.rows());
    std::vector<Rational> t(static_cast<size_t>(size));
    for (int p = 0; p < size; ++p) t[static_cast<size_t>(p)] = minor_det(lap, {p}, {p});
    return t;
  };
  std::vector<Rational> t1 = enumerators(s1);
  std::vector<Rational> t2 = enumerators(s2);

  auto position = [](const IndexList& set, int v) {
    return static_cast<size_t>(std::lower_bound(set.begin(), set.end(), v) - set.begin());
  };

  Rational lhs = g.weighted_degree(u) * t1[position(v1, u)];
  for (size_t p = 0; p < v1.size(); ++p) {
    Rational w = g.pair_weight(v1[p], u);
    if (!w.is_zero()) lhs -= w * t1[p];
  }
  Rational rhs(0);
  for (size_t p = 0; p < v2.size(); ++p) {
    Rational w = g.pair_weight(v2[p], u);
    if (!w.is_zero()) rhs += w * t2[p];
  }
  rhs *= det_l1 / det_l2;
  return IdentityPair{lhs, rhs};
}

BigInt undirected_tree_count(const UndirectedGraph& h, const BicliquePartition& partition_of_bidirect) {
  if (!is_connected(h)) fail("Disconnected", "undirected graph is not connected");
  if (!(partition_of_bidirect.host() == bidirect(h)))
    fail("HostMismatch", "partition host is not the bidirected double cover of the graph");
  return eulerian_count_via_partition(partition_of_bidirect, 0).arborescence_count;
}

}  // namespace arbor
