#include "arbor/verify.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "arbor/arborescence.hpp"
#include "arbor/biclique.hpp"
#include "arbor/error.hpp"
#include "arbor/graph_io.hpp"
#include "arbor/linalg.hpp"
#include "arbor/markov.hpp"
#include "arbor/random_gen.hpp"

namespace arbor {

bool VerificationReport::all_pass() const { return failures() == 0; }

int VerificationReport::failures() const {
  int n = 0;
  for (const auto& inst : instances)
    if (!inst.pass) ++n;
  return n;
}

namespace {

WeightedDigraph c3() { return unit_digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
WeightedDigraph d2() { return unit_digraph(2, {{0, 1}, {1, 0}}); }
WeightedDigraph k3pm() {
  return unit_digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
}
WeightedDigraph m2() { return unit_digraph(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}}); }

std::string describe(const WeightedDigraph& g) {
  return "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
}

std::string rational_list(const std::vector<Rational>& values) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ' ';
    os << values[i];
  }
  os << ']';
  return os.str();
}

std::string vector_list(const Vector& v) {
  std::vector<Rational> values(static_cast<size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) values[static_cast<size_t>(i)] = v(i);
  return rational_list(values);
}

std::string weight_line(const std::vector<Rational>& w) {
  std::ostringstream os;
  os << "# vertex weights:";
  for (const Rational& x : w) os << ' ' << x;
  os << '\n';
  return os.str();
}

std::string partition_text(const BicliquePartition& partition) {
  std::ostringstream os;
  write_partition(os, partition.bicliques());
  return os.str();
}

void push(VerificationReport& report, std::string descriptor, std::string lhs, std::string rhs, bool pass,
          std::string replay = {}) {
  InstanceResult inst;
  inst.descriptor = std::move(descriptor);
  inst.lhs = std::move(lhs);
  inst.rhs = std::move(rhs);
  inst.pass = pass;
  if (!pass) inst.replay = std::move(replay);
  report.instances.push_back(std::move(inst));
}

WeightedDigraph with_extra_edge(const WeightedDigraph& g, int tail, int head) {
  std::vector<EdgeSpec> specs;
  for (const Edge& e : g.edges()) specs.emplace_back(e.tail, e.head, e.weight);
  specs.emplace_back(tail, head, Rational(1));
  return WeightedDigraph(g.vertex_count(), specs);
}

// ---------------------------------------------------------------------------
// matrix-tree: Laplacian-minor enumerators against brute-force enumeration.

void exhaustive_pairs(int n, std::vector<std::pair<int, int>>& pairs) {
  pairs.clear();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
}

bool check_tree_oracle(const WeightedDigraph& g, std::string& lhs, std::string& rhs) {
  std::vector<Rational> batch = tree_enumerators(g);
  std::vector<Rational> direct(static_cast<size_t>(g.vertex_count()));
  std::vector<Rational> oracle(static_cast<size_t>(g.vertex_count()));
  bool pass = true;
  for (int root = 0; root < g.vertex_count(); ++root) {
    direct[static_cast<size_t>(root)] = tree_enumerator(g, root);
    oracle[static_cast<size_t>(root)] = arborescence_sum(g, root);
    if (direct[static_cast<size_t>(root)] != oracle[static_cast<size_t>(root)]) pass = false;
    if (direct[static_cast<size_t>(root)] != batch[static_cast<size_t>(root)]) pass = false;
  }
  lhs = rational_list(direct);
  rhs = rational_list(oracle);
  return pass;
}

void suite_matrix_tree(VerificationReport& report, Rng& rng, int count) {
  std::vector<std::pair<int, int>> pairs;
  for (int n = 1; n <= 4; ++n) {
    exhaustive_pairs(n, pairs);
    const int bits = static_cast<int>(pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
      if (__builtin_popcount(mask) > 8) continue;
      std::vector<std::pair<int, int>> arcs;
      for (int b = 0; b < bits; ++b)
        if (mask & (1u << b)) arcs.push_back(pairs[static_cast<size_t>(b)]);
      WeightedDigraph g = unit_digraph(n, arcs);
      std::string lhs, rhs;
      bool pass = check_tree_oracle(g, lhs, rhs);
      push(report, "exhaustive n=" + std::to_string(n) + " mask=" + std::to_string(mask), lhs, rhs, pass,
           to_text(g));
    }
  }
  for (int idx = 0; idx < count; ++idx) {
    RandomDigraphOptions options;
    options.min_vertices = 2;
    options.max_vertices = 7;
    options.min_out_degree_one = idx % 2 == 0;
    options.max_extra_edges = 8;
    options.weights = WeightKind::kRational;
    WeightedDigraph g = random_digraph(rng, options);
    std::string lhs, rhs;
    bool pass = check_tree_oracle(g, lhs, rhs);
    // All-minors sign identity at a random off-diagonal position.
    if (g.vertex_count() >= 2) {
      int i = rng.uniform(0, g.vertex_count() - 1);
      int j = rng.uniform(0, g.vertex_count() - 2);
      if (j >= i) ++j;
      Rational minor = minor_det(laplacian(g), {i}, {j});
      Rational expected = ((i + j) % 2 == 0 ? Rational(1) : Rational(-1)) * tree_enumerator(g, i);
      if (minor != expected) pass = false;
    }
    push(report, "random " + describe(g), lhs, rhs, pass, to_text(g));
  }
}

// ---------------------------------------------------------------------------
// best: circuit counting through arborescences against trail backtracking.

void best_instance(VerificationReport& report, const WeightedDigraph& g, const std::string& name) {
  BigInt closed = count_eulerian_circuits(g);
  BigInt enumerated = enumerate_eulerian_circuits(g);
  bool pass = closed == enumerated;
  // Same counts again through the biclique reduction (index-independence is
  // checked inside the call).
  EulerianCounts reduced = eulerian_count_via_partition(star_partition(g), 0);
  if (reduced.circuit_count != closed) pass = false;
  if (Rational(reduced.arborescence_count) != tree_enumerator(g, 0)) pass = false;
  push(report, name + " " + describe(g), closed.str(), enumerated.str(), pass, to_text(g));
}

void suite_best(VerificationReport& report, Rng& rng, int count) {
  best_instance(report, c3(), "fixture-c3");
  best_instance(report, d2(), "fixture-d2");
  best_instance(report, m2(), "fixture-m2");
  best_instance(report, k3pm(), "fixture-k3pm");
  best_instance(report, line_digraph(k3pm()).line, "fixture-line-k3pm");
  for (int idx = 0; idx < count; ++idx)
    best_instance(report, random_eulerian(rng, 4, 12), "random");
}

// ---------------------------------------------------------------------------
// tree-reduction: both reduction directions, weighted and unit, every root/biclique.

void suite_tree_reduction(VerificationReport& report, Rng& rng, int count) {
  for (int idx = 0; idx < count; ++idx) {
    RandomDigraphOptions options;
    options.min_vertices = 2;
    options.max_vertices = 8;
    options.min_out_degree_one = true;
    options.max_extra_edges = 8;
    WeightedDigraph g = random_digraph(rng, options);
    std::vector<Rational> weights = random_vertex_weights(rng, g.vertex_count(), 1, 20);
    WeightedDigraph host = induced_weighting(g, weights);

    BicliquePartition stars_w = star_partition(host);
    BicliquePartition stars_u = star_partition(g);
    std::vector<Rational> direct_w = tree_enumerators(host);
    std::vector<Rational> direct_u = tree_enumerators(g);
    std::vector<Rational> omega_t = tree_enumerators(omega_digraph(stars_w, weights).digraph);
    std::vector<Rational> theta_t = tree_enumerators(theta_digraph(stars_u).digraph);

    bool pass = true;
    Rational checked_sum(0);
    Rational expected_sum(0);
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (g.in_degree(u) == 0) continue;
      Rational reduced = tree_enum_via_partition(stars_w, weights, u);
      if (reduced != direct_w[static_cast<size_t>(u)]) pass = false;
      Rational reduced_unit = tree_enum_via_partition(stars_u, std::nullopt, u);
      if (reduced_unit != direct_u[static_cast<size_t>(u)]) pass = false;
      checked_sum += reduced + reduced_unit;
      expected_sum += direct_w[static_cast<size_t>(u)] + direct_u[static_cast<size_t>(u)];
    }
    for (int i = 0; i < stars_w.size(); ++i) {
      Rational from_host = partition_tree_enum_from_host(stars_w, weights, i);
      if (from_host != omega_t[static_cast<size_t>(i)]) pass = false;
      Rational from_host_unit = partition_tree_enum_from_host(stars_u, std::nullopt, i);
      if (from_host_unit != theta_t[static_cast<size_t>(i)]) pass = false;
      checked_sum += from_host + from_host_unit;
      expected_sum += omega_t[static_cast<size_t>(i)] + theta_t[static_cast<size_t>(i)];
    }
    push(report, "random " + describe(g) + " r=" + std::to_string(stars_w.size()), checked_sum.str(),
         expected_sum.str(), pass, to_text(host) + weight_line(weights) + partition_text(stars_w));
  }
}

// ---------------------------------------------------------------------------
// line: closed forms on the line digraph plus the enumerator-sum identity.

void suite_line(VerificationReport& report, Rng& rng, int count) {
  for (int idx = 0; idx < count; ++idx) {
    if (idx % 10 == 9) {
      // Sink branch: one vertex of out-degree zero (in-degree >= 2) zeroes
      // both sides of the enumerator-sum identity.
      WeightedDigraph g = random_digraph_with_sink(rng, 3, 6);
      IdentityPair p = line_sum_identity_check(g);
      bool pass = p.holds() && p.lhs.is_zero() && p.rhs.is_zero();
      push(report, "sink " + describe(g), p.lhs.str(), p.rhs.str(), pass, to_text(g));
      continue;
    }
    WeightedDigraph g = random_strongly_connected(rng, 2, 6, 6);
    bool has_double_in = false;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.in_degree(v) >= 2) has_double_in = true;
    if (!has_double_in) {
      int t = rng.uniform(0, g.vertex_count() - 1);
      int h = rng.uniform(0, g.vertex_count() - 2);
      if (h >= t) ++h;
      g = with_extra_edge(g, t, h);
    }

    std::vector<Rational> kappa_line = tree_enumerators(line_digraph(g).line);
    int knuth_edge = rng.uniform(0, g.edge_count() - 1);
    int levine_edge = -1;
    for (int e = 0; e < g.edge_count(); ++e)
      if (g.in_degree(g.edge(e).head) >= 2) {
        levine_edge = e;
        break;
      }

    bool pass = true;
    Rational knuth = line_tree_knuth(g, knuth_edge);
    if (knuth != kappa_line[static_cast<size_t>(knuth_edge)]) pass = false;
    NaturalLinePartition nat = natural_line_partition(g);
    Rational via_partition = tree_enum_via_partition(nat.partition, std::nullopt, knuth_edge);
    if (via_partition != kappa_line[static_cast<size_t>(knuth_edge)]) pass = false;

    std::vector<Rational> weights = random_vertex_weights(rng, g.vertex_count(), 1, 9);
    WeightedDigraph gw = induced_weighting(g, weights);
    std::vector<Rational> t_line = tree_enumerators(line_digraph(gw).line);
    Rational levine = line_tree_levine(gw, weights, levine_edge);
    if (levine != t_line[static_cast<size_t>(levine_edge)]) pass = false;
    NaturalLinePartition natw = natural_line_partition(gw);
    std::vector<Rational> line_vertex_weights;
    line_vertex_weights.reserve(static_cast<size_t>(gw.edge_count()));
    for (const Edge& e : gw.edges()) line_vertex_weights.push_back(e.weight);
    Rational via_partition_w = tree_enum_via_partition(natw.partition, line_vertex_weights, levine_edge);
    if (via_partition_w != t_line[static_cast<size_t>(levine_edge)]) pass = false;

    IdentityPair unit_sum = line_sum_identity_check(g);
    IdentityPair weighted_sum = line_sum_identity_check(g, weights);
    if (!unit_sum.holds() || !weighted_sum.holds()) pass = false;

    push(report, "random " + describe(g) + " e=" + std::to_string(knuth_edge),
         knuth.str() + "|" + levine.str() + "|" + weighted_sum.lhs.str(),
         kappa_line[static_cast<size_t>(knuth_edge)].str() + "|" +
             t_line[static_cast<size_t>(levine_edge)].str() + "|" + weighted_sum.rhs.str(),
         pass, to_text(g) + weight_line(weights));
  }
}

// ---------------------------------------------------------------------------
// markov-reduction: stationary vector and Kemeny constant through the theta digraph.

void suite_markov_reduction(VerificationReport& report, Rng& rng, int count) {
  for (int idx = 0; idx < count; ++idx) {
    WeightedDigraph g = random_strongly_connected(rng, 2, 8, 8);
    BicliquePartition stars = star_partition(g);
    Vector pi_direct = stationary_distribution(g);
    Vector pi_reduced = stationary_via_partition(stars);
    bool pass = true;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (pi_direct(v) != pi_reduced(v)) pass = false;

    Rational k_direct = kemeny_constant(g);
    Rational k_reduced = kemeny_via_partition(stars);
    if (k_direct != k_reduced) pass = false;

    // Eigenvalue bookkeeping: the host walk spectrum is the reduced walk
    // spectrum padded with zeros.
    Polynomial cp_host = char_poly(transition_matrix(g));
    Polynomial cp_theta = char_poly(transition_matrix(theta_digraph(stars).digraph));
    if (!(cp_host == cp_theta.shifted_up(g.vertex_count() - stars.size()))) pass = false;

    push(report, "random " + describe(g) + " r=" + std::to_string(stars.size()),
         vector_list(pi_reduced) + " K=" + k_reduced.str(),
         vector_list(pi_direct) + " K=" + k_direct.str(), pass,
         to_text(g) + partition_text(stars));
  }
}

// ---------------------------------------------------------------------------
// blowup: closed forms for the k-fold blow-up.

void blowup_instance(VerificationReport& report, const WeightedDigraph& g, int k, const std::string& name) {
  BlowUpResult blown = blow_up(g, k);
  const int n = g.vertex_count();
  std::vector<Rational> kappa_base = tree_enumerators(g);
  Vector pi_base = stationary_distribution(g);
  Rational k_base = kemeny_constant(g);

  Rational degree_factor(1);
  for (int v = 0; v < n; ++v) degree_factor *= pow(Rational(g.out_degree(v)), k - 1);
  Rational scale = pow(Rational(k), n * k - 2) * degree_factor;

  bool pass = true;
  Vector pi_blown = stationary_distribution(blown.graph);
  std::ostringstream lhs, rhs;
  for (int u = 0; u < blown.graph.vertex_count(); ++u) {
    int cls = blown.class_of[static_cast<size_t>(u)];
    Rational direct = tree_enumerator(blown.graph, u);
    Rational closed = scale * kappa_base[static_cast<size_t>(cls)];
    if (direct != closed) pass = false;
    if (u == 0) {
      lhs << "kappa=" << direct;
      rhs << "kappa=" << closed;
    }
    if (pi_blown(u) != pi_base(cls) / Rational(k)) pass = false;
  }
  Rational k_direct = kemeny_constant(blown.graph);
  Rational k_closed = k_base + Rational(n * (k - 1));
  if (k_direct != k_closed) pass = false;
  lhs << " K=" << k_direct;
  rhs << " K=" << k_closed;

  BicliquePartition blown_partition = blow_up_partition(blown, star_partition(g));
  if (kemeny_via_partition(blown_partition) != k_direct) pass = false;
  Vector pi_via = stationary_via_partition(blown_partition);
  for (int u = 0; u < blown.graph.vertex_count(); ++u)
    if (pi_via(u) != pi_blown(u)) pass = false;

  push(report, name + " k=" + std::to_string(k) + " " + describe(blown.graph), lhs.str(), rhs.str(), pass,
       to_text(g));
}

void suite_blowup(VerificationReport& report, Rng& rng, int count) {
  for (int k : {2, 3}) {
    blowup_instance(report, c3(), k, "fixture-c3");
    blowup_instance(report, k3pm(), k, "fixture-k3pm");
  }
  {
    // Pinned values for the 2-blow-up of the 3-cycle.
    BlowUpResult blown = blow_up(c3(), 2);
    bool pass = tree_enumerator(blown.graph, 0) == Rational(16) &&
                kemeny_constant(blown.graph) == Rational(4);
    push(report, "pinned-c3-k2", "kappa=16 K=4",
         "kappa=" + tree_enumerator(blown.graph, 0).str() + " K=" + kemeny_constant(blown.graph).str(),
         pass, to_text(blown.graph));
  }
  for (int idx = 0; idx < count; ++idx)
    blowup_instance(report, random_strongly_connected(rng, 2, 4, 3), 2, "random");
}

// ---------------------------------------------------------------------------
// line-markov: stationary vector and Kemeny constant of (iterated) line
// digraphs without building them, checked against explicit construction.

void line_markov_instance(VerificationReport& report, const WeightedDigraph& g, int max_power,
                          const std::string& name) {
  LineDigraphResult line = line_digraph(g);
  Vector pi_line = stationary_distribution(line.line);
  Rational k_line = kemeny_constant(line.line);
  LineStationaryResult reduced = line_stationary(g);

  bool pass = true;
  for (int e = 0; e < g.edge_count(); ++e)
    if (reduced.edge_stationary[static_cast<size_t>(e)] != pi_line(line.vertex_of_edge[static_cast<size_t>(e)]))
      pass = false;
  if (reduced.kemeny != k_line) pass = false;

  std::ostringstream closed_values;
  for (int s = 0; s <= max_power; ++s) {
    Rational value = iterated_line_kemeny(g, s, 256);  // throws on internal mismatch
    closed_values << (s ? " " : "") << value;
  }
  push(report, name + " " + describe(g), "K(L)=" + reduced.kemeny.str() + " iter=[" + closed_values.str() + "]",
       "K(L)=" + k_line.str(), pass, to_text(g));
}

void suite_line_markov(VerificationReport& report, Rng& rng, int count) {
  line_markov_instance(report, c3(), 5, "fixture-c3");
  line_markov_instance(report, d2(), 2, "fixture-d2");
  line_markov_instance(report, k3pm(), 2, "fixture-k3pm");
  {
    Rational expect(13, 3);
    Rational got = line_stationary(k3pm()).kemeny;
    push(report, "pinned-line-k3pm", got.str(), expect.str(), got == expect, to_text(k3pm()));
  }
  for (int idx = 0; idx < count; ++idx)
    line_markov_instance(report, random_strongly_connected(rng, 2, 4, 2), 2, "random");
}

// ---------------------------------------------------------------------------
// schur: the two-block spanning-tree identity.

void suite_schur(VerificationReport& report, Rng& rng, int count) {
  {
    IdentityPair p = schur_partition_identity(k3pm(), {0, 1}, 0);
    bool pass = p.holds() && p.lhs == Rational(3, 2);
    push(report, "fixture-k3pm u=0", p.lhs.str(), p.rhs.str(), pass, to_text(k3pm()));
    IdentityPair q = schur_partition_identity(k3pm(), {0, 1}, 1);
    push(report, "fixture-k3pm u=1", q.lhs.str(), q.rhs.str(), q.holds(), to_text(k3pm()));
  }
  for (int idx = 0; idx < count; ++idx) {
    for (int attempt = 0;; ++attempt) {
      RandomDigraphOptions options;
      options.min_vertices = 3;
      options.max_vertices = 7;
      options.min_out_degree_one = true;
      options.max_extra_edges = 6;
      options.weights = WeightKind::kRational;
      WeightedDigraph g = random_digraph(rng, options);
      std::vector<int> part = random_proper_subset(rng, g.vertex_count());
      int u = part[static_cast<size_t>(rng.uniform(0, static_cast<int>(part.size()) - 1))];
      try {
        IdentityPair p = schur_partition_identity(g, part, u);
        std::ostringstream desc;
        desc << "random " << describe(g) << " |V1|=" << part.size() << " u=" << u;
        push(report, desc.str(), p.lhs.str(), p.rhs.str(), p.holds(), to_text(g));
        break;
      } catch (const Error& e) {
        if (e.kind() != "SingularBlock" || attempt > 256) throw;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// undirected: spanning tree counts through the bidirected double cover.

void undirected_instance(VerificationReport& report, const UndirectedGraph& h, const std::string& name,
                         const BigInt* expected) {
  WeightedDigraph doubled = bidirect(h);
  BigInt via_reduction = undirected_tree_count(h, star_partition(doubled));
  Rational direct = tree_enumerator(doubled, 0);
  bool pass = Rational(via_reduction) == direct;
  if (expected && via_reduction != *expected) pass = false;
  push(report, name + " n=" + std::to_string(h.vertex_count()), via_reduction.str(), direct.str(), pass,
       to_text(doubled));
}

void suite_undirected(VerificationReport& report, Rng& rng, int count) {
  auto unit_undirected = [](int n, std::vector<std::pair<int, int>> arcs) {
    std::vector<EdgeSpec> specs;
    for (auto [a, b] : arcs) specs.emplace_back(a, b, Rational(1));
    return UndirectedGraph(n, specs);
  };
  BigInt three(3), one(1), four(4);
  undirected_instance(report, unit_undirected(3, {{0, 1}, {1, 2}, {2, 0}}), "fixture-triangle", &three);
  undirected_instance(report, unit_undirected(2, {{0, 1}}), "fixture-edge", &one);
  undirected_instance(report, unit_undirected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), "fixture-square", &four);
  for (int idx = 0; idx < count; ++idx)
    undirected_instance(report, random_connected_graph(rng, 2, 6), "random", nullptr);
}

// ---------------------------------------------------------------------------
// kemeny: three independent routes to the constant.

void kemeny_instance(VerificationReport& report, const WeightedDigraph& g, const std::string& name,
                     const Rational* expected) {
  Rational via_poly = kemeny_constant(g);
  Rational via_trace = kemeny_from_fundamental_matrix(g);
  bool pass = via_poly == via_trace;
  Rational via_mfpt = kemeny_from_first_passage(g, 0);
  for (int start = 0; start < g.vertex_count(); ++start)
    if (kemeny_from_first_passage(g, start) != via_poly) pass = false;
  if (expected && via_poly != *expected) pass = false;
  push(report, name + " " + describe(g), via_poly.str(),
       via_mfpt.str() + "|" + via_trace.str() + (expected ? "|" + expected->str() : ""), pass, to_text(g));
}

void suite_kemeny(VerificationReport& report, Rng& rng, int count) {
  Rational one(1), four_thirds(4, 3), half(1, 2);
  kemeny_instance(report, c3(), "fixture-c3", &one);
  kemeny_instance(report, k3pm(), "fixture-k3pm", &four_thirds);
  kemeny_instance(report, d2(), "fixture-d2", &half);
  kemeny_instance(report, m2(), "fixture-m2", &half);
  Rational thirteen_thirds(13, 3);
  kemeny_instance(report, line_digraph(k3pm()).line, "fixture-line-k3pm", &thirteen_thirds);
  kemeny_instance(report, bidirect(UndirectedGraph(3, {{0, 1, Rational(1)}, {1, 2, Rational(1)}})),
                  "fixture-path3", nullptr);
  for (int idx = 0; idx < count; ++idx)
    kemeny_instance(report, random_strongly_connected(rng, 2, 7, 6, WeightKind::kRational), "random",
                    nullptr);
}

using SuiteFn = std::function<void(VerificationReport&, Rng&, int)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"matrix-tree", suite_matrix_tree}, {"best", suite_best},
      {"tree-reduction", suite_tree_reduction},             {"line", suite_line},
      {"markov-reduction", suite_markov_reduction},             {"blowup", suite_blowup},
      {"line-markov", suite_line_markov}, {"schur", suite_schur},
      {"undirected", suite_undirected},   {"kemeny", suite_kemeny},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& [suite_name, fn] : suite_table()) {
    if (suite_name != name) continue;
    VerificationReport report;
    report.suite = name;
    report.seed = options.seed;
    report.count = options.count;
    Rng rng(options.seed);
    fn(report, rng, options.count);
    return report;
  }
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  fail("UnknownSuite", "no suite named '" + name + "' (known: " + known + ")");
}

void render_text(const VerificationReport& report, std::ostream& out) {
  out << "suite " << report.suite << " seed " << report.seed << " count " << report.count << "\n";
  for (size_t i = 0; i < report.instances.size(); ++i) {
    const InstanceResult& inst = report.instances[i];
    out << (inst.pass ? "ok " : "FAIL ") << i << ' ' << inst.descriptor << " lhs=" << inst.lhs
        << " rhs=" << inst.rhs << "\n";
    if (!inst.pass && !inst.replay.empty()) {
      out << "---- replay ----\n" << inst.replay;
      if (inst.replay.back() != '\n') out << '\n';
      out << "----\n";
    }
  }
  out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << " ("
      << (report.instances.size() - static_cast<size_t>(report.failures())) << "/" << report.instances.size()
      << ")\n";
}

}  // namespace arbor
