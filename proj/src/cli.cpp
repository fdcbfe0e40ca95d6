#include "arbor/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "arbor/arborescence.hpp"
#include "arbor/biclique.hpp"
#include "arbor/error.hpp"
#include "arbor/graph_io.hpp"
#include "arbor/markov.hpp"
#include "arbor/verify.hpp"

namespace arbor::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

WeightedDigraph load_graph(const std::string& path) {
  if (path == "-") return read_digraph(std::cin, "<stdin>");
  return read_digraph_file(path);
}

json graph_json(const WeightedDigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"tail", e.tail}, {"head", e.head}, {"weight", e.weight.str()}});
  return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string maybe_decimal(const Rational& value, int decimals) {
  return decimals > 0 ? " " + value.decimal(decimals) : std::string();
}

// Partition sources: "star", "line-natural", or "file:<path>".
struct ResolvedPartition {
  WeightedDigraph host;          // the digraph the partition covers
  BicliquePartition partition;
  std::string kind;
};

ResolvedPartition resolve_partition(const WeightedDigraph& g, const std::string& source) {
  if (source == "star") {
    BicliquePartition p = star_partition(g);
    return ResolvedPartition{g, std::move(p), "star"};
  }
  if (source == "line-natural") {
    NaturalLinePartition nat = natural_line_partition(g);
    return ResolvedPartition{nat.line.line, std::move(nat.partition), "line-natural"};
  }
  if (source.rfind("file:", 0) == 0) {
    std::string path = source.substr(5);
    BicliquePartition p = validate_partition(g, read_partition_file(path));
    return ResolvedPartition{g, std::move(p), "file"};
  }
  fail("UnknownPartition", "partition source must be star, line-natural, or file:<path>");
}

std::vector<Rational> parse_weight_list(const std::string& text) {
  std::vector<Rational> weights;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    auto w = Rational::parse(token);
    if (!w) fail("ParseError", "bad weight '" + token + "' in --weights");
    weights.push_back(*w);
  }
  if (weights.empty()) fail("ParseError", "--weights list is empty");
  return weights;
}

int run_parsed(const CLI::App& app, const Options& options, std::ostream& out) {
  if (const CLI::App* sub = app.get_subcommand_no_throw("trees"); sub && sub->parsed()) {
    WeightedDigraph g = load_graph(sub->get_option("file")->as<std::string>());
    bool all_roots = sub->get_option("--all-roots")->as<bool>();
    if (all_roots == (sub->get_option("--root")->count() > 0))
      fail("Usage", "trees needs exactly one of --root <v> or --all-roots");
    json values = json::array();
    if (all_roots) {
      std::vector<Rational> t = tree_enumerators(g);
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (options.json())
          values.push_back({{"root", v}, {"value", t[static_cast<size_t>(v)].str()}});
        else
          out << v << ' ' << t[static_cast<size_t>(v)] << "\n";
      }
    } else {
      int root = sub->get_option("--root")->as<int>();
      Rational t = tree_enumerator(g, root);
      if (options.json())
        values.push_back({{"root", root}, {"value", t.str()}});
      else
        out << root << ' ' << t << "\n";
    }
    if (options.json()) emit(out, json{{"command", "trees"}, {"values", std::move(values)}});
    return 0;
  }

  if (const CLI::App* sub = app.get_subcommand_no_throw("eulerian"); sub && sub->parsed()) {
    WeightedDigraph g = load_graph(sub->get_option("file")->as<std::string>());
    BigInt circuits = count_eulerian_circuits(g);
    if (options.json())
      emit(out, json{{"command", "eulerian"}, {"circuits", circuits.str()}});
    else
      out << circuits.str() << "\n";
    return 0;
  }

  if (const CLI::App* sub = app.get_subcommand_no_throw("stationary"); sub && sub->parsed()) {
    WeightedDigraph g = load_graph(sub->get_option("file")->as<std::string>());
    int decimals = sub->get_option("--decimals")->as<int>();
    Vector pi = stationary_distribution(g);
    if (options.json()) {
      json values = json::array();
      for (int v = 0; v < g.vertex_count(); ++v)
        values.push_back({{"vertex", v}, {"value", pi(v).str()}});
      emit(out, json{{"command", "stationary"}, {"pi", std::move(values)}});
    } else {
      for (int v = 0; v < g.vertex_count(); ++v)
        out << v << ' ' << pi(v) << maybe_decimal(pi(v), decimals) << "\n";
    }
    return 0;
  }

  if (const CLI::App* sub = app.get_subcommand_no_throw("kemeny"); sub && sub->parsed()) {
    WeightedDigraph g = load_graph(sub->get_option("file")->as<std::string>());
    int decimals = sub->get_option("--decimals")->as<int>();
    Rational k = kemeny_constant(g);
    if (options.json())
      emit(out, json{{"command", "kemeny"}, {"value", k.str()}});
    else
      out << k << maybe_decimal(k, decimals) << "\n";
    return 0;
  }

  if (const CLI::App* sub = app.get_subcommand_no_throw("mfpt"); sub && sub->parsed()) {
    WeightedDigraph g = load_graph(sub->get_option("file")->as<std::string>());
    int decimals = sub->get_option("--decimals")->as<int>();
    Matrix m = mean_first_passage(g);
    if (options.json()) {
      json rows = json::array();
      for (int i = 0; i < g.vertex_count(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.vertex_count(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
      }
      emit(out, json{{"command", "mfpt"}, {"matrix", std::move(rows)}});
    } else {
      for (int i = 0; i < g.vertex_count(); ++i) {
        for (int j = 0; j < g.vertex_count(); ++j)
          out << (j ? " " : "") << m(i, j) << maybe_decimal(m(i, j), decimals);
        out << "\n";
      }
    }
    return 0;
  }

  if (const CLI::App* sub = app.get_subcommand_no_throw("line"); sub && sub->parsed()) {
    WeightedDigraph g = load_graph(sub->get_option("file")->as<std::string>());
    int power = sub->get_option("--power")->as<int>();
    if (power < 0) fail("ParseError", "--power must be non-negative");
    WeightedDigraph current = g;
    for (int s = 0; s < power; ++s) current = line_digraph(current).line;
    if (options.json())
      emit(out, json{{"command", "line"}, {"power", power}, {"graph", graph_json(current)}});
    else
      write_digraph(out, current);
    return 0;
  }

  if (const CLI::App* sub = app.get_subcommand_no_throw("blowup"); sub && sub->parsed()) {
    WeightedDigraph g = load_graph(sub->get_option("file")->as<std::string>());
    int k = sub->get_option("-k")->as<int>();
    BlowUpResult blown = blow_up(g, k);
    if (options.json()) {
      json classes = json::array();
      for (int cls = 0; cls < g.vertex_count(); ++cls) {
        json members = json::array();
        for (int c = 0; c < k; ++c) members.push_back(cls * k + c);
        classes.push_back(std::move(members));
      }
      emit(out, json{{"command", "blowup"},
                     {"k", k},
                     {"classes", std::move(classes)},
                     {"graph", graph_json(blown.graph)}});
    } else {
      for (int cls = 0; cls < g.vertex_count(); ++cls) {
        out << "# class " << cls << ":";
        for (int c = 0; c < k; ++c) out << ' ' << cls * k + c;
        out << "\n";
      }
      write_digraph(out, blown.graph);
    }
    return 0;
  }

  if (const CLI::App* sub = app.get_subcommand_no_throw("reduce"); sub && sub->parsed()) {
    WeightedDigraph g = load_graph(sub->get_option("file")->as<std::string>());
    ResolvedPartition resolved = resolve_partition(g, sub->get_option("--partition")->as<std::string>());
    std::string weight_list = sub->get_option("--weights")->as<std::string>();
    std::optional<std::vector<Rational>> weights;
    if (!weight_list.empty()) weights = parse_weight_list(weight_list);

    ReducedDigraph reduced = weights ? omega_digraph(resolved.partition, *weights)
                                     : theta_digraph(resolved.partition);
    bool all_roots = sub->get_option("--all-roots")->as<bool>();
    bool single_root = sub->get_option("--root")->count() > 0;
    std::vector<std::pair<int, Rational>> trees;
    if (all_roots) {
      for (int v = 0; v < resolved.host.vertex_count(); ++v)
        if (resolved.host.in_degree(v) > 0)
          trees.emplace_back(v, tree_enum_via_partition(resolved.partition, weights, v));
    } else if (single_root) {
      int root = sub->get_option("--root")->as<int>();
      trees.emplace_back(root, tree_enum_via_partition(resolved.partition, weights, root));
    }

    if (options.json()) {
      json bicliques = json::array();
      for (const Biclique& b : resolved.partition.bicliques())
        bicliques.push_back({{"tails", b.tails()}, {"heads", b.heads()}});
      json tree_values = json::array();
      for (const auto& [root, value] : trees)
        tree_values.push_back({{"root", root}, {"value", value.str()}});
      emit(out, json{{"command", "reduce"},
                     {"partition", resolved.kind},
                     {"kind", reduced.kind == ReductionKind::kOmega ? "omega" : "theta"},
                     {"bicliques", std::move(bicliques)},
                     {"graph", graph_json(reduced.digraph)},
                     {"trees", std::move(tree_values)}});
    } else {
      out << "# reduction " << (reduced.kind == ReductionKind::kOmega ? "omega" : "theta") << " ("
          << resolved.kind << " partition, r=" << resolved.partition.size() << ")\n";
      std::ostringstream partition_lines;
      write_partition(partition_lines, resolved.partition.bicliques());
      std::istringstream each(partition_lines.str());
      std::string line;
      while (std::getline(each, line)) out << "# " << line << "\n";
      write_digraph(out, reduced.digraph);
      for (const auto& [root, value] : trees) out << "t " << root << ' ' << value << "\n";
    }
    return 0;
  }

  if (const CLI::App* sub = app.get_subcommand_no_throw("reduce-markov"); sub && sub->parsed()) {
    WeightedDigraph g = load_graph(sub->get_option("file")->as<std::string>());
    ResolvedPartition resolved = resolve_partition(g, sub->get_option("--partition")->as<std::string>());
    Vector pi = stationary_via_partition(resolved.partition);
    Rational k = kemeny_via_partition(resolved.partition);
    if (options.json()) {
      json values = json::array();
      for (int v = 0; v < resolved.host.vertex_count(); ++v)
        values.push_back({{"vertex", v}, {"value", pi(v).str()}});
      emit(out, json{{"command", "reduce-markov"},
                     {"partition", resolved.kind},
                     {"pi", std::move(values)},
                     {"kemeny", k.str()}});
    } else {
      for (int v = 0; v < resolved.host.vertex_count(); ++v) out << "pi " << v << ' ' << pi(v) << "\n";
      out << "kemeny " << k << "\n";
    }
    return 0;
  }

  if (const CLI::App* sub = app.get_subcommand_no_throw("verify"); sub && sub->parsed()) {
    VerifyOptions vopts;
    vopts.seed = sub->get_option("--seed")->as<std::uint64_t>();
    vopts.count = sub->get_option("--count")->as<int>();
    VerificationReport report = run_suite(sub->get_option("--suite")->as<std::string>(), vopts);
    if (options.json()) {
      json instances = json::array();
      for (size_t i = 0; i < report.instances.size(); ++i) {
        const InstanceResult& inst = report.instances[i];
        instances.push_back({{"index", i},
                             {"descriptor", inst.descriptor},
                             {"lhs", inst.lhs},
                             {"rhs", inst.rhs},
                             {"pass", inst.pass},
                             {"replay", inst.replay}});
      }
      emit(out, json{{"command", "verify"},
                     {"suite", report.suite},
                     {"seed", report.seed},
                     {"count", report.count},
                     {"pass", report.all_pass()},
                     {"instances", std::move(instances)}});
    } else {
      render_text(report, out);
    }
    return report.all_pass() ? 0 : 1;
  }

  fail("Usage", "no subcommand given; try --help");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic toolkit for oriented spanning trees, Eulerian circuits,\n"
               "random-walk analytics and biclique-partition reductions of weighted digraphs."};
  app.name("arbor");
  Options options;
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.require_subcommand(0, 1);

  auto add_graph_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();  // lets --format appear after the subcommand
    sub->add_option("file", "Graph file ('-' for stdin)")->required();
    return sub;
  };

  CLI::App* trees = add_graph_command("trees", "Oriented-spanning-tree enumerators");
  trees->add_option("--root", "Root vertex");
  trees->add_flag("--all-roots", "Every root");

  add_graph_command("eulerian", "Eulerian circuit count");

  CLI::App* stationary = add_graph_command("stationary", "Stationary distribution of the random walk");
  stationary->add_option("--decimals", "Append decimal rendering with this precision")->default_val(0);

  CLI::App* kemeny = add_graph_command("kemeny", "Kemeny's constant of the random walk");
  kemeny->add_option("--decimals", "Append decimal rendering with this precision")->default_val(0);

  CLI::App* mfpt = add_graph_command("mfpt", "Mean first passage time matrix");
  mfpt->add_option("--decimals", "Append decimal rendering with this precision")->default_val(0);

  CLI::App* line = add_graph_command("line", "Iterated line digraph, emitted in graph format");
  line->add_option("--power", "How many times to apply the line construction")->default_val(1);

  CLI::App* blowup = add_graph_command("blowup", "k-blow-up, emitted in graph format");
  blowup->add_option("-k", "Blow-up factor")->required();

  CLI::App* reduce = add_graph_command("reduce", "Biclique reduction (theta, or omega with --weights)");
  reduce->add_option("--partition", "star | line-natural | file:<path>")->required();
  reduce->add_option("--weights", "Comma-separated vertex weights (omega reduction)");
  reduce->add_option("--root", "Recover the host tree enumerator at this root");
  reduce->add_flag("--all-roots", "Recover host tree enumerators at every covered root");

  CLI::App* reduce_markov = add_graph_command("reduce-markov", "Stationary vector and Kemeny via theta");
  reduce_markov->add_option("--partition", "star | line-natural | file:<path>")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a named exact-identity suite");
  verify->fallthrough();
  verify->add_option("--suite", "Suite name")->required();
  verify->add_option("--seed", "Random seed")->default_val(std::uint64_t{1});
  verify->add_option("--count", "Random instances")->default_val(25);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return run_parsed(app, options, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace arbor::cli
