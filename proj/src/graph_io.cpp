#include "arbor/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "arbor/error.hpp"

namespace arbor {

namespace {

[[noreturn]] void parse_fail(std::string_view source, int line, const std::string& message) {
  fail("ParseError", std::string(source) + ":" + std::to_string(line) + ": " + message);
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::optional<int> parse_int(const std::string& token) {
  if (token.empty()) return std::nullopt;
  size_t pos = 0;
  try {
    int value = std::stoi(token, &pos);
    if (pos != token.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

WeightedDigraph read_digraph(std::istream& in, std::string_view source_name) {
  std::string line;
  int line_number = 0;
  int n = -1;
  std::vector<EdgeSpec> edges;
  while (std::getline(in, line)) {
    ++line_number;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream tokens(body);
    if (n < 0) {
      std::string keyword;
      tokens >> keyword;
      if (keyword != "digraph") parse_fail(source_name, line_number, "expected 'digraph <n>' header");
      std::string count;
      tokens >> count;
      auto parsed = parse_int(count);
      if (!parsed || *parsed < 0) parse_fail(source_name, line_number, "bad vertex count '" + count + "'");
      std::string rest;
      if (tokens >> rest) parse_fail(source_name, line_number, "trailing tokens after header");
      n = *parsed;
      continue;
    }
    std::string tail_tok, head_tok, weight_tok, extra;
    tokens >> tail_tok >> head_tok >> weight_tok;
    if (weight_tok.empty()) parse_fail(source_name, line_number, "expected '<tail> <head> <weight>'");
    if (tokens >> extra) parse_fail(source_name, line_number, "trailing tokens after edge");
    auto tail = parse_int(tail_tok);
    auto head = parse_int(head_tok);
    if (!tail || !head) parse_fail(source_name, line_number, "bad vertex id");
    auto weight = Rational::parse(weight_tok);
    if (!weight) parse_fail(source_name, line_number, "bad weight '" + weight_tok + "'");
    edges.emplace_back(*tail, *head, *weight);
  }
  if (n < 0) parse_fail(source_name, line_number ? line_number : 1, "missing 'digraph <n>' header");
  try {
    return WeightedDigraph(n, edges);
  } catch (const Error& e) {
    fail("ParseError", std::string(source_name) + ": " + e.what());
  }
}

WeightedDigraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", path + ": cannot open file");
  return read_digraph(in, path);
}

void write_digraph(std::ostream& out, const WeightedDigraph& g) {
  out << "digraph " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << ' ' << e.weight.str() << "\n";
}

std::string to_text(const WeightedDigraph& g) {
  std::ostringstream os;
  write_digraph(os, g);
  return os.str();
}

namespace {

std::vector<int> parse_bracket_list(const std::string& text, std::string_view source, int line) {
  std::vector<int> out;
  std::istringstream tokens(text);
  std::string tok;
  while (tokens >> tok) {
    auto v = parse_int(tok);
    if (!v) parse_fail(source, line, "bad vertex id '" + tok + "'");
    out.push_back(*v);
  }
  return out;
}

}  // namespace

std::vector<Biclique> read_partition(std::istream& in, std::string_view source_name) {
  std::string line;
  int line_number = 0;
  std::vector<std::pair<int, Biclique>> entries;
  while (std::getline(in, line)) {
    ++line_number;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    // Shape: Q <id>: [t ...] -> [h ...]
    std::istringstream tokens(body);
    std::string keyword;
    tokens >> keyword;
    if (keyword != "Q") parse_fail(source_name, line_number, "expected 'Q <id>: [tails] -> [heads]'");
    std::string id_tok;
    tokens >> id_tok;
    if (!id_tok.empty() && id_tok.back() == ':') id_tok.pop_back();
    auto id = parse_int(id_tok);
    if (!id || *id < 0) parse_fail(source_name, line_number, "bad biclique id");

    std::string rest;
    std::getline(tokens, rest);
    auto colon = rest.find(':');
    if (colon != std::string::npos) rest = rest.substr(colon + 1);
    auto arrow = rest.find("->");
    auto open1 = rest.find('[');
    auto close1 = rest.find(']');
    if (arrow == std::string::npos || open1 == std::string::npos || close1 == std::string::npos ||
        close1 > arrow)
      parse_fail(source_name, line_number, "expected '[tails] -> [heads]'");
    auto open2 = rest.find('[', arrow);
    auto close2 = rest.find(']', arrow);
    if (open2 == std::string::npos || close2 == std::string::npos)
      parse_fail(source_name, line_number, "expected '[tails] -> [heads]'");
    std::vector<int> tails = parse_bracket_list(rest.substr(open1 + 1, close1 - open1 - 1), source_name, line_number);
    std::vector<int> heads = parse_bracket_list(rest.substr(open2 + 1, close2 - open2 - 1), source_name, line_number);
    if (tails.empty() || heads.empty()) parse_fail(source_name, line_number, "biclique part is empty");
    entries.emplace_back(*id, Biclique(std::move(tails), std::move(heads)));
  }
  std::vector<Biclique> out(entries.size());
  std::vector<bool> seen(entries.size(), false);
  for (auto& [id, biclique] : entries) {
    if (id >= static_cast<int>(entries.size()) || seen[static_cast<size_t>(id)])
      fail("ParseError", std::string(source_name) + ": biclique ids must be 0.." +
                             std::to_string(entries.size() - 1) + " without repeats");
    seen[static_cast<size_t>(id)] = true;
    out[static_cast<size_t>(id)] = std::move(biclique);
  }
  if (entries.empty()) fail("ParseError", std::string(source_name) + ": empty partition file");
  return out;
}

std::vector<Biclique> read_partition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", path + ": cannot open file");
  return read_partition(in, path);
}

void write_partition(std::ostream& out, const std::vector<Biclique>& bicliques) {
  for (size_t i = 0; i < bicliques.size(); ++i) {
    out << "Q " << i << ": [";
    const auto& tails = bicliques[i].tails();
    for (size_t k = 0; k < tails.size(); ++k) out << (k ? " " : "") << tails[k];
    out << "] -> [";
    const auto& heads = bicliques[i].heads();
    for (size_t k = 0; k < heads.size(); ++k) out << (k ? " " : "") << heads[k];
    out << "]\n";
  }
}

}  // namespace arbor
