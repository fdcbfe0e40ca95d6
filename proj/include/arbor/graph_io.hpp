#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/biclique.hpp"
#include "arbor/digraph.hpp"

namespace arbor {

// Text graph format, one digraph per file:
//   # comment
//   digraph <n>
//   <tail> <head> <weight>        weight as reduced p/q, bare p for integers
// Vertices are 0-based; '#' starts a comment anywhere on a line.
WeightedDigraph read_digraph(std::istream& in, std::string_view source_name = "<input>");
WeightedDigraph read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const WeightedDigraph& g);
std::string to_text(const WeightedDigraph& g);

// Partition format, one biclique per line:
//   Q <id>: [<tail> ...] -> [<head> ...]
// ids must be 0..r-1 (any order); repeated vertices are allowed and carry
// multiplicity.
std::vector<Biclique> read_partition(std::istream& in, std::string_view source_name = "<input>");
std::vector<Biclique> read_partition_file(const std::string& path);
void write_partition(std::ostream& out, const std::vector<Biclique>& bicliques);

}  // namespace arbor
