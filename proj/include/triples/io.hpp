#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "triples/game.hpp"
#include "triples/reductions.hpp"

namespace triples {

// Plain-text formats, UTF-8 with LF endings, 1-indexed agents/vertices.
// Full-line comments start with '#'; blank lines are ignored. Parsing a
// serialized value reproduces it byte for byte.
//
//   instance:   "ashg <num_agents>" then "v <i> <j> <value>" per nonzero
//   partition:  one "a b c" line per triple
//   formula:    "x3sat <m>" then m lines "c <a> <b> <c>"
//   graph:      "graph <v> directed|undirected" then "e <a> <b>" per arc/edge

Ashg parse_instance(std::istream& in);
Ashg parse_instance_text(const std::string& text);
std::string serialize_instance(const Ashg& game);

PartitionIntoTriples parse_partition(std::istream& in);
PartitionIntoTriples parse_partition_text(const std::string& text);
std::string serialize_partition(const PartitionIntoTriples& pi);

X3SatFormula parse_formula(std::istream& in);
X3SatFormula parse_formula_text(const std::string& text);
std::string serialize_formula(const X3SatFormula& formula);

using AnyGraph = std::variant<Digraph, UndirectedGraph>;

AnyGraph parse_graph(std::istream& in);
AnyGraph parse_graph_text(const std::string& text);
std::string serialize_graph(const Digraph& graph);
std::string serialize_graph(const UndirectedGraph& graph);

// "<agent-id> <gadget-name>" per line.
std::string serialize_name_map(const std::vector<std::string>& names);

}  // namespace triples
