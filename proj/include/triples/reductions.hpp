#pragma once

#include <array>
#include <string>
#include <vector>

#include "triples/game.hpp"

namespace triples {

// All-positive exact-3-satisfiability: every variable occurs in exactly
// three clauses, which forces #clauses == #variables. Variables 0-indexed.
struct X3SatFormula {
    int num_vars;
    std::vector<std::array<int, 3>> clauses;

    X3SatFormula(int num_vars, std::vector<std::array<int, 3>> clauses);
};

// Exactly one true variable per clause.
bool is_exact_model(const X3SatFormula& formula, const std::vector<bool>& model);

// Ordinal (1..3) of a variable's occurrence within its occurrence list,
// ordered by ascending clause index.
struct OccurrenceIndex {
    std::vector<std::array<int, 3>> clauses_of_var;

    explicit OccurrenceIndex(const X3SatFormula& formula);
    int ordinal(int var, int clause) const;
};

// Simple directed graph on 3q vertices, 0-indexed.
struct Digraph {
    int num_vertices;
    std::vector<std::pair<int, int>> arcs;

    Digraph(int num_vertices, std::vector<std::pair<int, int>> arcs);
    bool has_arc(int from, int to) const;
};

// Simple undirected graph on 3q vertices, 0-indexed.
struct UndirectedGraph {
    int num_vertices;
    std::vector<std::pair<int, int>> edges;

    UndirectedGraph(int num_vertices, std::vector<std::pair<int, int>> edges);
    bool has_edge(int a, int b) const;
};

// A game plus one gadget name per agent, e.g. "w2.1", "d1.4", "g7", "h3".
struct NamedInstance {
    Ashg game;
    std::vector<std::string> names;
};

// --- exact cover by 3-sets -> envy-free, binary symmetric, max degree 3 ---
// 11m agents: per variable a triangle of 3, per clause a block of 8.
// Requires 3 | m, which every exactly satisfiable formula obeys; others are
// rejected as trivial no-instances the gadget game cannot represent.
NamedInstance reduce_x3sat_to_ef(const X3SatFormula& formula);

PartitionIntoTriples ef_partition_from_exact_model(const X3SatFormula& formula,
                                                   const std::vector<bool>& model);

// Requires an envy-free partition of the reduced game; a variable is true
// iff its triangle is spread over three triples.
std::vector<bool> exact_model_from_ef_partition(const X3SatFormula& formula,
                                                const Ashg& game,
                                                const PartitionIntoTriples& pi);

// --- exact cover by 3-sets -> weakly-justified-envy-free ------------------
struct WjefReduction {
    NamedInstance instance;
    X3SatFormula formula;  // the reduced-from formula, replicated if needed
    bool replicated;
};

// Requires #clauses = 4l with 3 | l, i.e. divisible by 12: 40l agents only
// split into triples when 3 | l. Other formulas are first replicated with
// fresh variables by the smallest sufficient factor (3, 4, or 12), which
// preserves exact satisfiability; strict rejects them instead.
WjefReduction reduce_x3sat_to_wjef(const X3SatFormula& formula, bool strict = false);

// Polarity flips relative to the envy-free reduction: true variables keep
// their triangle whole.
PartitionIntoTriples wjef_partition_from_exact_model(const X3SatFormula& formula,
                                                     const std::vector<bool>& model);

std::vector<bool> model_from_wjef_partition(const X3SatFormula& formula,
                                            const Ashg& game,
                                            const PartitionIntoTriples& pi);

// --- partition into directed triangle cycles -> jEF, ternary --------------
// 9+3q agents; requires an antisymmetric digraph (no two-cycles).
NamedInstance reduce_dtc_to_jef_ternary(const Digraph& graph);

// The 6-agent hand-crafted ternary game with no jEF partition.
NamedInstance dtc_no_instance();

// --- partition into triangles -> jEF, symmetric, values 0..6 --------------
// 15+3q agents.
NamedInstance reduce_pit_to_jef_symmetric(const UndirectedGraph& graph);

// The 12-agent hand-crafted symmetric game with no jEF partition.
NamedInstance pit_no_instance();

// Lemma partitions from vertex-disjoint triangle covers; the cover is
// validated against the graph and the game's agent count.
PartitionIntoTriples jef_partition_from_triangle_cover(
    const Digraph& graph, const std::vector<std::array<int, 3>>& cover, const Ashg& game);
PartitionIntoTriples jef_partition_from_triangle_cover(
    const UndirectedGraph& graph, const std::vector<std::array<int, 3>>& cover,
    const Ashg& game);

// Requires a jEF partition of the reduced game: reads off the q all-vertex
// triples and validates each as a directed 3-cycle / triangle.
std::vector<std::array<int, 3>> triangle_cover_from_jef_partition(
    const Digraph& graph, const Ashg& game, const PartitionIntoTriples& pi);
std::vector<std::array<int, 3>> triangle_cover_from_jef_partition(
    const UndirectedGraph& graph, const Ashg& game, const PartitionIntoTriples& pi);

}  // namespace triples
