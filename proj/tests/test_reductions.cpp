#include "doctest.h"
#include "helpers.hpp"
#include "triples/oracle.hpp"
#include "triples/reductions.hpp"
#include "triples/structure.hpp"

#include <set>
#include <vector>

using namespace triples;
using namespace triples::testing;

namespace {

// Three copies of the same clause; exactly the models with one true variable.
X3SatFormula identical_clauses() {
    return X3SatFormula(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
}

// All 3-subsets of four variables; every variable occurs three times, yet no
// assignment hits every clause exactly once.
X3SatFormula subsets_of_four() {
    return X3SatFormula(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

std::vector<bool> bits(unsigned mask, int width) {
    std::vector<bool> out(width);
    for (int i = 0; i < width; ++i) out[i] = (mask >> i) & 1u;
    return out;
}

}  // namespace

TEST_CASE("formula construction enforces the three-occurrence shape") {
    CHECK_NOTHROW(identical_clauses());
    CHECK_NOTHROW(subsets_of_four());

    CHECK_THROWS_AS(X3SatFormula(0, {}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(X3SatFormula(3, {{0, 1, 2}, {0, 1, 2}}),
                         "three occurrences per variable force #clauses == #variables; "
                         "got 2 clauses for 3 variables",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(X3SatFormula(3, {{0, 1, 2}, {0, 2, 2}, {0, 1, 1}}),
                         "clause 2 repeats variable 3", std::invalid_argument);
    CHECK_THROWS_WITH_AS(X3SatFormula(3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 2}}),
                         "clause 2 uses unknown variable 4", std::invalid_argument);
    CHECK_THROWS_WITH_AS(X3SatFormula(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 1}}),
                         "clause 3 repeats variable 2", std::invalid_argument);
}

TEST_CASE("is_exact_model demands exactly one true variable per clause") {
    const auto formula = identical_clauses();
    int models = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
        if (is_exact_model(formula, bits(mask, 3))) ++models;
    }
    CHECK(models == 3);
    CHECK(is_exact_model(formula, {true, false, false}));
    CHECK(is_exact_model(formula, {false, true, false}));
    CHECK_FALSE(is_exact_model(formula, {true, true, false}));
    CHECK_FALSE(is_exact_model(formula, {false, false, false}));
    CHECK_FALSE(is_exact_model(formula, {true, false}));

    const auto blocked = subsets_of_four();
    for (unsigned mask = 0; mask < 16; ++mask) {
        CHECK_FALSE(is_exact_model(blocked, bits(mask, 4)));
    }
}

TEST_CASE("occurrence ordinals follow ascending clause order") {
    const OccurrenceIndex identical(identical_clauses());
    CHECK(identical.ordinal(0, 0) == 1);
    CHECK(identical.ordinal(0, 1) == 2);
    CHECK(identical.ordinal(2, 2) == 3);

    const OccurrenceIndex subsets(subsets_of_four());
    CHECK(subsets.ordinal(0, 0) == 1);
    CHECK(subsets.ordinal(0, 2) == 3);
    CHECK(subsets.ordinal(3, 1) == 1);
    CHECK(subsets.ordinal(3, 3) == 3);
    CHECK_THROWS_WITH_AS(subsets.ordinal(3, 0),
                         "variable 4 does not occur in clause 1", std::invalid_argument);
}

TEST_CASE("graph wrappers validate their vertex lists") {
    CHECK_THROWS_AS(Digraph(4, {}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Digraph(3, {{0, 1}, {0, 1}}), "arc (1,2) listed twice",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Digraph(3, {{0, 0}}), "arc (1,1) is a self-loop",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Digraph(3, {{0, 3}}), "arc (1,4) leaves the vertex range",
                         std::invalid_argument);
    CHECK(Digraph(3, {{0, 1}}).has_arc(0, 1));
    CHECK_FALSE(Digraph(3, {{0, 1}}).has_arc(1, 0));

    CHECK_THROWS_WITH_AS(UndirectedGraph(3, {{0, 1}, {1, 0}}), "edge (1,2) listed twice",
                         std::invalid_argument);
    CHECK(UndirectedGraph(3, {{2, 0}}).has_edge(0, 2));
}

TEST_CASE("exact-cover to envy-free reduction builds the documented gadget") {
    const auto formula = identical_clauses();
    const auto inst = reduce_x3sat_to_ef(formula);
    REQUIRE(inst.game.num_agents() == 33);
    CHECK(inst.game.is_binary());
    CHECK(inst.game.is_symmetric());

    CHECK(inst.names[0] == "w1.1");
    CHECK(inst.names[5] == "w2.3");
    CHECK(inst.names[9] == "d1.1");
    CHECK(inst.names[17] == "d2.1");
    CHECK(inst.names[32] == "d3.8");

    const auto graph = underlying_graph(inst.game);
    CHECK(graph.max_degree() == 3);
    // Variable copies: triangle plus one clause link each.
    for (int w = 0; w < 9; ++w) CHECK(graph.degree(w) == 3);
    // Clause parts 1..3 carry one internal edge plus the variable link.
    for (int r = 0; r < 3; ++r) {
        for (int p = 0; p < 3; ++p) CHECK(graph.degree(9 + 8 * r + p) == 2);
        for (int p = 3; p < 8; ++p) CHECK(graph.degree(9 + 8 * r + p) == 3);
    }

    // Four clauses can never host exactly one true occurrence each: every
    // true variable satisfies three clauses, so 3 must divide m.
    CHECK_THROWS_WITH_AS(reduce_x3sat_to_ef(subsets_of_four()),
                         "clause count 4 is not divisible by 3, so the formula has no "
                         "exact model and the gadget game has no partition into triples",
                         std::invalid_argument);
}

TEST_CASE("exact models and envy-free partitions translate both ways") {
    const auto formula = identical_clauses();
    const auto inst = reduce_x3sat_to_ef(formula);

    const std::vector<std::vector<bool>> models = {
        {true, false, false}, {false, true, false}, {false, false, true}};
    for (const auto& model : models) {
        const auto pi = ef_partition_from_exact_model(formula, model);
        CHECK(find_violations(inst.game, pi, Concept::ef).empty());
        for (int v = 0; v < 3; ++v) {
            const std::array<int, 3> triangle{3 * v, 3 * v + 1, 3 * v + 2};
            CHECK(sigma(pi, triangle) == (model[v] ? 3 : 1));
        }
        CHECK(exact_model_from_ef_partition(formula, inst.game, pi) == model);
    }

    CHECK_THROWS_WITH_AS(ef_partition_from_exact_model(formula, {true, true, false}),
                         "assignment is not an exact model: some clause does not have "
                         "exactly one true variable",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        exact_model_from_ef_partition(formula, inst.game,
                                      PartitionIntoTriples::ascending(33)),
        "partition is not envy-free", std::invalid_argument);
    const auto valid = ef_partition_from_exact_model(formula, models[0]);
    CHECK_THROWS_WITH_AS(exact_model_from_ef_partition(subsets_of_four(), inst.game, valid),
                         "agent count does not match the reduction layout",
                         std::invalid_argument);
}

TEST_CASE("weak-justified reduction keeps clause counts divisible by twelve") {
    // Four triangle groups, each clause repeated three times: 12 vars, 12 clauses.
    std::vector<std::array<int, 3>> clauses;
    for (int group = 0; group < 4; ++group) {
        for (int rep = 0; rep < 3; ++rep) {
            clauses.push_back({3 * group, 3 * group + 1, 3 * group + 2});
        }
    }
    const auto reduction = reduce_x3sat_to_wjef(X3SatFormula(12, clauses));
    CHECK_FALSE(reduction.replicated);
    CHECK(reduction.formula.num_vars == 12);
    REQUIRE(reduction.instance.game.num_agents() == 120);
    CHECK(reduction.instance.game.is_binary());
    CHECK(reduction.instance.game.is_symmetric());

    CHECK(reduction.instance.names[0] == "w1.1");
    CHECK(reduction.instance.names[35] == "w12.3");
    CHECK(reduction.instance.names[36] == "d1.1");
    CHECK(reduction.instance.names[83] == "d12.4");
    CHECK(reduction.instance.names[84] == "g1");
    CHECK(reduction.instance.names[119] == "g36");

    const auto graph = underlying_graph(reduction.instance.game);
    CHECK(graph.max_degree() == 3);
    for (int w = 0; w < 36; ++w) CHECK(graph.degree(w) == 3);
    for (int r = 0; r < 12; ++r) {
        for (int p = 0; p < 3; ++p) CHECK(graph.degree(36 + 4 * r + p) == 2);
        CHECK(graph.degree(36 + 4 * r + 3) == 3);
    }
    // Spare agents form stars: one hub of degree three, three leaves.
    for (int star = 0; star < 9; ++star) {
        CHECK(graph.degree(84 + 4 * star + 3) == 3);
        for (int leaf = 0; leaf < 3; ++leaf) {
            CHECK(graph.degree(84 + 4 * star + leaf) == 1);
        }
    }
}

TEST_CASE("weak-justified reduction replicates other clause counts up to twelve") {
    // Three clauses gain a factor of four; the agent total must stay a
    // multiple of three, which forces twelve copies of the clause set.
    const auto reduction = reduce_x3sat_to_wjef(identical_clauses());
    CHECK(reduction.replicated);
    CHECK(reduction.formula.num_vars == 12);
    CHECK(reduction.formula.clauses.size() == 12);
    CHECK(reduction.instance.game.num_agents() == 120);
    // Copy two of the clause works over fresh variables 7, 8, 9.
    CHECK(reduction.formula.clauses[7] == std::array<int, 3>{6, 7, 8});

    // Four clauses with four variables gain only the missing factor of three.
    const auto by_three = reduce_x3sat_to_wjef(subsets_of_four());
    CHECK(by_three.replicated);
    CHECK(by_three.formula.num_vars == 12);
    CHECK(by_three.formula.clauses.size() == 12);
    CHECK(by_three.instance.game.num_agents() == 120);
    CHECK(by_three.formula.clauses[4] == std::array<int, 3>{4, 5, 6});

    CHECK_THROWS_WITH_AS(reduce_x3sat_to_wjef(identical_clauses(), true),
                         "clause count 3 is not divisible by 12", std::invalid_argument);
    CHECK_THROWS_WITH_AS(reduce_x3sat_to_wjef(subsets_of_four(), true),
                         "clause count 4 is not divisible by 12", std::invalid_argument);
}

TEST_CASE("exact models and weak-justified partitions translate both ways") {
    const auto reduction = reduce_x3sat_to_wjef(identical_clauses());
    const auto& formula = reduction.formula;
    const auto& game = reduction.instance.game;

    int models = 0;
    for (unsigned mask = 0; mask < (1u << 12); ++mask) {
        const auto model = bits(mask, 12);
        if (!is_exact_model(formula, model)) continue;
        ++models;
        const auto pi = wjef_partition_from_exact_model(formula, model);
        CHECK(find_violations(game, pi, Concept::wjef).empty());
        CHECK(model_from_wjef_partition(formula, game, pi) == model);
    }
    // Each of the four clause copies independently picks its true variable.
    CHECK(models == 81);

    // True variables keep their triangle whole, false ones are split three ways.
    std::vector<bool> model(12, false);
    model[0] = model[4] = model[8] = model[9] = true;
    REQUIRE(is_exact_model(formula, model));
    const auto pi = wjef_partition_from_exact_model(formula, model);
    const std::array<int, 3> first_triangle{0, 1, 2};
    const std::array<int, 3> second_triangle{3, 4, 5};
    CHECK(sigma(pi, first_triangle) == 1);
    CHECK(sigma(pi, second_triangle) == 3);

    CHECK_THROWS_WITH_AS(wjef_partition_from_exact_model(formula, std::vector<bool>(12)),
                         "assignment is not an exact model: some clause does not have "
                         "exactly one true variable",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(wjef_partition_from_exact_model(identical_clauses(),
                                                         {true, false, false}),
                         "clause count must be divisible by 12", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        model_from_wjef_partition(formula, game, PartitionIntoTriples::ascending(120)),
        "partition is not weakly justified envy-free", std::invalid_argument);
}

TEST_CASE("directed-cover reduction emits the fixed blocks plus vertex agents") {
    const Digraph ring{3, {{0, 1}, {1, 2}, {2, 0}}};
    const auto inst = reduce_dtc_to_jef_ternary(ring);
    REQUIRE(inst.game.num_agents() == 12);
    CHECK(inst.game.is_ternary());
    CHECK_FALSE(inst.game.is_symmetric());

    CHECK(inst.names ==
          std::vector<std::string>{"h1", "h2", "h3", "h4", "h5", "l1", "l2", "l3", "l4",
                                   "c1", "c2", "c3"});

    // Pentagon: one step ahead scores 1 both ways, two steps ahead scores 2
    // forward but 1 back.
    CHECK(inst.game.value(0, 1) == 1);
    CHECK(inst.game.value(1, 0) == 1);
    CHECK(inst.game.value(0, 2) == 2);
    CHECK(inst.game.value(2, 0) == 1);
    CHECK(inst.game.value(0, 3) == 1);
    CHECK(inst.game.value(3, 0) == 2);

    CHECK(inst.game.value(5, 6) == 2);
    CHECK(inst.game.value(7, 8) == 2);
    CHECK(inst.game.value(5, 7) == 1);
    CHECK(inst.game.value(7, 5) == 1);

    // Vertex agents: arcs score 2, non-arcs 1, and l4 is valued above l3.
    CHECK(inst.game.value(9, 10) == 2);
    CHECK(inst.game.value(10, 9) == 1);
    CHECK(inst.game.value(9, 7) == 1);
    CHECK(inst.game.value(9, 8) == 2);
    CHECK(inst.game.value(8, 9) == 1);
    CHECK(inst.game.value(9, 0) == 0);
    // Every pair outside the pentagon scores at least 1 in both directions;
    // dropping the l1/l2 links would let a pentagon agent ride with two
    // vertex agents and the no-cover case would become satisfiable.
    CHECK(inst.game.value(9, 5) == 1);
    CHECK(inst.game.value(5, 9) == 1);
    CHECK(inst.game.value(9, 6) == 1);
    CHECK(inst.game.value(6, 9) == 1);

    CHECK_THROWS_WITH_AS(reduce_dtc_to_jef_ternary(Digraph{3, {{0, 1}, {1, 0}}}),
                         "arcs (1,2) and (2,1) are both present; the digraph must be "
                         "antisymmetric",
                         std::invalid_argument);

    const auto none = dtc_no_instance();
    CHECK(none.game.num_agents() == 6);
    CHECK(none.game.is_ternary());
    CHECK(none.names == std::vector<std::string>{"h1", "h2", "h3", "h4", "h5", "l1"});
}

TEST_CASE("directed covers and justified-envy-free partitions translate both ways") {
    const Digraph ring{3, {{0, 1}, {1, 2}, {2, 0}}};
    const auto inst = reduce_dtc_to_jef_ternary(ring);
    const std::vector<std::array<int, 3>> cover{{0, 1, 2}};

    const auto pi = jef_partition_from_triangle_cover(ring, cover, inst.game);
    CHECK(pi ==
          PartitionIntoTriples(12, {{0, 1, 2}, {3, 5, 6}, {4, 7, 8}, {9, 10, 11}}));
    CHECK(find_violations(inst.game, pi, Concept::jef).empty());
    CHECK(triangle_cover_from_jef_partition(ring, inst.game, pi) == cover);

    const std::vector<std::array<int, 3>> rotated{{1, 2, 0}};
    CHECK_NOTHROW(jef_partition_from_triangle_cover(ring, rotated, inst.game));

    const Digraph path{3, {{0, 1}, {1, 2}}};
    const auto path_inst = reduce_dtc_to_jef_ternary(path);
    CHECK_THROWS_WITH_AS(jef_partition_from_triangle_cover(path, cover, path_inst.game),
                         "cover triple {1,2,3} is not a directed 3-cycle",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(jef_partition_from_triangle_cover(ring, {}, inst.game),
                         "cover must contain exactly 1 triples", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        jef_partition_from_triangle_cover(ring, {{0, 1, 1}}, inst.game),
        "cover lists vertex 2 twice", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        jef_partition_from_triangle_cover(ring, {{0, 1, 2}}, dtc_no_instance().game),
        "agent count does not match the reduction layout", std::invalid_argument);
}

TEST_CASE("triangle-cover reduction stays symmetric with values up to six") {
    const UndirectedGraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
    const auto inst = reduce_pit_to_jef_symmetric(triangle);
    REQUIRE(inst.game.num_agents() == 18);
    CHECK(inst.game.is_symmetric());
    CHECK(inst.game.max_abs_value() == 6);

    CHECK(inst.names[0] == "h1");
    CHECK(inst.names[10] == "h11");
    CHECK(inst.names[11] == "l1");
    CHECK(inst.names[14] == "l4");
    CHECK(inst.names[15] == "c1");

    CHECK(inst.game.value(0, 1) == 2);
    CHECK(inst.game.value(0, 10) == 2);
    CHECK(inst.game.value(1, 2) == 4);
    CHECK(inst.game.value(1, 3) == 6);
    CHECK(inst.game.value(10, 1) == 5);
    CHECK(inst.game.value(2, 3) == 5);
    CHECK(inst.game.value(2, 4) == 3);
    CHECK(inst.game.value(1, 6) == 3);

    CHECK(inst.game.value(11, 12) == 2);
    CHECK(inst.game.value(13, 14) == 2);
    CHECK(inst.game.value(11, 13) == 1);

    CHECK(inst.game.value(15, 11) == 3);
    CHECK(inst.game.value(15, 14) == 3);
    CHECK(inst.game.value(15, 16) == 3);
    CHECK(inst.game.value(15, 0) == 0);

    const UndirectedGraph sparse{3, {{0, 1}}};
    const auto sparse_inst = reduce_pit_to_jef_symmetric(sparse);
    CHECK(sparse_inst.game.value(15, 17) == 2);

    const auto none = pit_no_instance();
    CHECK(none.game.num_agents() == 12);
    CHECK(none.game.is_symmetric());
    CHECK(none.names.back() == "l1");
}

TEST_CASE("triangle covers and justified-envy-free partitions translate both ways") {
    const UndirectedGraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
    const auto inst = reduce_pit_to_jef_symmetric(triangle);
    const std::vector<std::array<int, 3>> cover{{0, 1, 2}};

    const auto pi = jef_partition_from_triangle_cover(triangle, cover, inst.game);
    CHECK(pi == PartitionIntoTriples(18, {{1, 9, 10},
                                          {4, 5, 7},
                                          {0, 3, 8},
                                          {2, 11, 12},
                                          {6, 13, 14},
                                          {15, 16, 17}}));
    CHECK(find_violations(inst.game, pi, Concept::jef).empty());
    CHECK(triangle_cover_from_jef_partition(triangle, inst.game, pi) == cover);

    const UndirectedGraph wedge{3, {{0, 1}, {1, 2}}};
    const auto wedge_inst = reduce_pit_to_jef_symmetric(wedge);
    CHECK_THROWS_WITH_AS(jef_partition_from_triangle_cover(wedge, cover, wedge_inst.game),
                         "cover triple {1,2,3} is not a triangle", std::invalid_argument);
}

TEST_CASE("reduction sizes scale linearly in the vertex count") {
    const Digraph two_rings{6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}};
    CHECK(reduce_dtc_to_jef_ternary(two_rings).game.num_agents() == 15);

    const UndirectedGraph two_triangles{
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}};
    const auto inst = reduce_pit_to_jef_symmetric(two_triangles);
    CHECK(inst.game.num_agents() == 21);

    const std::vector<std::array<int, 3>> cover{{0, 1, 2}, {3, 4, 5}};
    const auto pi = jef_partition_from_triangle_cover(two_triangles, cover, inst.game);
    CHECK(find_violations(inst.game, pi, Concept::jef).empty());
    CHECK(triangle_cover_from_jef_partition(two_triangles, inst.game, pi) == cover);
}
