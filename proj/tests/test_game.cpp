#include <limits>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "triples/game.hpp"

using namespace triples;
using namespace triples::testing;

TEST_CASE("game construction validates its invariants") {
    CHECK_THROWS_AS(Ashg(4, std::vector<std::int64_t>(16, 0)), std::invalid_argument);
    CHECK_THROWS_AS(Ashg(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Ashg(3, std::vector<std::int64_t>(8, 0)), std::invalid_argument);

    std::vector<std::int64_t> diag(9, 0);
    diag[0] = 1;
    CHECK(contains(thrown_message([&] { Ashg(3, diag); }), "self-valuation of agent 1"));

    AshgBuilder huge(3);
    huge.set(0, 1, std::numeric_limits<std::int64_t>::max() / 4);
    CHECK_THROWS_AS(huge.build(), std::invalid_argument);
}

TEST_CASE("derived property flags") {
    const Ashg zero = Ashg::zero(6);
    CHECK(zero.is_binary());
    CHECK(zero.is_ternary());
    CHECK(zero.is_symmetric());
    CHECK(zero.max_abs_value() == 0);

    const Ashg ex = example_six();
    CHECK_FALSE(ex.is_binary());
    CHECK_FALSE(ex.is_ternary());
    CHECK_FALSE(ex.is_symmetric());
    CHECK(ex.max_abs_value() == 4);

    AshgBuilder tern(3);
    tern.set(0, 1, 2).set(1, 0, 2).set(1, 2, 1);
    const Ashg t = tern.build();
    CHECK_FALSE(t.is_binary());
    CHECK(t.is_ternary());
    CHECK_FALSE(t.is_symmetric());

    const Ashg bin = game_from_edges(3, {{0, 1}});
    CHECK(bin.is_binary());
    CHECK(bin.is_symmetric());
}

TEST_CASE("partition canonical form and validation") {
    const PartitionIntoTriples pi(6, {{5, 3, 4}, {2, 0, 1}});
    CHECK(pi.triples() == std::vector<std::array<int, 3>>{{0, 1, 2}, {3, 4, 5}});
    CHECK(pi == example_six_partition());
    CHECK(pi.triple_index_of(4) == 1);
    CHECK(pi.others_of(4) == std::array<int, 2>{3, 5});
    CHECK(pi.same_triple(0, 2));
    CHECK_FALSE(pi.same_triple(2, 3));

    CHECK(PartitionIntoTriples::ascending(9).triples() ==
          std::vector<std::array<int, 3>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});

    CHECK_THROWS_AS(PartitionIntoTriples(6, {{0, 1, 2}}), std::invalid_argument);
    CHECK(contains(thrown_message([] { PartitionIntoTriples(6, {{0, 1, 2}, {2, 3, 4}}); }),
                   "more than one triple"));
    CHECK(contains(thrown_message([] { PartitionIntoTriples(6, {{0, 1, 1}, {3, 4, 5}}); }),
                   "repeated agent"));
    CHECK(contains(thrown_message([] { PartitionIntoTriples(6, {{0, 1, 2}, {3, 4, 6}}); }),
                   "agent 7"));
}

TEST_CASE("with_swapped exchanges two agents") {
    const auto pi = example_six_partition();
    const auto swapped = pi.with_swapped(0, 3);
    CHECK(swapped.triples() == std::vector<std::array<int, 3>>{{0, 4, 5}, {1, 2, 3}});
    CHECK(pi.with_swapped(0, 1) == pi);
}

TEST_CASE("utility sums valuations over the coalition") {
    const Ashg g = example_six();
    const std::vector<int> mates{1, 2};
    CHECK(utility(g, 0, mates) == 5);
    const std::vector<int> target{4, 5};
    CHECK(utility(g, 0, target) == 6);
    const std::vector<int> self{0};
    CHECK(utility(g, 0, self) == 0);
    const std::vector<int> dup{1, 1};
    CHECK(contains(thrown_message([&] { utility(g, 0, dup); }), "twice"));
    const std::vector<int> bad{9};
    CHECK_THROWS_AS(utility(g, 0, bad), std::invalid_argument);
}

TEST_CASE("utility_in reads the agent's own triple") {
    const Ashg g = example_six();
    const auto pi = example_six_partition();
    CHECK(utility_in(g, pi, 0) == 5);
    CHECK(utility_in(g, pi, 4) == 2);
    CHECK(utility_in(g, pi, 5) == 2);
    CHECK(utility_in(g, pi, 3) == 0);
}

TEST_CASE("sigma counts touched triples") {
    const auto pi = PartitionIntoTriples::ascending(9);
    const std::vector<int> own_triple{0, 1, 2};
    CHECK(sigma(pi, own_triple) == 1);
    const std::vector<int> spread{0, 3, 6};
    CHECK(sigma(pi, spread) == 3);
    const std::vector<int> two{1, 2, 3};
    CHECK(sigma(pi, two) == 2);
    CHECK_THROWS_AS(sigma(pi, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("classify_envy on the six-agent example") {
    const Ashg g = example_six();
    const auto pi = example_six_partition();
    // 0 gains 6 over 5 in 3's seat; both seatmates weakly prefer 0, but agent 4
    // is tied (2 vs 2), so the envy is weakly justified and not justified.
    CHECK(classify_envy(g, pi, 0, 3) == EnvyKind::weakly_justified);
    CHECK(classify_envy(g, pi, 0, 1) == EnvyKind::none);
    CHECK(classify_envy(g, pi, 0, 4) == EnvyKind::none);
    CHECK(classify_envy(g, pi, 5, 1) == EnvyKind::plain);
    CHECK(classify_envy(g, pi, 5, 2) == EnvyKind::weakly_justified);
    CHECK(classify_envy(g, pi, 3, 0) == EnvyKind::none);
}

TEST_CASE("find_violations per concept on the six-agent example") {
    const Ashg g = example_six();
    const auto pi = example_six_partition();

    const std::vector<EnvyWitness> ef{{0, 3, EnvyKind::weakly_justified},
                                      {5, 1, EnvyKind::plain},
                                      {5, 2, EnvyKind::weakly_justified}};
    CHECK(find_violations(g, pi, Concept::ef) == ef);

    const std::vector<EnvyWitness> wjef{{0, 3, EnvyKind::weakly_justified},
                                        {5, 2, EnvyKind::weakly_justified}};
    CHECK(find_violations(g, pi, Concept::wjef) == wjef);

    CHECK(find_violations(g, pi, Concept::jef).empty());
    CHECK_THROWS_AS(find_violations(g, pi, Concept::stable), std::invalid_argument);
}

TEST_CASE("find_violations is empty on the all-zero game") {
    const Ashg g = Ashg::zero(3);
    const auto pi = PartitionIntoTriples::ascending(3);
    CHECK(find_violations(g, pi, Concept::ef).empty());
    CHECK(find_violations(g, pi, Concept::wjef).empty());
    CHECK(find_violations(g, pi, Concept::jef).empty());
}

TEST_CASE("blocks requires all three members to strictly gain") {
    const Ashg g = example_six();
    const auto pi = example_six_partition();
    // {0,4,5}: agent 0 gains 6 > 5 and agent 5 gains 3 > 2, but agent 4 gains
    // v(4,0) + v(4,5) = 2, exactly its current utility, so the triple does not
    // block under the strict definition.
    CHECK_FALSE(blocks(g, pi, {0, 4, 5}));
    CHECK_FALSE(blocks(g, pi, {0, 1, 2}));
    CHECK_FALSE(blocks(Ashg::zero(6), pi, {0, 3, 4}));
    CHECK_THROWS_AS(blocks(g, pi, {0, 0, 1}), std::invalid_argument);

    // A genuine block: three mutual friends split across triples.
    AshgBuilder b(6);
    b.set_symmetric(0, 3, 1).set_symmetric(0, 5, 1).set_symmetric(3, 5, 1);
    const Ashg friends = b.build();
    CHECK(blocks(friends, PartitionIntoTriples::ascending(6), {0, 3, 5}));
}

TEST_CASE("is_stable scans every triple") {
    const Ashg g = example_six();
    const auto pi = example_six_partition();
    // Agents 1, 2, 3 value everyone at 0 and can never strictly improve, so
    // the only candidate blocking triple is {0,4,5}, which falls to the tie.
    CHECK(is_stable(g, pi));
    CHECK(is_stable(Ashg::zero(6), pi));

    AshgBuilder b(6);
    b.set_symmetric(0, 3, 1).set_symmetric(0, 5, 1).set_symmetric(3, 5, 1);
    CHECK_FALSE(is_stable(b.build(), PartitionIntoTriples::ascending(6)));
}

TEST_CASE("swap stability variants differ in strictness") {
    const auto pi = PartitionIntoTriples::ascending(6);
    const Ashg zero = Ashg::zero(6);
    CHECK(swap_stability_check(zero, pi, SwapVariant::strict_swap));
    CHECK(swap_stability_check(zero, pi, SwapVariant::swap));
    CHECK(swap_stability_check(zero, pi, SwapVariant::swap_tu));

    // Agent 0 strictly gains by swapping with 3; agent 3 is indifferent.
    AshgBuilder b(6);
    b.set(0, 4, 1);
    const Ashg g = b.build();
    CHECK(swap_stability_check(g, pi, SwapVariant::strict_swap));
    CHECK_FALSE(swap_stability_check(g, pi, SwapVariant::swap));
    CHECK_FALSE(swap_stability_check(g, pi, SwapVariant::swap_tu));
}

TEST_CASE("concept names round-trip") {
    CHECK(concept_from_string("ef") == Concept::ef);
    CHECK(concept_from_string("wjef") == Concept::wjef);
    CHECK(concept_from_string("jef") == Concept::jef);
    CHECK(concept_from_string("stable") == Concept::stable);
    CHECK_FALSE(concept_from_string("EF").has_value());
    CHECK(to_string(Concept::wjef) == std::string("wjef"));
    CHECK(to_string(EnvyKind::weakly_justified) == std::string("weakly_justified"));
}
