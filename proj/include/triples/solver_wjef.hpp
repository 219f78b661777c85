#pragma once

#include <utility>

#include "triples/game.hpp"
#include "triples/structure.hpp"

namespace triples {

// Leftover agents carried between subroutines. Invariant: the subgraph the
// pool induces in the underlying graph has maximum degree 1, so each agent
// either stands alone or forms an adjacent pair inside the pool.
struct SurplusPool {
    std::vector<int> agents;          // ascending
    std::vector<int> induced_degree;  // parallel to agents, 0 or 1
    std::vector<int> partner;         // parallel to agents, -1 or the pool partner

    int size() const { return static_cast<int>(agents.size()); }
};

SurplusPool make_surplus_pool(const UnderlyingGraph& graph, std::vector<int> agents);

// Chops every component (none of which may be a 4-cycle) into consecutive
// triples, sending the trailing size-mod-3 agents to the surplus pool.
std::pair<std::vector<std::array<int, 3>>, SurplusPool> non_c4_components(
    const UnderlyingGraph& graph, const std::vector<Component>& components);

// Splits a 4-cycle (r1,r2,r3,r4) into {w1,r1,r2} and {w2,r3,r4} for two
// outside agents w1, w2; overlap with the cycle is an input error.
std::array<std::array<int, 3>, 2> one_c4_two_singles(const Component& cycle4,
                                                     int w1, int w2);

// Packs 3q four-cycles into 4q triples, three cycles per block; a cycle
// count not divisible by 3 is an input error.
std::vector<std::array<int, 3>> multiple_of_three_c4s(
    const std::vector<const Component*>& cycles);

// Groups a pool of 3t agents into t triples: adjacent pairs seed triples,
// supplemented by pairs of standalone agents when pairs run short, and each
// seed pair is extended with one leftover agent. Pool size must be a
// multiple of 3.
std::vector<std::array<int, 3>> configure_surplus(const SurplusPool& pool);

// The k agents minimizing total induced degree: standalone agents in
// ascending order, then adjacent pairs taken whole in ascending order of
// their smaller member; at most the final slot splits a pair. k above the
// pool size is an input error.
std::vector<int> pick_low_degree(const SurplusPool& pool, int k);

// True iff the decomposition is exactly k >= 2 four-cycles plus one
// isolated agent: the family with no weakly-justified-envy-free partition.
bool detect_wj_no_family(const ComponentDecomposition& decomp);

// Constructive solver for binary symmetric games of maximum degree 2;
// none_exists carries "Definition-2 family".
SolveOutcome solve_wjef_maxdeg2(const Ashg& game);

}  // namespace triples
