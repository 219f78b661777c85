#pragma once

#include <optional>
#include <string>
#include <utility>

#include "triples/game.hpp"

namespace triples {

// Pairs {i,j} with v_i(j) = v_j(i) = 1 whose members share a triple.
// Bounded by |N|, which bounds the swap dynamics. Binary games only.
std::int64_t count_bidirected_pairs(const Ashg& game, const PartitionIntoTriples& pi);

// Lexicographically smallest (envier, envied) with justified envy, if any.
std::optional<std::pair<int, int>> find_jenvy_swap(const Ashg& game,
                                                   const PartitionIntoTriples& pi);

struct SwapStep {
    int step;     // 1-based
    int envier;
    int envied;
    std::int64_t potential;  // bidirected pairs inside triples after the swap
};

// "step k: swap a b, potential p" with 1-indexed agents.
std::string format_swap_step(const SwapStep& step);

struct SwapDynamicsResult {
    PartitionIntoTriples partition;
    std::vector<SwapStep> trace;
};

// Swap dynamics for binary games: repeatedly exchanges the smallest
// justified envier with its target. The potential strictly increases each
// step, so at most |N| swaps occur. Starts from {0,1,2},{3,4,5},... unless
// an initial partition is given.
SwapDynamicsResult solve_jef_binary(const Ashg& game);
SwapDynamicsResult solve_jef_binary(const Ashg& game, PartitionIntoTriples initial);

struct JefSearchOptions {
    // Candidate triples examined before giving up with unknown.
    std::int64_t budget = 100'000'000;
};

// Binary games dispatch to the swap dynamics. Otherwise a depth-first
// search over canonical triple assignments runs, pruning on justified envy
// between completed triples; exhaustion yields none_exists("exhaustive"),
// and running out of budget yields unknown.
SolveOutcome solve_jef_general(const Ashg& game, const JefSearchOptions& options = {});

}  // namespace triples
