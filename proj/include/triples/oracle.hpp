#pragma once

#include <cstdint>
#include <functional>

#include "triples/game.hpp"

namespace triples {

inline constexpr int kOracleCapAgents = 18;

// (3n)! / (6^n n!), exact; throws std::overflow_error past int64 range.
std::int64_t count_partitions(int num_triples);

// Rough magnitude for over-cap diagnostics; never throws.
long double count_partitions_estimate(int num_triples);

// Streams every partition in canonical order: each triple is led by the
// smallest agent not yet placed, partners ascending. The visitor receives a
// reusable buffer; returning false stops the stream. num_agents above the
// cap is an input error.
void enumerate_partitions(
    int num_agents,
    const std::function<bool(const std::vector<std::array<int, 3>>&)>& visit,
    int cap_agents = kOracleCapAgents);

struct BruteForceOptions {
    int cap_agents = kOracleCapAgents;
    int num_threads = 1;
    // Called with (nodes searched so far) roughly every progress_stride nodes.
    std::function<void(std::int64_t)> progress;
    std::int64_t progress_stride = 1 << 22;
};

// First concept-clean partition in canonical order, or none_exists with
// certificate "exhaustive". Subtrees rooted at a violating completed pair of
// triples are pruned for the envy concepts; the verdict is independent of
// num_threads (shards are combined in canonical order).
SolveOutcome brute_force(const Ashg& game, Concept which,
                         const BruteForceOptions& options = {});

}  // namespace triples
