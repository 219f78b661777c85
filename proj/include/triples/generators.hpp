#pragma once

#include <cstdint>
#include <vector>

#include "triples/game.hpp"

namespace triples {

// One connected piece of a max-degree-2 underlying graph: a path on `size` >= 1
// agents (size 1 is an isolated agent) or a cycle on `size` >= 3 agents.
struct ComponentSpec {
    bool cycle = false;
    int size = 0;
};

// Binary symmetric instance whose underlying graph realizes `components`,
// with agents numbered consecutively component by component.
// Throws std::invalid_argument on malformed specs or a total not divisible by 3.
Ashg instance_from_components(const std::vector<ComponentSpec>& components);

// Every multiset of path/cycle components totalling exactly num_agents,
// emitted in a canonical order (component lists are sorted).
std::vector<std::vector<ComponentSpec>> all_component_multisets(int num_agents);

// The no-instance family for weakly justified envy: k disjoint 4-cycles plus
// one isolated agent. Requires k >= 2 and 3 | 4k+1, i.e. k = 2 (mod 3).
Ashg make_wj_no_instance(int k);

// Random binary symmetric instance with max degree <= 2: agents are split into
// a random mix of paths, cycles, and isolated agents, then relabeled randomly.
// Byte-identical output for a fixed (num_agents, seed) on every platform.
Ashg generate_paths_cycles(int num_agents, std::uint64_t seed);

// Each ordered pair (i,j), i != j, gets valuation 1 with probability `density`.
Ashg generate_random_binary(int num_agents, double density, std::uint64_t seed);

// Each unordered pair gets mutual valuation 1 with probability `density`.
Ashg generate_random_binary_symmetric(int num_agents, double density,
                                      std::uint64_t seed);

// General instance with valuations uniform in [-max_abs, max_abs].
Ashg generate_random_instance(int num_agents, std::int64_t max_abs,
                              std::uint64_t seed);

// Uniformly random partition into triples (random shuffle, consecutive blocks).
PartitionIntoTriples generate_random_partition(int num_agents, std::uint64_t seed);

}  // namespace triples
