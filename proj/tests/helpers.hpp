#pragma once

#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "triples/game.hpp"
#include "triples/structure.hpp"

namespace triples::testing {

// Six agents 0..5 with the eight nonzero valuations of the worked example:
// agent 0 values 1->4, 2->1, 4->3, 5->3; agent 4 values 0->2, 3->2;
// agent 5 values 0->3, 3->2. Everything else is 0.
inline Ashg example_six() {
    AshgBuilder b(6);
    b.set(0, 1, 4).set(0, 2, 1).set(0, 4, 3).set(0, 5, 3);
    b.set(4, 0, 2).set(4, 3, 2);
    b.set(5, 0, 3).set(5, 3, 2);
    return b.build();
}

inline PartitionIntoTriples example_six_partition() {
    return PartitionIntoTriples(6, {{0, 1, 2}, {3, 4, 5}});
}

// Binary symmetric game whose underlying graph has exactly these edges.
inline Ashg game_from_edges(int num_agents,
                            const std::vector<std::pair<int, int>>& edges) {
    AshgBuilder b(num_agents);
    for (auto [x, y] : edges) b.set_symmetric(x, y, 1);
    return b.build();
}

// Raw graph builder for structure-level tests that need agent counts not
// divisible by 3.
inline UnderlyingGraph graph_from_edges(int num_agents,
                                        const std::vector<std::pair<int, int>>& edges) {
    UnderlyingGraph g;
    g.num_agents = num_agents;
    g.adj.assign(num_agents, {});
    for (auto [a, b] : edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    return g;
}

template <typename Fn>
std::string thrown_message(Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

inline bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace triples::testing
