#pragma once

#include <vector>

#include "triples/game.hpp"

namespace triples {

// Undirected graph on the agents of a binary symmetric game:
// an edge exists iff the mutual valuation is 1.
struct UnderlyingGraph {
    int num_agents = 0;
    std::vector<std::vector<int>> adj;

    int degree(int agent) const { return static_cast<int>(adj[agent].size()); }
    int max_degree() const;
    bool has_edge(int a, int b) const;
};

// Requires a binary symmetric game; the error names the offending pair.
UnderlyingGraph underlying_graph(const Ashg& game);

enum class ComponentKind { isolated, path, cycle };

// agents holds the consecutive order: a path runs endpoint to endpoint
// starting at its smaller-indexed degree-1 endpoint; a cycle starts at its
// minimum-index agent and proceeds toward that agent's smaller neighbour.
struct Component {
    ComponentKind kind;
    std::vector<int> agents;

    int size() const { return static_cast<int>(agents.size()); }
};

// Components ordered by their minimum agent index.
struct ComponentDecomposition {
    int num_agents = 0;
    std::vector<Component> components;
};

// Requires maximum degree <= 2; the error names the violating agent.
ComponentDecomposition decompose(const UnderlyingGraph& graph);

// p: isolated agents. q: components of 3k-2 agents with k > 1 (an isolated
// agent is 3*1-2 but counts only toward p). r: components of 3k-1 agents.
// s: components of 3k agents.
struct ComponentCensus {
    int p = 0;
    int q = 0;
    int r = 0;
    int s = 0;
};

ComponentCensus component_census(const ComponentDecomposition& decomp);

}  // namespace triples
