#include "triples/solver_ef.hpp"

#include <stdexcept>

namespace triples {

namespace {

void require_solver_preconditions(const Ashg& game) {
    if (!game.is_binary()) {
        throw std::invalid_argument("solver requires binary valuations");
    }
    if (!game.is_symmetric()) {
        throw std::invalid_argument("solver requires symmetric valuations");
    }
}

}  // namespace

bool ef_exists(const ComponentDecomposition& decomp) {
    const ComponentCensus census = component_census(decomp);
    return 2 * census.q + census.r <= census.p;
}

SolveOutcome solve_ef_maxdeg2(const Ashg& game, EfSolveStats* stats) {
    require_solver_preconditions(game);
    EfSolveStats local;
    EfSolveStats& st = stats ? *stats : local;

    const UnderlyingGraph graph = underlying_graph(game);
    const ComponentDecomposition decomp = decompose(graph);
    st.steps += game.num_agents();

    if (!ef_exists(decomp)) {
        return SolveOutcome::none("Lemma-1 condition violated");
    }

    std::vector<int> isolated;
    std::vector<const Component*> two_short;   // size 3k-2, k > 1
    std::vector<const Component*> one_short;   // size 3k-1
    std::vector<const Component*> full;        // size 3k
    for (const auto& comp : decomp.components) {
        ++st.steps;
        if (comp.size() == 1) {
            isolated.push_back(comp.agents[0]);
        } else if (comp.size() % 3 == 1) {
            two_short.push_back(&comp);
        } else if (comp.size() % 3 == 2) {
            one_short.push_back(&comp);
        } else {
            full.push_back(&comp);
        }
    }

    std::vector<std::array<int, 3>> out;
    out.reserve(game.num_agents() / 3);
    std::size_t next_isolated = 0;
    auto take_isolated = [&]() {
        ++st.steps;
        return isolated[next_isolated++];
    };
    auto emit_prefix_triples = [&](const std::vector<int>& order, int count) {
        for (int i = 0; i < count; ++i) {
            st.steps += 3;
            out.push_back({order[3 * i], order[3 * i + 1], order[3 * i + 2]});
        }
    };

    for (const Component* comp : full) {
        emit_prefix_triples(comp->agents, comp->size() / 3);
    }
    // Components two agents short of a triple multiple reserve isolated
    // agents ahead of the one-short components.
    for (const Component* comp : two_short) {
        const int k = (comp->size() + 2) / 3;
        emit_prefix_triples(comp->agents, k - 2);
        const auto& a = comp->agents;
        out.push_back({a[comp->size() - 4], a[comp->size() - 3], take_isolated()});
        out.push_back({a[comp->size() - 2], a[comp->size() - 1], take_isolated()});
    }
    for (const Component* comp : one_short) {
        const int k = (comp->size() + 1) / 3;
        emit_prefix_triples(comp->agents, k - 1);
        const auto& a = comp->agents;
        out.push_back({a[comp->size() - 2], a[comp->size() - 1], take_isolated()});
    }
    while (next_isolated < isolated.size()) {
        const int x = take_isolated();
        const int y = take_isolated();
        const int z = take_isolated();
        out.push_back({x, y, z});
    }

    return SolveOutcome::found(PartitionIntoTriples(game.num_agents(), std::move(out)));
}

}  // namespace triples
