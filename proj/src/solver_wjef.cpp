#include "triples/solver_wjef.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace triples {

namespace {

bool is_c4(const Component& comp) {
    return comp.kind == ComponentKind::cycle && comp.size() == 4;
}

SurplusPool pool_without(const UnderlyingGraph& graph, const SurplusPool& pool,
                         const std::vector<int>& removed) {
    std::vector<int> remaining;
    remaining.reserve(pool.agents.size());
    for (int a : pool.agents) {
        if (std::find(removed.begin(), removed.end(), a) == removed.end()) {
            remaining.push_back(a);
        }
    }
    return make_surplus_pool(graph, std::move(remaining));
}

}  // namespace

SurplusPool make_surplus_pool(const UnderlyingGraph& graph, std::vector<int> agents) {
    std::sort(agents.begin(), agents.end());
    if (std::adjacent_find(agents.begin(), agents.end()) != agents.end()) {
        throw std::invalid_argument("surplus pool lists an agent twice");
    }
    SurplusPool pool;
    pool.agents = std::move(agents);
    pool.induced_degree.assign(pool.agents.size(), 0);
    pool.partner.assign(pool.agents.size(), -1);
    for (std::size_t i = 0; i < pool.agents.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.agents.size(); ++j) {
            if (graph.has_edge(pool.agents[i], pool.agents[j])) {
                if (pool.partner[i] != -1 || pool.partner[j] != -1) {
                    throw std::invalid_argument(
                        "surplus pool induces degree above 1 at agent " +
                        std::to_string(pool.agents[i] + 1));
                }
                pool.partner[i] = pool.agents[j];
                pool.partner[j] = pool.agents[i];
                pool.induced_degree[i] = pool.induced_degree[j] = 1;
            }
        }
    }
    return pool;
}

std::pair<std::vector<std::array<int, 3>>, SurplusPool> non_c4_components(
    const UnderlyingGraph& graph, const std::vector<Component>& components) {
    std::vector<std::array<int, 3>> triples;
    std::vector<int> surplus;
    for (const auto& comp : components) {
        if (is_c4(comp)) {
            throw std::invalid_argument("4-cycle component handed to the non-4-cycle splitter");
        }
        const int k = comp.size();
        for (int i = 0; i + 2 < k; i += 3) {
            triples.push_back({comp.agents[i], comp.agents[i + 1], comp.agents[i + 2]});
        }
        for (int i = k - k % 3; i < k; ++i) surplus.push_back(comp.agents[i]);
    }
    return {std::move(triples), make_surplus_pool(graph, std::move(surplus))};
}

std::array<std::array<int, 3>, 2> one_c4_two_singles(const Component& cycle4,
                                                     int w1, int w2) {
    if (!is_c4(cycle4)) {
        throw std::invalid_argument("component is not a 4-cycle");
    }
    const auto& r = cycle4.agents;
    for (int w : {w1, w2}) {
        if (std::find(r.begin(), r.end(), w) != r.end()) {
            throw std::invalid_argument("agent " + std::to_string(w + 1) +
                                        " already belongs to the 4-cycle");
        }
    }
    if (w1 == w2) {
        throw std::invalid_argument("the two outside agents must differ");
    }
    return {{{w1, r[0], r[1]}, {w2, r[2], r[3]}}};
}

std::vector<std::array<int, 3>> multiple_of_three_c4s(
    const std::vector<const Component*>& cycles) {
    if (cycles.size() % 3 != 0) {
        throw std::invalid_argument("4-cycle count " + std::to_string(cycles.size()) +
                                    " is not divisible by 3");
    }
    std::vector<std::array<int, 3>> out;
    out.reserve(cycles.size() / 3 * 4);
    for (std::size_t d = 0; d < cycles.size(); d += 3) {
        for (const Component* c : {cycles[d], cycles[d + 1], cycles[d + 2]}) {
            if (!is_c4(*c)) {
                throw std::invalid_argument("component is not a 4-cycle");
            }
        }
        const auto& a = cycles[d]->agents;
        const auto& b = cycles[d + 1]->agents;
        const auto& c = cycles[d + 2]->agents;
        out.push_back({a[0], a[1], b[0]});
        out.push_back({a[2], a[3], b[3]});
        out.push_back({b[1], c[0], c[1]});
        out.push_back({b[2], c[2], c[3]});
    }
    return out;
}

std::vector<std::array<int, 3>> configure_surplus(const SurplusPool& pool) {
    if (pool.size() % 3 != 0) {
        throw std::invalid_argument("surplus pool size " + std::to_string(pool.size()) +
                                    " is not divisible by 3");
    }
    const int t = pool.size() / 3;
    if (t == 0) return {};

    std::vector<int> standalone;
    std::vector<std::array<int, 2>> pairs;
    for (int i = 0; i < pool.size(); ++i) {
        if (pool.induced_degree[i] == 0) {
            standalone.push_back(pool.agents[i]);
        } else if (pool.agents[i] < pool.partner[i]) {
            pairs.push_back({pool.agents[i], pool.partner[i]});
        }
    }

    std::vector<std::array<int, 2>> seeds;
    if (static_cast<int>(pairs.size()) >= t) {
        seeds.assign(pairs.begin(), pairs.begin() + t);
    } else {
        seeds = pairs;
        const int needed = t - static_cast<int>(pairs.size());
        if (2 * needed > static_cast<int>(standalone.size())) {
            throw std::invalid_argument("not enough standalone agents to seed surplus triples");
        }
        for (int i = 0; i < needed; ++i) {
            seeds.push_back({standalone[2 * i], standalone[2 * i + 1]});
        }
    }

    std::vector<bool> seeded(pool.size(), false);
    for (const auto& s : seeds) {
        for (int a : s) {
            const auto it = std::lower_bound(pool.agents.begin(), pool.agents.end(), a);
            seeded[it - pool.agents.begin()] = true;
        }
    }
    std::vector<int> leftovers;
    for (int i = 0; i < pool.size(); ++i) {
        if (!seeded[i]) leftovers.push_back(pool.agents[i]);
    }

    std::vector<std::array<int, 3>> out;
    out.reserve(t);
    for (int i = 0; i < t; ++i) {
        out.push_back({seeds[i][0], seeds[i][1], leftovers[i]});
    }
    return out;
}

std::vector<int> pick_low_degree(const SurplusPool& pool, int k) {
    if (k > pool.size()) {
        throw std::invalid_argument("cannot pick " + std::to_string(k) + " agents from " +
                                    std::to_string(pool.size()));
    }
    // Degree-0 agents first, then adjacent pairs taken whole; at most the last
    // slot splits a pair. Splitting more than one pair can strand two partners
    // in a leftover triple with no adjacent pair inside it, and the picked
    // partners (sitting at utility 0 beside a 4-cycle) would weakly
    // justified-envy into that triple. Taking pairs whole keeps every leftover
    // triple anchored by an adjacent pair whenever a partner is left behind.
    std::vector<int> picked;
    picked.reserve(k);
    const int size = pool.size();
    for (int i = 0; i < size && static_cast<int>(picked.size()) < k; ++i) {
        if (pool.induced_degree[i] == 0) picked.push_back(pool.agents[i]);
    }
    for (int i = 0; i < size && static_cast<int>(picked.size()) < k; ++i) {
        if (pool.induced_degree[i] == 1 && pool.agents[i] < pool.partner[i]) {
            picked.push_back(pool.agents[i]);
            if (static_cast<int>(picked.size()) < k) picked.push_back(pool.partner[i]);
        }
    }
    return picked;
}

bool detect_wj_no_family(const ComponentDecomposition& decomp) {
    int c4 = 0;
    int isolated = 0;
    for (const auto& comp : decomp.components) {
        if (is_c4(comp)) {
            ++c4;
        } else if (comp.size() == 1) {
            ++isolated;
        } else {
            return false;
        }
    }
    return c4 >= 2 && isolated == 1;
}

SolveOutcome solve_wjef_maxdeg2(const Ashg& game) {
    if (!game.is_binary()) {
        throw std::invalid_argument("solver requires binary valuations");
    }
    if (!game.is_symmetric()) {
        throw std::invalid_argument("solver requires symmetric valuations");
    }
    const UnderlyingGraph graph = underlying_graph(game);
    const ComponentDecomposition decomp = decompose(graph);

    std::vector<const Component*> cycles4;
    std::vector<Component> rest;
    for (const auto& comp : decomp.components) {
        if (is_c4(comp)) {
            cycles4.push_back(&comp);
        } else {
            rest.push_back(comp);
        }
    }

    auto [chopped, pool] = non_c4_components(graph, rest);

    std::vector<std::array<int, 3>> out;
    std::vector<std::array<int, 3>> kept = chopped;
    SurplusPool remaining = pool;
    std::size_t first_cycle = 0;

    if (cycles4.size() % 3 == 2) {
        int w1, w2, w3, w4;
        if (pool.size() >= 4) {
            const auto picked = pick_low_degree(pool, 4);
            w1 = picked[0];
            w2 = picked[1];
            w3 = picked[2];
            w4 = picked[3];
            remaining = pool_without(graph, pool, picked);
        } else if (!chopped.empty()) {
            if (pool.size() != 1) {
                throw std::logic_error("degree-2 census cannot leave this pool size");
            }
            w1 = pool.agents[0];
            // Donor triple: smallest minimum agent, broken up in stored order.
            std::size_t donor = 0;
            for (std::size_t i = 1; i < chopped.size(); ++i) {
                if (*std::min_element(chopped[i].begin(), chopped[i].end()) <
                    *std::min_element(chopped[donor].begin(), chopped[donor].end())) {
                    donor = i;
                }
            }
            w2 = chopped[donor][0];
            w3 = chopped[donor][1];
            w4 = chopped[donor][2];
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(donor));
            remaining = make_surplus_pool(graph, {});
        } else {
            if (!detect_wj_no_family(decomp)) {
                throw std::logic_error("family branch reached on a non-family instance");
            }
            return SolveOutcome::none("Definition-2 family");
        }
        const auto head1 = one_c4_two_singles(*cycles4[0], w1, w2);
        const auto head2 = one_c4_two_singles(*cycles4[1], w3, w4);
        out.insert(out.end(), head1.begin(), head1.end());
        out.insert(out.end(), head2.begin(), head2.end());
        first_cycle = 2;
    } else if (cycles4.size() % 3 == 1) {
        if (pool.size() < 2) {
            throw std::logic_error("degree-2 census cannot leave this pool size");
        }
        const auto picked = pick_low_degree(pool, 2);
        remaining = pool_without(graph, pool, picked);
        const auto head = one_c4_two_singles(*cycles4[0], picked[0], picked[1]);
        out.insert(out.end(), head.begin(), head.end());
        first_cycle = 1;
    }

    const std::vector<const Component*> tail(cycles4.begin() + first_cycle, cycles4.end());
    const auto packed = multiple_of_three_c4s(tail);
    out.insert(out.end(), packed.begin(), packed.end());
    out.insert(out.end(), kept.begin(), kept.end());
    const auto filled = configure_surplus(remaining);
    out.insert(out.end(), filled.begin(), filled.end());

    return SolveOutcome::found(PartitionIntoTriples(game.num_agents(), std::move(out)));
}

}  // namespace triples
