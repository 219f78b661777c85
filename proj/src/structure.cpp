#include "triples/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace triples {

namespace {

std::string pair_name(int a, int b) {
    return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

}  // namespace

int UnderlyingGraph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

bool UnderlyingGraph::has_edge(int a, int b) const {
    const auto& nbrs = adj[a];
    return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
}

UnderlyingGraph underlying_graph(const Ashg& game) {
    const int n = game.num_agents();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::int64_t v = game.value(i, j);
            if (v != 0 && v != 1) {
                throw std::invalid_argument("valuation " + pair_name(i, j) +
                                            " is not binary");
            }
            if (j > i && v != game.value(j, i)) {
                throw std::invalid_argument("valuation " + pair_name(i, j) +
                                            " is not symmetric");
            }
        }
    }
    UnderlyingGraph g;
    g.num_agents = n;
    g.adj.assign(n, {});
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (game.value(i, j) == 1) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
        }
    }
    return g;
}

ComponentDecomposition decompose(const UnderlyingGraph& graph) {
    const int n = graph.num_agents;
    for (int a = 0; a < n; ++a) {
        if (graph.degree(a) > 2) {
            throw std::invalid_argument("agent " + std::to_string(a + 1) +
                                        " has degree " + std::to_string(graph.degree(a)) +
                                        ", exceeding 2");
        }
    }

    ComponentDecomposition decomp;
    decomp.num_agents = n;
    std::vector<bool> done(n, false);

    auto walk = [&](int start, int forbidden) {
        // Follows the unique unvisited direction; degree <= 2 keeps it a line.
        std::vector<int> order{start};
        done[start] = true;
        int prev = forbidden;
        int cur = start;
        while (true) {
            int next = -1;
            for (int nb : graph.adj[cur]) {
                if (nb != prev && !done[nb]) {
                    next = nb;
                    break;
                }
            }
            if (next == -1) break;
            order.push_back(next);
            done[next] = true;
            prev = cur;
            cur = next;
        }
        return order;
    };

    for (int a = 0; a < n; ++a) {
        if (done[a]) continue;
        if (graph.degree(a) == 0) {
            done[a] = true;
            decomp.components.push_back({ComponentKind::isolated, {a}});
            continue;
        }
        // Collect the whole component to classify it and find its anchor.
        std::vector<int> members;
        {
            std::vector<int> stack{a};
            std::vector<bool> in_comp(n, false);
            in_comp[a] = true;
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                members.push_back(x);
                for (int nb : graph.adj[x]) {
                    if (!in_comp[nb]) {
                        in_comp[nb] = true;
                        stack.push_back(nb);
                    }
                }
            }
        }
        const bool is_cycle = std::all_of(members.begin(), members.end(), [&](int x) {
            return graph.degree(x) == 2;
        });
        if (is_cycle) {
            // Start at the minimum agent, step toward its smaller neighbour.
            const int anchor = *std::min_element(members.begin(), members.end());
            const int first = std::min(graph.adj[anchor][0], graph.adj[anchor][1]);
            const int other = std::max(graph.adj[anchor][0], graph.adj[anchor][1]);
            std::vector<int> order{anchor, first};
            done[anchor] = true;
            done[first] = true;
            int prev = anchor;
            int cur = first;
            while (cur != other) {
                int next = graph.adj[cur][0] == prev ? graph.adj[cur][1]
                                                     : graph.adj[cur][0];
                order.push_back(next);
                done[next] = true;
                prev = cur;
                cur = next;
            }
            decomp.components.push_back({ComponentKind::cycle, std::move(order)});
        } else {
            std::vector<int> endpoints;
            for (int x : members) {
                if (graph.degree(x) == 1) endpoints.push_back(x);
            }
            const int start = *std::min_element(endpoints.begin(), endpoints.end());
            decomp.components.push_back({ComponentKind::path, walk(start, -1)});
        }
    }

    std::sort(decomp.components.begin(), decomp.components.end(),
              [](const Component& lhs, const Component& rhs) {
                  return *std::min_element(lhs.agents.begin(), lhs.agents.end()) <
                         *std::min_element(rhs.agents.begin(), rhs.agents.end());
              });
    return decomp;
}

ComponentCensus component_census(const ComponentDecomposition& decomp) {
    ComponentCensus census;
    for (const auto& comp : decomp.components) {
        const int k = comp.size();
        if (k == 1) {
            ++census.p;
        } else if (k % 3 == 1) {
            ++census.q;
        } else if (k % 3 == 2) {
            ++census.r;
        } else {
            ++census.s;
        }
    }
    return census;
}

}  // namespace triples
