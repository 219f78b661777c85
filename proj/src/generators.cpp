#include "triples/generators.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "triples/solver_wjef.hpp"
#include "triples/structure.hpp"

namespace triples {

namespace {

// All randomness goes through raw mt19937_64 draws so that a fixed seed yields
// byte-identical instances on every platform (std:: distributions do not
// guarantee that).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

template <typename T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[draw_below(rng, i)]);
    }
}

void require_agent_count(int num_agents) {
    if (num_agents < 3 || num_agents % 3 != 0) {
        throw std::invalid_argument("agent count must be a positive multiple of 3, got " +
                                    std::to_string(num_agents));
    }
}

void link(AshgBuilder& builder, int a, int b) { builder.set_symmetric(a, b, 1); }

}  // namespace

Ashg instance_from_components(const std::vector<ComponentSpec>& components) {
    int total = 0;
    for (const ComponentSpec& c : components) {
        if (c.size < 1 || (c.cycle && c.size < 3)) {
            throw std::invalid_argument("component of size " + std::to_string(c.size) +
                                        (c.cycle ? " cannot form a cycle" : " is invalid"));
        }
        total += c.size;
    }
    require_agent_count(total);

    AshgBuilder builder(total);
    int base = 0;
    for (const ComponentSpec& c : components) {
        for (int k = 0; k + 1 < c.size; ++k) link(builder, base + k, base + k + 1);
        if (c.cycle) link(builder, base, base + c.size - 1);
        base += c.size;
    }
    return builder.build();
}

std::vector<std::vector<ComponentSpec>> all_component_multisets(int num_agents) {
    require_agent_count(num_agents);
    // Canonical catalogue: paths by size, then cycles by size. Multisets are
    // enumerated as non-decreasing index sequences, so each appears once.
    std::vector<ComponentSpec> catalogue;
    for (int s = 1; s <= num_agents; ++s) catalogue.push_back({false, s});
    for (int s = 3; s <= num_agents; ++s) catalogue.push_back({true, s});

    std::vector<std::vector<ComponentSpec>> result;
    std::vector<ComponentSpec> current;
    auto recurse = [&](auto&& self, int remaining, std::size_t min_index) -> void {
        if (remaining == 0) {
            result.push_back(current);
            return;
        }
        for (std::size_t k = min_index; k < catalogue.size(); ++k) {
            if (catalogue[k].size > remaining) continue;
            current.push_back(catalogue[k]);
            self(self, remaining - catalogue[k].size, k);
            current.pop_back();
        }
    };
    recurse(recurse, num_agents, 0);
    return result;
}

Ashg make_wj_no_instance(int k) {
    if (k < 2 || (4 * k + 1) % 3 != 0) {
        throw std::invalid_argument(
            "family parameter k must be at least 2 with 4k+1 divisible by 3, got k=" +
            std::to_string(k));
    }
    AshgBuilder builder(4 * k + 1);
    for (int c = 0; c < k; ++c) {
        const int base = 4 * c;
        link(builder, base, base + 1);
        link(builder, base + 1, base + 2);
        link(builder, base + 2, base + 3);
        link(builder, base + 3, base);
    }
    Ashg game = builder.build();
    if (!detect_wj_no_family(decompose(underlying_graph(game)))) {
        throw std::logic_error("generated family instance failed its own detector");
    }
    return game;
}

Ashg generate_paths_cycles(int num_agents, std::uint64_t seed) {
    require_agent_count(num_agents);
    std::mt19937_64 rng(seed);

    std::vector<ComponentSpec> components;
    int remaining = num_agents;
    while (remaining > 0) {
        const int cap = remaining < 9 ? remaining : 9;
        const int size = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(cap)));
        const bool cycle = size >= 3 && draw_below(rng, 2) == 0;
        components.push_back({cycle, size});
        remaining -= size;
    }

    std::vector<int> label(static_cast<std::size_t>(num_agents));
    std::iota(label.begin(), label.end(), 0);
    shuffle_in_place(label, rng);

    AshgBuilder builder(num_agents);
    int base = 0;
    for (const ComponentSpec& c : components) {
        for (int k = 0; k + 1 < c.size; ++k) link(builder, label[base + k], label[base + k + 1]);
        if (c.cycle) link(builder, label[base], label[base + c.size - 1]);
        base += c.size;
    }
    Ashg game = builder.build();
    if (underlying_graph(game).max_degree() > 2) {
        throw std::logic_error("paths-cycles generator produced degree above 2");
    }
    return game;
}

Ashg generate_random_binary(int num_agents, double density, std::uint64_t seed) {
    require_agent_count(num_agents);
    if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("density must lie in [0,1], got " + std::to_string(density));
    }
    std::mt19937_64 rng(seed);
    AshgBuilder builder(num_agents);
    for (int i = 0; i < num_agents; ++i) {
        for (int j = 0; j < num_agents; ++j) {
            if (i != j && draw_unit(rng) < density) builder.set(i, j, 1);
        }
    }
    Ashg game = builder.build();
    if (!game.is_binary()) throw std::logic_error("random-binary generator left its family");
    return game;
}

Ashg generate_random_binary_symmetric(int num_agents, double density, std::uint64_t seed) {
    require_agent_count(num_agents);
    if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("density must lie in [0,1], got " + std::to_string(density));
    }
    std::mt19937_64 rng(seed);
    AshgBuilder builder(num_agents);
    for (int i = 0; i < num_agents; ++i) {
        for (int j = i + 1; j < num_agents; ++j) {
            if (draw_unit(rng) < density) builder.set_symmetric(i, j, 1);
        }
    }
    Ashg game = builder.build();
    if (!game.is_binary() || !game.is_symmetric()) {
        throw std::logic_error("random-binary-symmetric generator left its family");
    }
    return game;
}

Ashg generate_random_instance(int num_agents, std::int64_t max_abs, std::uint64_t seed) {
    require_agent_count(num_agents);
    if (max_abs < 0) {
        throw std::invalid_argument("valuation bound must be non-negative, got " +
                                    std::to_string(max_abs));
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(max_abs) + 1;
    AshgBuilder builder(num_agents);
    for (int i = 0; i < num_agents; ++i) {
        for (int j = 0; j < num_agents; ++j) {
            if (i == j) continue;
            builder.set(i, j, static_cast<std::int64_t>(draw_below(rng, span)) - max_abs);
        }
    }
    return builder.build();
}

PartitionIntoTriples generate_random_partition(int num_agents, std::uint64_t seed) {
    require_agent_count(num_agents);
    std::mt19937_64 rng(seed);
    std::vector<int> order(static_cast<std::size_t>(num_agents));
    std::iota(order.begin(), order.end(), 0);
    shuffle_in_place(order, rng);
    std::vector<std::array<int, 3>> triples;
    triples.reserve(static_cast<std::size_t>(num_agents) / 3);
    for (int t = 0; t < num_agents / 3; ++t) {
        triples.push_back({order[3 * t], order[3 * t + 1], order[3 * t + 2]});
    }
    return PartitionIntoTriples(num_agents, std::move(triples));
}

}  // namespace triples
