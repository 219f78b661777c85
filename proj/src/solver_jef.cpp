#include "triples/solver_jef.hpp"

#include <stdexcept>

namespace triples {

std::int64_t count_bidirected_pairs(const Ashg& game, const PartitionIntoTriples& pi) {
    if (!game.is_binary()) {
        throw std::invalid_argument("bidirected-pair potential requires binary valuations");
    }
    std::int64_t total = 0;
    for (const auto& t : pi.triples()) {
        for (int x = 0; x < 3; ++x) {
            for (int y = x + 1; y < 3; ++y) {
                if (game.value(t[x], t[y]) == 1 && game.value(t[y], t[x]) == 1) ++total;
            }
        }
    }
    return total;
}

std::optional<std::pair<int, int>> find_jenvy_swap(const Ashg& game,
                                                   const PartitionIntoTriples& pi) {
    for (int i = 0; i < game.num_agents(); ++i) {
        for (int j = 0; j < game.num_agents(); ++j) {
            if (i == j) continue;
            if (classify_envy(game, pi, i, j) == EnvyKind::justified) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

std::string format_swap_step(const SwapStep& step) {
    return "step " + std::to_string(step.step) + ": swap " +
           std::to_string(step.envier + 1) + " " + std::to_string(step.envied + 1) +
           ", potential " + std::to_string(step.potential);
}

SwapDynamicsResult solve_jef_binary(const Ashg& game) {
    return solve_jef_binary(game, PartitionIntoTriples::ascending(game.num_agents()));
}

SwapDynamicsResult solve_jef_binary(const Ashg& game, PartitionIntoTriples initial) {
    if (!game.is_binary()) {
        throw std::invalid_argument("swap dynamics require binary valuations");
    }
    SwapDynamicsResult result{std::move(initial), {}};
    std::int64_t potential = count_bidirected_pairs(game, result.partition);
    while (auto pair = find_jenvy_swap(game, result.partition)) {
        result.partition = result.partition.with_swapped(pair->first, pair->second);
        const std::int64_t next = count_bidirected_pairs(game, result.partition);
        if (next <= potential) {
            throw std::logic_error("potential failed to increase across a justified swap");
        }
        potential = next;
        result.trace.push_back({static_cast<int>(result.trace.size()) + 1, pair->first,
                                pair->second, potential});
        if (result.trace.size() > static_cast<std::size_t>(game.num_agents())) {
            throw std::logic_error("swap dynamics exceeded the |N| bound");
        }
    }
    return result;
}

SolveOutcome solve_jef_general(const Ashg& game, const JefSearchOptions& options) {
    if (game.is_binary()) {
        return SolveOutcome::found(solve_jef_binary(game).partition);
    }

    const int n = game.num_agents();
    std::vector<bool> used(n, false);
    std::vector<std::array<int, 3>> stack;
    stack.reserve(n / 3);
    std::int64_t budget = options.budget;
    bool exhausted_budget = false;

    // True iff some agent of one completed triple has justified envy toward
    // an agent of the other; both utilities are fixed, so the check is final.
    auto jenvy_between = [&](const std::array<int, 3>& t1, const std::array<int, 3>& t2) {
        for (int side = 0; side < 2; ++side) {
            const auto& mine = side == 0 ? t1 : t2;
            const auto& theirs = side == 0 ? t2 : t1;
            for (int i : mine) {
                std::int64_t ui = 0;
                for (int m : mine)
                    if (m != i) ui += game.value(i, m);
                for (int j : theirs) {
                    std::int64_t gained = 0;
                    bool strict = true;
                    for (int m : theirs) {
                        if (m == j) continue;
                        gained += game.value(i, m);
                        strict = strict && game.value(m, i) > game.value(m, j);
                    }
                    if (gained > ui && strict) return true;
                }
            }
        }
        return false;
    };

    std::optional<PartitionIntoTriples> found;
    auto dfs = [&](auto&& self) -> bool {
        if (static_cast<int>(stack.size()) == n / 3) {
            found = PartitionIntoTriples(n, stack);
            return true;
        }
        int lead = 0;
        while (used[lead]) ++lead;
        used[lead] = true;
        for (int b = lead + 1; b < n; ++b) {
            if (used[b]) continue;
            used[b] = true;
            for (int c = b + 1; c < n; ++c) {
                if (used[c]) continue;
                if (--budget < 0) {
                    exhausted_budget = true;
                    used[b] = false;
                    used[lead] = false;
                    return true;
                }
                const std::array<int, 3> t{lead, b, c};
                bool bad = false;
                for (const auto& prev : stack) {
                    if (jenvy_between(prev, t)) {
                        bad = true;
                        break;
                    }
                }
                if (bad) continue;
                used[c] = true;
                stack.push_back(t);
                const bool stop = self(self);
                stack.pop_back();
                used[c] = false;
                if (stop) {
                    used[b] = false;
                    used[lead] = false;
                    return true;
                }
            }
            used[b] = false;
        }
        used[lead] = false;
        return false;
    };
    dfs(dfs);

    if (found) return SolveOutcome::found(std::move(*found));
    if (exhausted_budget) return SolveOutcome::not_known();
    return SolveOutcome::none("exhaustive");
}

}  // namespace triples
