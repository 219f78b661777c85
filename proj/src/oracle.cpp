#include "triples/oracle.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace triples {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

// Envy floor of the concept, or none for stability (no pair pruning).
EnvyKind prune_floor(Concept which) {
    switch (which) {
        case Concept::ef: return EnvyKind::plain;
        case Concept::wjef: return EnvyKind::weakly_justified;
        case Concept::jef: return EnvyKind::justified;
        case Concept::stable: return EnvyKind::none;
    }
    return EnvyKind::none;
}

// Whether some agent of t1 has envy at or above floor for an agent of t2 or
// vice versa. Utilities of all six agents are fixed by their own triple.
bool cross_violation(const Ashg& game, const std::array<int, 3>& t1,
                     const std::array<int, 3>& t2, EnvyKind floor) {
    const std::array<const std::array<int, 3>*, 2> ts{&t1, &t2};
    for (int side = 0; side < 2; ++side) {
        const auto& mine = *ts[side];
        const auto& theirs = *ts[1 - side];
        for (int i : mine) {
            std::int64_t ui = 0;
            for (int m : mine)
                if (m != i) ui += game.value(i, m);
            for (int j : theirs) {
                std::int64_t gained = 0;
                for (int m : theirs)
                    if (m != j) gained += game.value(i, m);
                if (gained <= ui) continue;
                if (floor == EnvyKind::plain) return true;
                bool weak = true;
                bool strict = true;
                for (int k : theirs) {
                    if (k == j) continue;
                    weak = weak && game.value(k, i) >= game.value(k, j);
                    strict = strict && game.value(k, i) > game.value(k, j);
                }
                if (floor == EnvyKind::weakly_justified && weak) return true;
                if (floor == EnvyKind::justified && strict) return true;
            }
        }
    }
    return false;
}

struct SearchShared {
    const Ashg& game;
    Concept which;
    EnvyKind floor;
    bool prune;
    const BruteForceOptions& options;
    std::atomic<std::int64_t> nodes{0};
    std::atomic<int> winner{std::numeric_limits<int>::max()};
    std::mutex progress_mutex{};
    std::atomic<std::int64_t> last_reported{0};

    void bump_nodes(std::int64_t local) {
        const std::int64_t total = nodes.fetch_add(local) + local;
        if (options.progress && total - last_reported.load() >= options.progress_stride) {
            std::lock_guard<std::mutex> lock(progress_mutex);
            if (total - last_reported.load() >= options.progress_stride) {
                last_reported.store(total);
                options.progress(total);
            }
        }
    }
};

class ShardSearcher {
public:
    ShardSearcher(SearchShared& shared, int shard_index)
        : shared_(shared), shard_(shard_index), n_(shared.game.num_agents()) {
        used_.assign(n_, false);
    }

    // Runs DFS below a fixed first triple; returns the first clean partition
    // in canonical order within the shard, if any.
    std::optional<PartitionIntoTriples> run(const std::array<int, 3>& first) {
        stack_.clear();
        stack_.push_back(first);
        for (int a : first) used_[a] = true;
        std::optional<PartitionIntoTriples> out;
        dfs(out);
        for (int a : first) used_[a] = false;
        flush_nodes();
        return out;
    }

private:
    void flush_nodes() {
        if (local_nodes_ > 0) {
            shared_.bump_nodes(local_nodes_);
            local_nodes_ = 0;
        }
    }

    bool aborted() const { return shared_.winner.load(std::memory_order_relaxed) < shard_; }

    bool dfs(std::optional<PartitionIntoTriples>& out) {
        if (static_cast<int>(stack_.size()) == n_ / 3) {
            if (shared_.which == Concept::stable) {
                PartitionIntoTriples pi(n_, stack_);
                if (!is_stable(shared_.game, pi)) return false;
                out = std::move(pi);
                return true;
            }
            // Every pair of triples was vetted when the later one was placed.
            out = PartitionIntoTriples(n_, stack_);
            return true;
        }
        int lead = 0;
        while (used_[lead]) ++lead;
        used_[lead] = true;
        for (int b = lead + 1; b < n_; ++b) {
            if (used_[b]) continue;
            used_[b] = true;
            for (int c = b + 1; c < n_; ++c) {
                if (used_[c]) continue;
                if (++local_nodes_ >= (1 << 14)) {
                    flush_nodes();
                    if (aborted()) {
                        used_[b] = false;
                        used_[lead] = false;
                        return false;
                    }
                }
                const std::array<int, 3> t{lead, b, c};
                if (shared_.prune) {
                    bool bad = false;
                    for (const auto& prev : stack_) {
                        if (cross_violation(shared_.game, prev, t, shared_.floor)) {
                            bad = true;
                            break;
                        }
                    }
                    if (bad) continue;
                }
                used_[c] = true;
                stack_.push_back(t);
                const bool found = dfs(out);
                stack_.pop_back();
                used_[c] = false;
                if (found) {
                    used_[b] = false;
                    used_[lead] = false;
                    return true;
                }
            }
            used_[b] = false;
        }
        used_[lead] = false;
        return false;
    }

    SearchShared& shared_;
    int shard_;
    int n_;
    std::vector<bool> used_;
    std::vector<std::array<int, 3>> stack_;
    std::int64_t local_nodes_ = 0;
};

}  // namespace

std::int64_t count_partitions(int num_triples) {
    if (num_triples < 1) {
        throw std::invalid_argument("partition counting needs at least one triple");
    }
    unsigned __int128 total = 1;
    for (int i = 1; i <= num_triples; ++i) {
        const unsigned __int128 choose = static_cast<unsigned __int128>(3 * i - 1) *
                                         static_cast<unsigned __int128>(3 * i - 2) / 2;
        total *= choose;
        if (total > static_cast<unsigned __int128>(kInt64Max)) {
            throw std::overflow_error("partition count for " + std::to_string(num_triples) +
                                      " triples exceeds the 64-bit range");
        }
    }
    return static_cast<std::int64_t>(total);
}

long double count_partitions_estimate(int num_triples) {
    long double log_total = 0;
    for (int i = 1; i <= num_triples; ++i) {
        log_total += std::log10(static_cast<long double>(3 * i - 1) *
                                static_cast<long double>(3 * i - 2) / 2);
    }
    return std::pow(10.0L, log_total);
}

void enumerate_partitions(
    int num_agents,
    const std::function<bool(const std::vector<std::array<int, 3>>&)>& visit,
    int cap_agents) {
    if (num_agents < 3 || num_agents % 3 != 0) {
        throw std::invalid_argument("number of agents must be a positive multiple of 3, got " +
                                    std::to_string(num_agents));
    }
    if (num_agents > cap_agents) {
        throw std::invalid_argument("enumeration over " + std::to_string(num_agents) +
                                    " agents exceeds the cap of " + std::to_string(cap_agents));
    }
    std::vector<bool> used(num_agents, false);
    std::vector<std::array<int, 3>> stack;
    stack.reserve(num_agents / 3);

    // Returns false once the visitor asks to stop.
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(stack.size()) == num_agents / 3) return visit(stack);
        int lead = 0;
        while (used[lead]) ++lead;
        used[lead] = true;
        for (int b = lead + 1; b < num_agents; ++b) {
            if (used[b]) continue;
            used[b] = true;
            for (int c = b + 1; c < num_agents; ++c) {
                if (used[c]) continue;
                used[c] = true;
                stack.push_back({lead, b, c});
                const bool keep_going = self(self);
                stack.pop_back();
                used[c] = false;
                if (!keep_going) {
                    used[b] = false;
                    used[lead] = false;
                    return false;
                }
            }
            used[b] = false;
        }
        used[lead] = false;
        return true;
    };
    rec(rec);
}

SolveOutcome brute_force(const Ashg& game, Concept which, const BruteForceOptions& options) {
    const int n = game.num_agents();
    if (n > options.cap_agents) {
        throw std::invalid_argument("brute force over " + std::to_string(n) +
                                    " agents exceeds the cap of " +
                                    std::to_string(options.cap_agents));
    }

    SearchShared shared{game, which, prune_floor(which), which != Concept::stable, options};

    // Shards fix the first triple {0, b, c} in canonical order.
    std::vector<std::array<int, 3>> firsts;
    for (int b = 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) firsts.push_back({0, b, c});
    }

    const int threads = std::max(1, options.num_threads);
    std::vector<std::optional<PartitionIntoTriples>> results(firsts.size());

    if (threads == 1) {
        for (std::size_t s = 0; s < firsts.size(); ++s) {
            ShardSearcher searcher(shared, static_cast<int>(s));
            results[s] = searcher.run(firsts[s]);
            if (results[s]) return SolveOutcome::found(std::move(*results[s]));
        }
        return SolveOutcome::none("exhaustive");
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t s = next.fetch_add(1);
            if (s >= firsts.size()) break;
            if (shared.winner.load() < static_cast<int>(s)) continue;
            ShardSearcher searcher(shared, static_cast<int>(s));
            auto found = searcher.run(firsts[s]);
            if (found) {
                results[s] = std::move(found);
                int expected = shared.winner.load();
                while (static_cast<int>(s) < expected &&
                       !shared.winner.compare_exchange_weak(expected, static_cast<int>(s))) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (auto& r : results) {
        if (r) return SolveOutcome::found(std::move(*r));
    }
    return SolveOutcome::none("exhaustive");
}

}  // namespace triples
