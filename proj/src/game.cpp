#include "triples/game.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace triples {

namespace {

std::string agent_name(int internal_id) {
    return std::to_string(internal_id + 1);
}

void check_agent(int n, int agent, const char* role) {
    if (agent < 0 || agent >= n) {
        throw std::invalid_argument(std::string("unknown ") + role + " agent " +
                                    agent_name(agent) + " (instance has " +
                                    std::to_string(n) + " agents)");
    }
}

}  // namespace

std::size_t Ashg::idx(int from, int to) const {
    return static_cast<std::size_t>(from) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(to);
}

Ashg::Ashg(int num_agents, std::vector<std::int64_t> valuations)
    : n_(num_agents), v_(std::move(valuations)) {
    if (n_ < 3 || n_ % 3 != 0) {
        throw std::invalid_argument("number of agents must be a positive multiple of 3, got " +
                                    std::to_string(n_));
    }
    if (v_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("valuation table size mismatch");
    }
    binary_ = ternary_ = symmetric_ = true;
    for (int i = 0; i < n_; ++i) {
        if (v_[idx(i, i)] != 0) {
            throw std::invalid_argument("self-valuation of agent " + agent_name(i) +
                                        " must be zero");
        }
        for (int j = 0; j < n_; ++j) {
            const std::int64_t x = v_[idx(i, j)];
            max_abs_ = std::max(max_abs_, x < 0 ? -x : x);
            if (x != 0 && x != 1) binary_ = false;
            if (x != 0 && x != 1 && x != 2) ternary_ = false;
            if (j > i && x != v_[idx(j, i)]) symmetric_ = false;
        }
    }
    // Utilities are sums of at most |N| valuations; keep a wide safety margin.
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 4;
    if (max_abs_ > 0 && max_abs_ > cap / n_) {
        throw std::invalid_argument("valuation magnitudes too large: |N| * max|v| may overflow");
    }
}

Ashg Ashg::zero(int num_agents) {
    return Ashg(num_agents,
                std::vector<std::int64_t>(
                    static_cast<std::size_t>(num_agents) * static_cast<std::size_t>(num_agents),
                    0));
}

AshgBuilder::AshgBuilder(int num_agents) : n_(num_agents) {
    if (n_ < 3 || n_ % 3 != 0) {
        throw std::invalid_argument("number of agents must be a positive multiple of 3, got " +
                                    std::to_string(n_));
    }
    v_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
}

AshgBuilder& AshgBuilder::set(int from, int to, std::int64_t value) {
    check_agent(n_, from, "valuing");
    check_agent(n_, to, "valued");
    if (from == to && value != 0) {
        throw std::invalid_argument("self-valuation of agent " + agent_name(from) +
                                    " must be zero");
    }
    v_[static_cast<std::size_t>(from) * n_ + to] = value;
    return *this;
}

AshgBuilder& AshgBuilder::set_symmetric(int a, int b, std::int64_t value) {
    set(a, b, value);
    set(b, a, value);
    return *this;
}

std::int64_t AshgBuilder::get(int from, int to) const {
    check_agent(n_, from, "valuing");
    check_agent(n_, to, "valued");
    return v_[static_cast<std::size_t>(from) * n_ + to];
}

Ashg AshgBuilder::build() const {
    return Ashg(n_, v_);
}

PartitionIntoTriples::PartitionIntoTriples(int num_agents,
                                           std::vector<std::array<int, 3>> triples)
    : n_(num_agents), triples_(std::move(triples)) {
    if (n_ < 3 || n_ % 3 != 0) {
        throw std::invalid_argument("number of agents must be a positive multiple of 3, got " +
                                    std::to_string(n_));
    }
    if (triples_.size() != static_cast<std::size_t>(n_) / 3) {
        throw std::invalid_argument("partition must contain exactly " +
                                    std::to_string(n_ / 3) + " triples, got " +
                                    std::to_string(triples_.size()));
    }
    owner_.assign(n_, -1);
    for (auto& t : triples_) {
        std::sort(t.begin(), t.end());
        for (int a : t) {
            check_agent(n_, a, "partition");
            if (owner_[a] != -1) {
                throw std::invalid_argument("agent " + agent_name(a) +
                                            " appears in more than one triple");
            }
        }
        owner_[t[0]] = owner_[t[1]] = owner_[t[2]] = 0;
        if (t[0] == t[1] || t[1] == t[2]) {
            throw std::invalid_argument("triple with repeated agent " + agent_name(t[1]));
        }
    }
    std::sort(triples_.begin(), triples_.end());
    for (std::size_t k = 0; k < triples_.size(); ++k) {
        for (int a : triples_[k]) owner_[a] = static_cast<int>(k);
    }
}

PartitionIntoTriples PartitionIntoTriples::ascending(int num_agents) {
    std::vector<std::array<int, 3>> ts;
    for (int a = 0; a + 2 < num_agents; a += 3) ts.push_back({a, a + 1, a + 2});
    return PartitionIntoTriples(num_agents, std::move(ts));
}

const std::array<int, 3>& PartitionIntoTriples::triple_of(int agent) const {
    return triples_[triple_index_of(agent)];
}

int PartitionIntoTriples::triple_index_of(int agent) const {
    check_agent(n_, agent, "lookup");
    return owner_[agent];
}

std::array<int, 2> PartitionIntoTriples::others_of(int agent) const {
    const auto& t = triple_of(agent);
    if (t[0] == agent) return {t[1], t[2]};
    if (t[1] == agent) return {t[0], t[2]};
    return {t[0], t[1]};
}

bool PartitionIntoTriples::same_triple(int a, int b) const {
    return triple_index_of(a) == triple_index_of(b);
}

PartitionIntoTriples PartitionIntoTriples::with_swapped(int a, int b) const {
    const int ta = triple_index_of(a);
    const int tb = triple_index_of(b);
    if (ta == tb) return *this;
    auto ts = triples_;
    for (int& x : ts[ta])
        if (x == a) x = b;
    for (int& x : ts[tb])
        if (x == b) x = a;
    return PartitionIntoTriples(n_, std::move(ts));
}

const char* to_string(EnvyKind kind) {
    switch (kind) {
        case EnvyKind::none: return "none";
        case EnvyKind::plain: return "plain";
        case EnvyKind::weakly_justified: return "weakly_justified";
        case EnvyKind::justified: return "justified";
    }
    return "?";
}

const char* to_string(Concept concept_kind) {
    switch (concept_kind) {
        case Concept::ef: return "ef";
        case Concept::wjef: return "wjef";
        case Concept::jef: return "jef";
        case Concept::stable: return "stable";
    }
    return "?";
}

std::optional<Concept> concept_from_string(const std::string& name) {
    if (name == "ef") return Concept::ef;
    if (name == "wjef") return Concept::wjef;
    if (name == "jef") return Concept::jef;
    if (name == "stable") return Concept::stable;
    return std::nullopt;
}

SolveOutcome SolveOutcome::found(PartitionIntoTriples pi) {
    return SolveOutcome{OutcomeTag::partition, std::move(pi), ""};
}

SolveOutcome SolveOutcome::none(std::string certificate) {
    return SolveOutcome{OutcomeTag::none_exists, std::nullopt, std::move(certificate)};
}

SolveOutcome SolveOutcome::not_known() {
    return SolveOutcome{OutcomeTag::unknown, std::nullopt, ""};
}

std::int64_t utility(const Ashg& game, int agent, std::span<const int> coalition) {
    check_agent(game.num_agents(), agent, "valuing");
    std::vector<bool> seen(static_cast<std::size_t>(game.num_agents()), false);
    std::int64_t total = 0;
    for (int member : coalition) {
        check_agent(game.num_agents(), member, "coalition");
        if (seen[member]) {
            throw std::invalid_argument("coalition lists agent " + agent_name(member) +
                                        " twice");
        }
        seen[member] = true;
        if (member != agent) total += game.value(agent, member);
    }
    return total;
}

std::int64_t utility_in(const Ashg& game, const PartitionIntoTriples& pi, int agent) {
    const auto others = pi.others_of(agent);
    return game.value(agent, others[0]) + game.value(agent, others[1]);
}

int sigma(const PartitionIntoTriples& pi, std::span<const int> agents) {
    if (agents.empty()) {
        throw std::invalid_argument("sigma of an empty agent set is undefined");
    }
    std::vector<bool> seen(static_cast<std::size_t>(pi.num_triples()), false);
    int count = 0;
    for (int a : agents) {
        const int t = pi.triple_index_of(a);
        if (!seen[t]) {
            seen[t] = true;
            ++count;
        }
    }
    return count;
}

EnvyKind classify_envy(const Ashg& game, const PartitionIntoTriples& pi,
                       int envier, int envied) {
    check_agent(game.num_agents(), envier, "envier");
    check_agent(game.num_agents(), envied, "envied");
    if (game.num_agents() != pi.num_agents()) {
        throw std::invalid_argument("partition and game disagree on the number of agents");
    }
    if (pi.same_triple(envier, envied)) return EnvyKind::none;

    const auto target = pi.others_of(envied);
    const std::int64_t gained = game.value(envier, target[0]) + game.value(envier, target[1]);
    if (gained <= utility_in(game, pi, envier)) return EnvyKind::none;

    bool weak = true;
    bool strict = true;
    for (int k : target) {
        const std::int64_t vi = game.value(k, envier);
        const std::int64_t vj = game.value(k, envied);
        weak = weak && vi >= vj;
        strict = strict && vi > vj;
    }
    if (strict) return EnvyKind::justified;
    if (weak) return EnvyKind::weakly_justified;
    return EnvyKind::plain;
}

std::vector<EnvyWitness> find_violations(const Ashg& game,
                                         const PartitionIntoTriples& pi,
                                         Concept which) {
    if (which == Concept::stable) {
        throw std::invalid_argument("find_violations expects an envy concept: ef, wjef or jef");
    }
    const EnvyKind floor = which == Concept::ef      ? EnvyKind::plain
                           : which == Concept::wjef ? EnvyKind::weakly_justified
                                                    : EnvyKind::justified;
    std::vector<EnvyWitness> out;
    for (int i = 0; i < game.num_agents(); ++i) {
        for (int j = 0; j < game.num_agents(); ++j) {
            if (i == j) continue;
            const EnvyKind kind = classify_envy(game, pi, i, j);
            if (kind >= floor) out.push_back({i, j, kind});
        }
    }
    return out;
}

bool blocks(const Ashg& game, const PartitionIntoTriples& pi, std::array<int, 3> triple) {
    for (int a : triple) check_agent(game.num_agents(), a, "triple");
    if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2]) {
        throw std::invalid_argument("blocking triple must have three distinct agents");
    }
    if (game.num_agents() != pi.num_agents()) {
        throw std::invalid_argument("partition and game disagree on the number of agents");
    }
    for (int m = 0; m < 3; ++m) {
        const int self = triple[m];
        const int x = triple[(m + 1) % 3];
        const int y = triple[(m + 2) % 3];
        const std::int64_t gained = game.value(self, x) + game.value(self, y);
        if (gained <= utility_in(game, pi, self)) return false;
    }
    return true;
}

bool is_stable(const Ashg& game, const PartitionIntoTriples& pi) {
    const int n = game.num_agents();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                if (blocks(game, pi, {a, b, c})) return false;
            }
        }
    }
    return true;
}

bool swap_stability_check(const Ashg& game, const PartitionIntoTriples& pi,
                          SwapVariant variant) {
    const int n = game.num_agents();
    for (int i = 0; i < n; ++i) {
        const std::int64_t ui = utility_in(game, pi, i);
        for (int j = i + 1; j < n; ++j) {
            if (pi.same_triple(i, j)) continue;
            const std::int64_t uj = utility_in(game, pi, j);
            const auto oi = pi.others_of(j);
            const auto oj = pi.others_of(i);
            const std::int64_t ni = game.value(i, oi[0]) + game.value(i, oi[1]);
            const std::int64_t nj = game.value(j, oj[0]) + game.value(j, oj[1]);
            switch (variant) {
                case SwapVariant::strict_swap:
                    if (ni > ui && nj > uj) return false;
                    break;
                case SwapVariant::swap:
                    if ((ni > ui && nj >= uj) || (nj > uj && ni >= ui)) return false;
                    break;
                case SwapVariant::swap_tu:
                    if (ni + nj > ui + uj) return false;
                    break;
            }
        }
    }
    return true;
}

}  // namespace triples
