#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace triples {

// Additively separable hedonic game over agents 0..num_agents-1.
// Immutable after construction; num_agents is a positive multiple of 3,
// the diagonal is zero, and |N| * max|v| fits comfortably in int64.
class Ashg {
public:
    Ashg(int num_agents, std::vector<std::int64_t> valuations);

    static Ashg zero(int num_agents);

    int num_agents() const { return n_; }
    std::int64_t value(int from, int to) const { return v_[idx(from, to)]; }

    bool is_binary() const { return binary_; }
    bool is_ternary() const { return ternary_; }
    bool is_symmetric() const { return symmetric_; }
    std::int64_t max_abs_value() const { return max_abs_; }

    const std::vector<std::int64_t>& raw() const { return v_; }

private:
    std::size_t idx(int from, int to) const;

    int n_;
    std::vector<std::int64_t> v_;
    bool binary_ = false;
    bool ternary_ = false;
    bool symmetric_ = false;
    std::int64_t max_abs_ = 0;
};

// Incremental construction helper; set() overwrites, build() validates.
class AshgBuilder {
public:
    explicit AshgBuilder(int num_agents);

    AshgBuilder& set(int from, int to, std::int64_t value);
    AshgBuilder& set_symmetric(int a, int b, std::int64_t value);
    std::int64_t get(int from, int to) const;
    int num_agents() const { return n_; }

    Ashg build() const;

private:
    int n_;
    std::vector<std::int64_t> v_;
};

// Partition of 0..num_agents-1 into disjoint triples. Canonical storage:
// members ascending within a triple, triples ascending by first member.
class PartitionIntoTriples {
public:
    PartitionIntoTriples(int num_agents, std::vector<std::array<int, 3>> triples);

    // {0,1,2},{3,4,5},... used as the default seed everywhere.
    static PartitionIntoTriples ascending(int num_agents);

    int num_agents() const { return n_; }
    int num_triples() const { return static_cast<int>(triples_.size()); }
    const std::vector<std::array<int, 3>>& triples() const { return triples_; }

    const std::array<int, 3>& triple_of(int agent) const;
    int triple_index_of(int agent) const;
    // The two agents sharing agent's triple.
    std::array<int, 2> others_of(int agent) const;
    bool same_triple(int a, int b) const;

    // Exchanges the triples of two agents; both must exist.
    PartitionIntoTriples with_swapped(int a, int b) const;

    bool operator==(const PartitionIntoTriples&) const = default;

private:
    int n_;
    std::vector<std::array<int, 3>> triples_;
    std::vector<int> owner_;
};

enum class EnvyKind { none, plain, weakly_justified, justified };

enum class Concept { ef, wjef, jef, stable };

const char* to_string(EnvyKind kind);
const char* to_string(Concept concept_kind);
std::optional<Concept> concept_from_string(const std::string& name);

struct EnvyWitness {
    int envier;
    int envied;
    EnvyKind kind;

    auto operator<=>(const EnvyWitness&) const = default;
};

enum class OutcomeTag { partition, none_exists, unknown };

// Result of a search for a concept-clean partition. tag == partition iff a
// partition is present; tag == none_exists carries a non-empty certificate.
struct SolveOutcome {
    OutcomeTag tag;
    std::optional<PartitionIntoTriples> partition;
    std::string certificate;

    static SolveOutcome found(PartitionIntoTriples pi);
    static SolveOutcome none(std::string certificate);
    static SolveOutcome not_known();
};

// Sum of agent's valuations over coalition members; own membership adds 0.
std::int64_t utility(const Ashg& game, int agent, std::span<const int> coalition);

// u_i(pi) = utility of agent within its own triple.
std::int64_t utility_in(const Ashg& game, const PartitionIntoTriples& pi, int agent);

// Number of triples of pi containing at least one agent of the set.
int sigma(const PartitionIntoTriples& pi, std::span<const int> agents);

// Strongest envy kind of envier toward envied; same triple yields none.
EnvyKind classify_envy(const Ashg& game, const PartitionIntoTriples& pi,
                       int envier, int envied);

// All cross-triple witness pairs at or above the concept's threshold
// (ef: plain and stronger, wjef: weakly justified and stronger,
// jef: justified only), ascending by (envier, envied).
std::vector<EnvyWitness> find_violations(const Ashg& game,
                                         const PartitionIntoTriples& pi,
                                         Concept which);

// True iff every member strictly prefers the triple to its pi-coalition.
// A triple already in pi never blocks.
bool blocks(const Ashg& game, const PartitionIntoTriples& pi,
            std::array<int, 3> triple);

// Exhaustive scan over all agent triples.
bool is_stable(const Ashg& game, const PartitionIntoTriples& pi);

enum class SwapVariant { strict_swap, swap, swap_tu };

// True iff no cross-triple pair can swap with the variant's improvement:
// strict_swap both strict, swap one strict one weak, swap_tu sum strict.
bool swap_stability_check(const Ashg& game, const PartitionIntoTriples& pi,
                          SwapVariant variant);

}  // namespace triples
