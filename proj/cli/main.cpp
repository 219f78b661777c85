#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "triples/game.hpp"
#include "triples/generators.hpp"
#include "triples/io.hpp"
#include "triples/oracle.hpp"
#include "triples/reductions.hpp"
#include "triples/solver_ef.hpp"
#include "triples/solver_jef.hpp"
#include "triples/solver_wjef.hpp"
#include "triples/structure.hpp"

namespace {

using namespace triples;

constexpr int kExitSolved = 0;
constexpr int kExitUnsatisfied = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return in;
}

Ashg load_instance(const std::string& path) {
    auto in = open_input(path);
    return parse_instance(in);
}

PartitionIntoTriples load_partition(const std::string& path) {
    auto in = open_input(path);
    return parse_partition(in);
}

X3SatFormula load_formula(const std::string& path) {
    auto in = open_input(path);
    return parse_formula(in);
}

AnyGraph load_graph(const std::string& path) {
    auto in = open_input(path);
    return parse_graph(in);
}

// Empty path means stdout.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
}

int resolve_cap() {
    const char* env = std::getenv("TRIPLES_ORACLE_CAP");
    if (env == nullptr || *env == '\0') return kOracleCapAgents;
    const std::string text(env);
    int cap = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc() || ptr != text.data() + text.size() || cap < 3) {
        throw std::invalid_argument(
            "TRIPLES_ORACLE_CAP must be an integer of at least 3, got '" + text + "'");
    }
    return cap;
}

void require_within_cap(int num_agents, int cap) {
    if (num_agents <= cap) return;
    const long double estimate = count_partitions_estimate(num_agents / 3);
    char magnitude[64];
    if (std::isinf(estimate)) {
        std::snprintf(magnitude, sizeof magnitude, "more than 1e4900");
    } else {
        std::snprintf(magnitude, sizeof magnitude, "about %.3Lg", estimate);
    }
    throw std::invalid_argument("instance has " + std::to_string(num_agents) +
                                " agents, above the oracle cap of " + std::to_string(cap) +
                                " (" + magnitude + " partitions)");
}

Concept concept_or_throw(const std::string& name) {
    const auto which = concept_from_string(name);
    if (!which) throw std::invalid_argument("unknown concept '" + name + "'");
    return *which;
}

// Defense in depth: nothing is announced as SAT without an in-process recheck.
void verify_before_print(const Ashg& game, const PartitionIntoTriples& pi, Concept which) {
    if (which == Concept::stable) {
        if (!is_stable(game, pi)) {
            throw std::logic_error("solver returned a partition with a blocking triple");
        }
        return;
    }
    if (!find_violations(game, pi, which).empty()) {
        throw std::logic_error("solver returned a partition with violations");
    }
}

int print_outcome(const Ashg& game, Concept which, const SolveOutcome& outcome,
                  const std::string& out_path) {
    switch (outcome.tag) {
        case OutcomeTag::partition: {
            verify_before_print(game, *outcome.partition, which);
            std::cout << "SAT\n";
            emit(serialize_partition(*outcome.partition), out_path);
            return kExitSolved;
        }
        case OutcomeTag::none_exists:
            std::cout << "UNSAT " << outcome.certificate << "\n";
            return kExitUnsatisfied;
        case OutcomeTag::unknown:
            std::cout << "UNKNOWN\n";
            return kExitBudget;
    }
    throw std::logic_error("unhandled outcome tag");
}

int run_check(const std::string& instance_path, const std::string& partition_path,
              const std::string& concept_name) {
    const Ashg game = load_instance(instance_path);
    const PartitionIntoTriples pi = load_partition(partition_path);
    if (pi.num_agents() != game.num_agents()) {
        throw std::invalid_argument("partition covers " + std::to_string(pi.num_agents()) +
                                    " agents but the instance has " +
                                    std::to_string(game.num_agents()));
    }
    const auto witnesses = find_violations(game, pi, concept_or_throw(concept_name));
    if (witnesses.empty()) {
        std::cout << "OK\n";
        return kExitSolved;
    }
    for (const EnvyWitness& w : witnesses) {
        std::cout << "ENVY " << to_string(w.kind) << " " << (w.envier + 1) << " -> "
                  << (w.envied + 1) << "\n";
    }
    return kExitUnsatisfied;
}

struct SolveArgs {
    std::string instance_path;
    std::string concept_name;
    std::string method = "auto";
    std::int64_t budget = JefSearchOptions{}.budget;
    int threads = 1;
    std::string out_path;
    bool trace = false;
};

bool maxdeg2_solver_applies(const Ashg& game) {
    return game.is_binary() && game.is_symmetric() &&
           underlying_graph(game).max_degree() <= 2;
}

int run_solve(const SolveArgs& args) {
    const Ashg game = load_instance(args.instance_path);
    const Concept which = concept_or_throw(args.concept_name);
    const int cap = resolve_cap();

    const auto brute = [&] {
        require_within_cap(game.num_agents(), cap);
        BruteForceOptions options;
        options.cap_agents = cap;
        options.num_threads = args.threads;
        return brute_force(game, which, options);
    };
    const auto swap_dynamics = [&] {
        SwapDynamicsResult result = solve_jef_binary(game);
        if (args.trace) {
            for (const SwapStep& step : result.trace) {
                std::cerr << format_swap_step(step) << "\n";
            }
        }
        return SolveOutcome::found(std::move(result.partition));
    };

    SolveOutcome outcome = SolveOutcome::not_known();
    if (args.method == "poly") {
        if (which == Concept::ef) {
            outcome = solve_ef_maxdeg2(game);
        } else if (which == Concept::wjef) {
            outcome = solve_wjef_maxdeg2(game);
        } else {
            throw std::invalid_argument(
                "method poly applies to concepts ef and wjef; use swap for jef on binary "
                "instances");
        }
    } else if (args.method == "swap") {
        if (which != Concept::jef) {
            throw std::invalid_argument("method swap applies to concept jef only");
        }
        if (!game.is_binary()) {
            throw std::invalid_argument("swap dynamics require a binary instance");
        }
        outcome = swap_dynamics();
    } else if (args.method == "brute") {
        outcome = brute();
    } else {
        if ((which == Concept::ef || which == Concept::wjef) && maxdeg2_solver_applies(game)) {
            outcome = which == Concept::ef ? solve_ef_maxdeg2(game) : solve_wjef_maxdeg2(game);
        } else if (which == Concept::jef) {
            outcome = game.is_binary() ? swap_dynamics()
                                       : solve_jef_general(game, JefSearchOptions{args.budget});
        } else if (game.num_agents() <= cap) {
            outcome = brute();
        } else {
            std::cerr << "note: " << game.num_agents() << " agents exceed the oracle cap of "
                      << cap << " and no polynomial solver applies\n";
        }
    }
    return print_outcome(game, which, outcome, args.out_path);
}

struct GenerateArgs {
    std::string family;
    int k = 2;
    int agents = 30;
    double density = 0.2;
    std::uint64_t seed = 1;
    std::string out_path;
};

int run_generate(const GenerateArgs& args) {
    const Ashg game = [&] {
        if (args.family == "wj-no") return make_wj_no_instance(args.k);
        if (args.family == "paths-cycles") return generate_paths_cycles(args.agents, args.seed);
        if (args.family == "random-binary") {
            return generate_random_binary(args.agents, args.density, args.seed);
        }
        if (args.family == "random-binary-symmetric") {
            return generate_random_binary_symmetric(args.agents, args.density, args.seed);
        }
        throw std::invalid_argument("unknown family '" + args.family + "'");
    }();
    emit(serialize_instance(game), args.out_path);
    return kExitSolved;
}

struct ReduceArgs {
    std::string from;
    std::string input_path;
    std::string out_path;
    std::string map_path;
};

int run_reduce(const ReduceArgs& args) {
    const NamedInstance named = [&]() -> NamedInstance {
        if (args.from == "x3sat-ef") return reduce_x3sat_to_ef(load_formula(args.input_path));
        if (args.from == "x3sat-wjef") {
            return reduce_x3sat_to_wjef(load_formula(args.input_path)).instance;
        }
        if (args.from == "dtc-jef") {
            AnyGraph graph = load_graph(args.input_path);
            const auto* digraph = std::get_if<Digraph>(&graph);
            if (!digraph) throw std::invalid_argument("dtc-jef expects a directed graph");
            return reduce_dtc_to_jef_ternary(*digraph);
        }
        if (args.from == "pit-jef") {
            AnyGraph graph = load_graph(args.input_path);
            const auto* undirected = std::get_if<UndirectedGraph>(&graph);
            if (!undirected) throw std::invalid_argument("pit-jef expects an undirected graph");
            return reduce_pit_to_jef_symmetric(*undirected);
        }
        throw std::invalid_argument("unknown reduction '" + args.from + "'");
    }();
    emit(serialize_instance(named.game), args.out_path);
    std::string map_path = args.map_path;
    if (map_path.empty() && !args.out_path.empty()) map_path = args.out_path + ".map";
    if (map_path.empty()) {
        std::cerr << "note: name map suppressed (instance on stdout and no --map)\n";
    } else {
        emit(serialize_name_map(named.names), map_path);
    }
    return kExitSolved;
}

struct OracleArgs {
    std::string instance_path;
    std::string concept_name;
    int threads = 1;
};

int run_oracle(const OracleArgs& args) {
    const Ashg game = load_instance(args.instance_path);
    const Concept which = concept_or_throw(args.concept_name);
    const int cap = resolve_cap();
    require_within_cap(game.num_agents(), cap);
    BruteForceOptions options;
    options.cap_agents = cap;
    options.num_threads = args.threads;
    if (game.num_agents() >= 15) {
        options.progress = [](std::int64_t nodes) {
            std::cerr << "progress: " << nodes << " candidate triples examined\n";
        };
    }
    return print_outcome(game, which, brute_force(game, which, options), "");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Coalition formation into triples: envy checkers, constructive solvers, instance "
        "generators, hardness-gadget reductions, and a brute-force oracle"};
    app.require_subcommand(1);

    std::string check_instance;
    std::string check_partition;
    std::string check_concept = "ef";
    auto* check = app.add_subcommand("check", "Report envy violations of a partition");
    check->add_option("instance", check_instance, "Instance file")->required();
    check->add_option("partition", check_partition, "Partition file")->required();
    check->add_option("--concept", check_concept, "Envy concept to check")
        ->check(CLI::IsMember({"ef", "wjef", "jef"}));

    SolveArgs solve_args;
    auto* solve =
        app.add_subcommand("solve", "Find a concept-clean partition or certify none exists");
    solve->add_option("instance", solve_args.instance_path, "Instance file")->required();
    solve->add_option("--concept", solve_args.concept_name, "Solution concept")
        ->required()
        ->check(CLI::IsMember({"ef", "wjef", "jef", "stable"}));
    solve->add_option("--method", solve_args.method, "Solver selection")
        ->check(CLI::IsMember({"auto", "poly", "swap", "brute"}));
    solve->add_option("--budget", solve_args.budget,
                      "Candidate-triple budget for the non-binary jef search");
    solve->add_option("--threads", solve_args.threads, "Brute-force worker threads")
        ->check(CLI::Range(1, 64));
    solve->add_option("--out", solve_args.out_path, "Write the partition here, not stdout");
    solve->add_flag("--trace", solve_args.trace, "Print the swap dynamics trace to stderr");

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "Emit an instance from a named family");
    generate->add_option("--family", generate_args.family, "Instance family")
        ->required()
        ->check(CLI::IsMember(
            {"wj-no", "paths-cycles", "random-binary", "random-binary-symmetric"}));
    generate->add_option("--k", generate_args.k, "Number of 4-cycles for wj-no");
    generate->add_option("--agents", generate_args.agents, "Agent count");
    generate->add_option("--density", generate_args.density, "Edge probability");
    generate->add_option("--seed", generate_args.seed, "Deterministic seed");
    generate->add_option("--out", generate_args.out_path, "Write the instance here, not stdout");

    ReduceArgs reduce_args;
    auto* reduce =
        app.add_subcommand("reduce", "Build the hardness-gadget instance for an input problem");
    reduce->add_option("--from", reduce_args.from, "Source problem and target concept")
        ->required()
        ->check(CLI::IsMember({"x3sat-ef", "x3sat-wjef", "dtc-jef", "pit-jef"}));
    reduce->add_option("input", reduce_args.input_path, "Formula or graph file")->required();
    reduce->add_option("--out", reduce_args.out_path, "Write the instance here, not stdout");
    reduce->add_option("--map", reduce_args.map_path,
                       "Name-map path (default: <out>.map when --out is given)");

    OracleArgs oracle_args;
    auto* oracle =
        app.add_subcommand("oracle", "Exhaustive ground-truth verdict within the agent cap");
    oracle->add_option("instance", oracle_args.instance_path, "Instance file")->required();
    oracle->add_option("--concept", oracle_args.concept_name, "Solution concept")
        ->required()
        ->check(CLI::IsMember({"ef", "wjef", "jef", "stable"}));
    oracle->add_option("--threads", oracle_args.threads, "Worker threads")
        ->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(check_instance, check_partition, check_concept);
        if (solve->parsed()) return run_solve(solve_args);
        if (generate->parsed()) return run_generate(generate_args);
        if (reduce->parsed()) return run_reduce(reduce_args);
        if (oracle->parsed()) return run_oracle(oracle_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return kExitUsage;
}
