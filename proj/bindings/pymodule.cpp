// Python bindings for the main operations: build or parse an instance,
// classify envy, check and solve partitions, and consult the oracle.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "triples/game.hpp"
#include "triples/generators.hpp"
#include "triples/io.hpp"
#include "triples/oracle.hpp"
#include "triples/solver_ef.hpp"
#include "triples/solver_jef.hpp"
#include "triples/solver_wjef.hpp"

namespace py = pybind11;
using namespace triples;

namespace {

using PyTriples = std::vector<std::array<int, 3>>;

Concept concept_or_throw(const std::string& name) {
    const auto which = concept_from_string(name);
    if (!which) throw std::invalid_argument("unknown concept '" + name + "'");
    return *which;
}

PartitionIntoTriples to_partition(const Ashg& game, const PyTriples& triples) {
    return PartitionIntoTriples(game.num_agents(), triples);
}

PyTriples from_partition(const PartitionIntoTriples& pi) {
    return {pi.triples().begin(), pi.triples().end()};
}

py::dict outcome_to_dict(const SolveOutcome& outcome) {
    py::dict out;
    switch (outcome.tag) {
        case OutcomeTag::partition:
            out["status"] = "sat";
            out["partition"] = from_partition(*outcome.partition);
            break;
        case OutcomeTag::none_exists:
            out["status"] = "unsat";
            out["certificate"] = outcome.certificate;
            break;
        case OutcomeTag::unknown:
            out["status"] = "unknown";
            break;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(ashg_triples, m) {
    m.doc() =
        "Additively separable hedonic games partitioned into triples: envy "
        "checkers, constructive solvers, and a brute-force oracle";

    py::class_<Ashg>(m, "Game")
        .def_static(
            "from_values",
            [](int num_agents, const std::vector<std::tuple<int, int, std::int64_t>>& values) {
                AshgBuilder builder(num_agents);
                for (const auto& [from, to, value] : values) builder.set(from, to, value);
                return builder.build();
            },
            py::arg("num_agents"), py::arg("values"),
            "Build a game from (from, to, value) entries; agents are 0-indexed")
        .def_static(
            "parse", [](const std::string& text) { return parse_instance_text(text); },
            py::arg("text"), "Parse the 'ashg' text format (1-indexed agents)")
        .def_property_readonly("num_agents", &Ashg::num_agents)
        .def("value", &Ashg::value, py::arg("from_agent"), py::arg("to_agent"))
        .def("is_binary", &Ashg::is_binary)
        .def("is_symmetric", &Ashg::is_symmetric)
        .def("serialize", [](const Ashg& game) { return serialize_instance(game); })
        .def("__repr__", [](const Ashg& game) {
            std::ostringstream out;
            out << "Game(num_agents=" << game.num_agents() << ")";
            return out.str();
        });

    m.def(
        "classify_envy",
        [](const Ashg& game, const PyTriples& pi, int envier, int envied) {
            return std::string(
                to_string(classify_envy(game, to_partition(game, pi), envier, envied)));
        },
        py::arg("game"), py::arg("partition"), py::arg("envier"), py::arg("envied"),
        "Strongest envy kind between two agents: none, plain, weakly_justified, justified");

    m.def(
        "find_violations",
        [](const Ashg& game, const PyTriples& pi, const std::string& concept_name) {
            std::vector<std::tuple<int, int, std::string>> out;
            for (const EnvyWitness& w : find_violations(game, to_partition(game, pi),
                                                        concept_or_throw(concept_name))) {
                out.emplace_back(w.envier, w.envied, to_string(w.kind));
            }
            return out;
        },
        py::arg("game"), py::arg("partition"), py::arg("concept"),
        "All (envier, envied, kind) witnesses at or above the concept's threshold");

    m.def(
        "utility",
        [](const Ashg& game, const PyTriples& pi, int agent) {
            return utility_in(game, to_partition(game, pi), agent);
        },
        py::arg("game"), py::arg("partition"), py::arg("agent"),
        "Sum of the agent's valuations over its own triple");

    m.def(
        "is_stable",
        [](const Ashg& game, const PyTriples& pi) {
            return is_stable(game, to_partition(game, pi));
        },
        py::arg("game"), py::arg("partition"), "True iff no triple blocks the partition");

    m.def(
        "solve",
        [](const Ashg& game, const std::string& concept_name) {
            const Concept which = concept_or_throw(concept_name);
            switch (which) {
                case Concept::ef: return outcome_to_dict(solve_ef_maxdeg2(game));
                case Concept::wjef: return outcome_to_dict(solve_wjef_maxdeg2(game));
                case Concept::jef:
                    if (game.is_binary()) {
                        return outcome_to_dict(
                            SolveOutcome::found(solve_jef_binary(game).partition));
                    }
                    return outcome_to_dict(solve_jef_general(game));
                case Concept::stable: break;
            }
            throw std::invalid_argument("solve supports concepts ef, wjef, and jef");
        },
        py::arg("game"), py::arg("concept"),
        "Constructive solver; returns {'status': 'sat'|'unsat'|'unknown', ...}");

    m.def(
        "swap_dynamics",
        [](const Ashg& game) {
            const SwapDynamicsResult result = solve_jef_binary(game);
            py::dict out;
            out["partition"] = from_partition(result.partition);
            std::vector<std::string> trace;
            trace.reserve(result.trace.size());
            for (const SwapStep& step : result.trace) trace.push_back(format_swap_step(step));
            out["trace"] = trace;
            return out;
        },
        py::arg("game"),
        "Run the binary swap dynamics; returns the final partition and the trace lines");

    m.def(
        "oracle",
        [](const Ashg& game, const std::string& concept_name, int threads) {
            BruteForceOptions options;
            options.num_threads = threads;
            return outcome_to_dict(
                brute_force(game, concept_or_throw(concept_name), options));
        },
        py::arg("game"), py::arg("concept"), py::arg("threads") = 1,
        "Exhaustive ground truth over every partition, capped at 18 agents");

    m.def("generate_paths_cycles", &generate_paths_cycles, py::arg("num_agents"),
          py::arg("seed"), "Random binary symmetric instance of maximum degree 2");
    m.def("generate_random_binary", &generate_random_binary, py::arg("num_agents"),
          py::arg("density"), py::arg("seed"));
    m.def("wj_no_instance", &make_wj_no_instance, py::arg("k"),
          "k four-cycles plus an isolated agent: no weakly-justified-envy-free partition");
}
