#include "triples/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace triples {

namespace {

std::string ext(int x) {
    return std::to_string(x + 1);
}

void require_clean(const Ashg& game, const PartitionIntoTriples& pi, Concept which,
                   const char* what) {
    if (!find_violations(game, pi, which).empty()) {
        throw std::invalid_argument(std::string("partition is not ") + what);
    }
}

// Clause variables in ascending order; position p attaches to part p+1.
std::array<int, 3> sorted_clause(const X3SatFormula& formula, int clause) {
    auto vars = formula.clauses[clause];
    std::sort(vars.begin(), vars.end());
    return vars;
}

void check_vertices(int num_vertices, int a, int b, const char* kind) {
    if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices) {
        throw std::invalid_argument(std::string(kind) + " (" + ext(a) + "," + ext(b) +
                                    ") leaves the vertex range");
    }
    if (a == b) {
        throw std::invalid_argument(std::string(kind) + " (" + ext(a) + "," + ext(b) +
                                    ") is a self-loop");
    }
}

}  // namespace

X3SatFormula::X3SatFormula(int num_vars_in, std::vector<std::array<int, 3>> clauses_in)
    : num_vars(num_vars_in), clauses(std::move(clauses_in)) {
    if (num_vars < 1) {
        throw std::invalid_argument("formula needs at least one variable");
    }
    if (static_cast<int>(clauses.size()) != num_vars) {
        throw std::invalid_argument(
            "three occurrences per variable force #clauses == #variables; got " +
            std::to_string(clauses.size()) + " clauses for " + std::to_string(num_vars) +
            " variables");
    }
    std::vector<int> occurrences(num_vars, 0);
    for (std::size_t r = 0; r < clauses.size(); ++r) {
        auto c = clauses[r];
        std::sort(c.begin(), c.end());
        if (c[0] == c[1] || c[1] == c[2]) {
            throw std::invalid_argument("clause " + std::to_string(r + 1) +
                                        " repeats variable " + ext(c[1]));
        }
        for (int v : c) {
            if (v < 0 || v >= num_vars) {
                throw std::invalid_argument("clause " + std::to_string(r + 1) +
                                            " uses unknown variable " + ext(v));
            }
            ++occurrences[v];
        }
    }
    for (int v = 0; v < num_vars; ++v) {
        if (occurrences[v] != 3) {
            throw std::invalid_argument("variable " + ext(v) + " occurs " +
                                        std::to_string(occurrences[v]) +
                                        " times, expected exactly 3");
        }
    }
}

bool is_exact_model(const X3SatFormula& formula, const std::vector<bool>& model) {
    if (model.size() != static_cast<std::size_t>(formula.num_vars)) return false;
    for (const auto& clause : formula.clauses) {
        int trues = 0;
        for (int v : clause) trues += model[v] ? 1 : 0;
        if (trues != 1) return false;
    }
    return true;
}

OccurrenceIndex::OccurrenceIndex(const X3SatFormula& formula) {
    clauses_of_var.assign(formula.num_vars, {-1, -1, -1});
    std::vector<int> filled(formula.num_vars, 0);
    for (int r = 0; r < static_cast<int>(formula.clauses.size()); ++r) {
        for (int v : formula.clauses[r]) {
            clauses_of_var[v][filled[v]++] = r;
        }
    }
}

int OccurrenceIndex::ordinal(int var, int clause) const {
    const auto& cs = clauses_of_var[var];
    for (int u = 0; u < 3; ++u) {
        if (cs[u] == clause) return u + 1;
    }
    throw std::invalid_argument("variable " + ext(var) + " does not occur in clause " +
                                std::to_string(clause + 1));
}

Digraph::Digraph(int num_vertices_in, std::vector<std::pair<int, int>> arcs_in)
    : num_vertices(num_vertices_in), arcs(std::move(arcs_in)) {
    if (num_vertices < 3 || num_vertices % 3 != 0) {
        throw std::invalid_argument("vertex count must be a positive multiple of 3, got " +
                                    std::to_string(num_vertices));
    }
    auto sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        check_vertices(num_vertices, sorted[i].first, sorted[i].second, "arc");
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw std::invalid_argument("arc (" + ext(sorted[i].first) + "," +
                                        ext(sorted[i].second) + ") listed twice");
        }
    }
}

bool Digraph::has_arc(int from, int to) const {
    return std::find(arcs.begin(), arcs.end(), std::make_pair(from, to)) != arcs.end();
}

UndirectedGraph::UndirectedGraph(int num_vertices_in, std::vector<std::pair<int, int>> edges_in)
    : num_vertices(num_vertices_in), edges(std::move(edges_in)) {
    if (num_vertices < 3 || num_vertices % 3 != 0) {
        throw std::invalid_argument("vertex count must be a positive multiple of 3, got " +
                                    std::to_string(num_vertices));
    }
    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(edges.size());
    for (auto [a, b] : edges) {
        check_vertices(num_vertices, a, b, "edge");
        sorted.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            throw std::invalid_argument("edge (" + ext(sorted[i].first) + "," +
                                        ext(sorted[i].second) + ") listed twice");
        }
    }
}

bool UndirectedGraph::has_edge(int a, int b) const {
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end() ||
           std::find(edges.begin(), edges.end(), std::make_pair(b, a)) != edges.end();
}

// ---------------------------------------------------------------------------
// exact cover -> envy-free

namespace {

// Variable copies first (3 per variable), then clause blocks of 8.
int w_agent_ef(int var, int copy) {
    return 3 * var + copy;
}
int d_agent_ef(int num_vars, int clause, int part) {
    return 3 * num_vars + 8 * clause + part;
}

}  // namespace

NamedInstance reduce_x3sat_to_ef(const X3SatFormula& formula) {
    const int m = formula.num_vars;
    // 11m agents split into triples only when 3 | m. A formula with 3 not
    // dividing m is never exactly satisfiable anyway: each true variable
    // satisfies its three occurrences, so m = 3 * (number of true variables).
    if (m % 3 != 0) {
        throw std::invalid_argument("clause count " + std::to_string(m) +
                                    " is not divisible by 3, so the formula has no "
                                    "exact model and the gadget game has no "
                                    "partition into triples");
    }
    const OccurrenceIndex occ(formula);
    AshgBuilder b(11 * m);
    std::vector<std::string> names(11 * m);

    for (int v = 0; v < m; ++v) {
        for (int a = 0; a < 3; ++a) names[w_agent_ef(v, a)] = "w" + ext(v) + "." + ext(a);
        b.set_symmetric(w_agent_ef(v, 0), w_agent_ef(v, 1), 1);
        b.set_symmetric(w_agent_ef(v, 0), w_agent_ef(v, 2), 1);
        b.set_symmetric(w_agent_ef(v, 1), w_agent_ef(v, 2), 1);
    }
    // Internal edges of a clause block, 0-based parts.
    static constexpr std::array<std::pair<int, int>, 9> kBlockEdges{{{0, 3},
                                                                     {1, 4},
                                                                     {2, 7},
                                                                     {3, 5},
                                                                     {3, 6},
                                                                     {4, 5},
                                                                     {4, 6},
                                                                     {7, 5},
                                                                     {7, 6}}};
    for (int r = 0; r < m; ++r) {
        for (int a = 0; a < 8; ++a) names[d_agent_ef(m, r, a)] = "d" + ext(r) + "." + ext(a);
        for (auto [x, y] : kBlockEdges) {
            b.set_symmetric(d_agent_ef(m, r, x), d_agent_ef(m, r, y), 1);
        }
        const auto vars = sorted_clause(formula, r);
        for (int p = 0; p < 3; ++p) {
            const int copy = occ.ordinal(vars[p], r) - 1;
            b.set_symmetric(d_agent_ef(m, r, p), w_agent_ef(vars[p], copy), 1);
        }
    }

    NamedInstance out{b.build(), std::move(names)};
    if (!out.game.is_binary() || !out.game.is_symmetric()) {
        throw std::logic_error("reduced game lost the binary symmetric shape");
    }
    return out;
}

PartitionIntoTriples ef_partition_from_exact_model(const X3SatFormula& formula,
                                                   const std::vector<bool>& model) {
    if (!is_exact_model(formula, model)) {
        throw std::invalid_argument("assignment is not an exact model: some clause does not "
                                    "have exactly one true variable");
    }
    const int m = formula.num_vars;
    const OccurrenceIndex occ(formula);
    std::vector<std::array<int, 3>> ts;
    ts.reserve(11 * m / 3);

    for (int v = 0; v < m; ++v) {
        if (!model[v]) {
            ts.push_back({w_agent_ef(v, 0), w_agent_ef(v, 1), w_agent_ef(v, 2)});
        }
    }
    for (int r = 0; r < m; ++r) {
        const auto vars = sorted_clause(formula, r);
        int pos = -1;
        for (int p = 0; p < 3; ++p) {
            if (model[vars[p]]) pos = p;
        }
        const int copy = occ.ordinal(vars[pos], r) - 1;
        const int w = w_agent_ef(vars[pos], copy);
        auto d = [&](int part) { return d_agent_ef(m, r, part - 1); };
        switch (pos) {
            case 0:
                ts.push_back({w, d(1), d(4)});
                ts.push_back({d(2), d(5), d(7)});
                ts.push_back({d(3), d(6), d(8)});
                break;
            case 1:
                ts.push_back({w, d(2), d(5)});
                ts.push_back({d(1), d(4), d(6)});
                ts.push_back({d(3), d(7), d(8)});
                break;
            default:
                ts.push_back({w, d(3), d(8)});
                ts.push_back({d(1), d(4), d(6)});
                ts.push_back({d(2), d(5), d(7)});
                break;
        }
    }
    return PartitionIntoTriples(11 * m, std::move(ts));
}

std::vector<bool> exact_model_from_ef_partition(const X3SatFormula& formula,
                                                const Ashg& game,
                                                const PartitionIntoTriples& pi) {
    require_clean(game, pi, Concept::ef, "envy-free");
    const int m = formula.num_vars;
    if (game.num_agents() != 11 * m || pi.num_agents() != 11 * m) {
        throw std::invalid_argument("agent count does not match the reduction layout");
    }
    std::vector<bool> model(m, false);
    for (int v = 0; v < m; ++v) {
        const std::array<int, 3> triangle{w_agent_ef(v, 0), w_agent_ef(v, 1),
                                          w_agent_ef(v, 2)};
        const int spread = sigma(pi, triangle);
        if (spread == 3) {
            model[v] = true;
        } else if (spread != 1) {
            throw std::invalid_argument("variable triangle " + ext(v) +
                                        " is split over two triples");
        }
    }
    if (!is_exact_model(formula, model)) {
        throw std::invalid_argument("partition does not encode an exact model");
    }
    return model;
}

// ---------------------------------------------------------------------------
// exact cover -> weakly justified envy-free

namespace {

int w_agent_wj(int var, int copy) {
    return 3 * var + copy;
}
int d_agent_wj(int num_vars, int clause, int part) {
    return 3 * num_vars + 4 * clause + part;
}
int g_agent_wj(int num_vars, int index) {
    return 7 * num_vars + index;
}

// Disjoint copies of the formula, exactly satisfiable iff the original is.
X3SatFormula replicate(const X3SatFormula& formula, int copies) {
    const int m = formula.num_vars;
    std::vector<std::array<int, 3>> clauses;
    clauses.reserve(copies * formula.clauses.size());
    for (int copy = 0; copy < copies; ++copy) {
        for (const auto& clause : formula.clauses) {
            clauses.push_back({clause[0] + copy * m, clause[1] + copy * m,
                               clause[2] + copy * m});
        }
    }
    return X3SatFormula(copies * m, std::move(clauses));
}

}  // namespace

WjefReduction reduce_x3sat_to_wjef(const X3SatFormula& formula, bool strict) {
    // The construction needs m = 4l clauses AND 3 | l, else the 40l agents
    // cannot split into triples at all; together that is 12 | m.
    const int m_in = static_cast<int>(formula.clauses.size());
    const int copies = 12 / std::gcd(m_in, 12);
    if (copies != 1 && strict) {
        throw std::invalid_argument("clause count " + std::to_string(m_in) +
                                    " is not divisible by 12");
    }
    X3SatFormula reduced = copies != 1 ? replicate(formula, copies) : formula;

    const int m = reduced.num_vars;
    const int ell = m / 4;
    const OccurrenceIndex occ(reduced);
    AshgBuilder b(40 * ell);
    std::vector<std::string> names(40 * ell);

    for (int v = 0; v < m; ++v) {
        for (int a = 0; a < 3; ++a) names[w_agent_wj(v, a)] = "w" + ext(v) + "." + ext(a);
        b.set_symmetric(w_agent_wj(v, 0), w_agent_wj(v, 1), 1);
        b.set_symmetric(w_agent_wj(v, 0), w_agent_wj(v, 2), 1);
        b.set_symmetric(w_agent_wj(v, 1), w_agent_wj(v, 2), 1);
    }
    for (int r = 0; r < m; ++r) {
        for (int a = 0; a < 4; ++a) names[d_agent_wj(m, r, a)] = "d" + ext(r) + "." + ext(a);
        for (int p = 0; p < 3; ++p) {
            b.set_symmetric(d_agent_wj(m, r, p), d_agent_wj(m, r, 3), 1);
        }
        const auto vars = sorted_clause(reduced, r);
        for (int p = 0; p < 3; ++p) {
            const int copy = occ.ordinal(vars[p], r) - 1;
            b.set_symmetric(d_agent_wj(m, r, p), w_agent_wj(vars[p], copy), 1);
        }
    }
    for (int i = 0; i < 12 * ell; ++i) names[g_agent_wj(m, i)] = "g" + ext(i);
    for (int star = 0; star < 3 * ell; ++star) {
        const int hub = g_agent_wj(m, 4 * star + 3);
        for (int leaf = 0; leaf < 3; ++leaf) {
            b.set_symmetric(hub, g_agent_wj(m, 4 * star + leaf), 1);
        }
    }

    NamedInstance inst{b.build(), std::move(names)};
    if (!inst.game.is_binary() || !inst.game.is_symmetric()) {
        throw std::logic_error("reduced game lost the binary symmetric shape");
    }
    return WjefReduction{std::move(inst), std::move(reduced), copies != 1};
}

PartitionIntoTriples wjef_partition_from_exact_model(const X3SatFormula& formula,
                                                     const std::vector<bool>& model) {
    if (formula.clauses.size() % 12 != 0) {
        throw std::invalid_argument("clause count must be divisible by 12");
    }
    if (!is_exact_model(formula, model)) {
        throw std::invalid_argument("assignment is not an exact model: some clause does not "
                                    "have exactly one true variable");
    }
    const int m = formula.num_vars;
    const OccurrenceIndex occ(formula);
    std::vector<std::array<int, 3>> ts;
    ts.reserve(40 * (m / 4) / 3);

    // True variables keep their triangle whole.
    for (int v = 0; v < m; ++v) {
        if (model[v]) {
            ts.push_back({w_agent_wj(v, 0), w_agent_wj(v, 1), w_agent_wj(v, 2)});
        }
    }
    for (int r = 0; r < m; ++r) {
        const auto vars = sorted_clause(formula, r);
        int pos = -1;
        for (int p = 0; p < 3; ++p) {
            if (model[vars[p]]) pos = p;
        }
        auto d = [&](int part) { return d_agent_wj(m, r, part); };
        auto g = [&](int index) { return g_agent_wj(m, index); };
        // The true position pairs with the hub part; each false position
        // joins its adjacent variable copy. Garbage fills the third seats.
        ts.push_back({d(pos), d(3), g(3 * r + 2)});
        int next_garbage = 3 * r + 1;
        for (int p = 0; p < 3; ++p) {
            if (p == pos) continue;
            const int copy = occ.ordinal(vars[p], r) - 1;
            ts.push_back({d(p), w_agent_wj(vars[p], copy), g(next_garbage--)});
        }
    }
    return PartitionIntoTriples(10 * m, std::move(ts));
}

std::vector<bool> model_from_wjef_partition(const X3SatFormula& formula,
                                            const Ashg& game,
                                            const PartitionIntoTriples& pi) {
    require_clean(game, pi, Concept::wjef, "weakly justified envy-free");
    const int m = formula.num_vars;
    if (game.num_agents() != 10 * m || pi.num_agents() != 10 * m) {
        throw std::invalid_argument("agent count does not match the reduction layout");
    }
    std::vector<bool> model(m, false);
    for (int v = 0; v < m; ++v) {
        const std::array<int, 3> triangle{w_agent_wj(v, 0), w_agent_wj(v, 1),
                                          w_agent_wj(v, 2)};
        const int spread = sigma(pi, triangle);
        if (spread == 1) {
            model[v] = true;
        } else if (spread != 3) {
            throw std::invalid_argument("variable triangle " + ext(v) +
                                        " is split over two triples");
        }
    }
    if (!is_exact_model(formula, model)) {
        throw std::invalid_argument("partition does not encode an exact model");
    }
    return model;
}

// ---------------------------------------------------------------------------
// directed triangle cover -> jEF, ternary

namespace {

constexpr int kDtcH = 5;
constexpr int kDtcL = 4;

int c_agent_dtc(int vertex) {
    return kDtcH + kDtcL + vertex;
}

// Pentagon and near-pair weights among the five hub agents; every ordered
// pair gets a nonzero value (offsets 1 and 4 and 3 give 1, offset 2 gives 2).
void fill_dtc_h(AshgBuilder& b) {
    for (int i = 0; i < kDtcH; ++i) {
        b.set(i, (i + 1) % kDtcH, 1);
        b.set((i + 1) % kDtcH, i, 1);
        b.set(i, (i + 3) % kDtcH, 1);
        b.set(i, (i + 2) % kDtcH, 2);
    }
}

}  // namespace

NamedInstance reduce_dtc_to_jef_ternary(const Digraph& graph) {
    for (auto [a, c] : graph.arcs) {
        if (graph.has_arc(c, a)) {
            throw std::invalid_argument("arcs (" + ext(a) + "," + ext(c) + ") and (" +
                                        ext(c) + "," + ext(a) +
                                        ") are both present; the digraph must be "
                                        "antisymmetric");
        }
    }
    const int q = graph.num_vertices / 3;
    AshgBuilder b(9 + 3 * q);
    std::vector<std::string> names(9 + 3 * q);
    for (int i = 0; i < kDtcH; ++i) names[i] = "h" + ext(i);
    for (int i = 0; i < kDtcL; ++i) names[kDtcH + i] = "l" + ext(i);
    for (int v = 0; v < graph.num_vertices; ++v) names[c_agent_dtc(v)] = "c" + ext(v);

    fill_dtc_h(b);

    const int l1 = kDtcH, l2 = kDtcH + 1, l3 = kDtcH + 2, l4 = kDtcH + 3;
    b.set(l1, l2, 2);
    b.set(l2, l1, 2);
    b.set(l3, l4, 2);
    b.set(l4, l3, 2);
    for (int a : {l1, l2}) {
        for (int z : {l3, l4}) b.set(a, z, 1);
    }
    for (int z : {l3, l4}) {
        for (int a : {l1, l2}) b.set(z, a, 1);
    }

    for (int v = 0; v < graph.num_vertices; ++v) {
        const int c = c_agent_dtc(v);
        // Every agent outside the pentagon values every other such agent at
        // least 1. Without the l1/l2 links a pentagon agent could ride with
        // two vertex agents: in {h4,l1,l2} {h5,c1,c2} {l3,l4,c3} the starved
        // vertex agent next to h5 has no claim on {l1,l2}, and the whole
        // partition ends up justified-envy-free even with no cover.
        b.set(c, l1, 1);
        b.set(l1, c, 1);
        b.set(c, l2, 1);
        b.set(l2, c, 1);
        b.set(c, l3, 1);
        b.set(l3, c, 1);
        b.set(l4, c, 1);
        b.set(c, l4, 2);
        for (int u = 0; u < graph.num_vertices; ++u) {
            if (u == v) continue;
            b.set(c, c_agent_dtc(u), graph.has_arc(v, u) ? 2 : 1);
        }
    }

    NamedInstance out{b.build(), std::move(names)};
    if (!out.game.is_ternary()) {
        throw std::logic_error("reduced game lost the ternary shape");
    }
    return out;
}

NamedInstance dtc_no_instance() {
    AshgBuilder b(6);
    fill_dtc_h(b);
    return {b.build(), {"h1", "h2", "h3", "h4", "h5", "l1"}};
}

// ---------------------------------------------------------------------------
// triangle cover -> jEF, symmetric 0..6

namespace {

constexpr int kPitH = 11;
constexpr int kPitL = 4;

int c_agent_pit(int vertex) {
    return kPitH + kPitL + vertex;
}

// h1 values every other hub at 2; the remaining ten hubs form a ring where
// step-1 and step-2 weights alternate with the 1-based label's parity and
// steps 3, 4, 5 weigh 1, 1, 3.
void fill_pit_h(AshgBuilder& b) {
    for (int i = 1; i < kPitH; ++i) b.set_symmetric(0, i, 2);
    for (int j = 0; j < 10; ++j) {
        const bool even_label = (j + 2) % 2 == 0;
        auto ring = [](int index) { return 1 + (index % 10); };
        b.set_symmetric(ring(j), ring(j + 1), even_label ? 4 : 5);
        b.set_symmetric(ring(j), ring(j + 2), even_label ? 6 : 3);
        b.set_symmetric(ring(j), ring(j + 3), 1);
        b.set_symmetric(ring(j), ring(j + 4), 1);
        b.set_symmetric(ring(j), ring(j + 5), 3);
    }
}

}  // namespace

NamedInstance reduce_pit_to_jef_symmetric(const UndirectedGraph& graph) {
    const int q = graph.num_vertices / 3;
    AshgBuilder b(15 + 3 * q);
    std::vector<std::string> names(15 + 3 * q);
    for (int i = 0; i < kPitH; ++i) names[i] = "h" + ext(i);
    for (int i = 0; i < kPitL; ++i) names[kPitH + i] = "l" + ext(i);
    for (int v = 0; v < graph.num_vertices; ++v) names[c_agent_pit(v)] = "c" + ext(v);

    fill_pit_h(b);

    const int l1 = kPitH, l2 = kPitH + 1, l3 = kPitH + 2, l4 = kPitH + 3;
    b.set_symmetric(l1, l2, 2);
    b.set_symmetric(l3, l4, 2);
    b.set_symmetric(l1, l3, 1);
    b.set_symmetric(l1, l4, 1);
    b.set_symmetric(l2, l3, 1);
    b.set_symmetric(l2, l4, 1);

    for (int v = 0; v < graph.num_vertices; ++v) {
        const int c = c_agent_pit(v);
        for (int r = 0; r < kPitL; ++r) b.set_symmetric(c, kPitH + r, 3);
        for (int u = v + 1; u < graph.num_vertices; ++u) {
            b.set_symmetric(c, c_agent_pit(u), graph.has_edge(v, u) ? 3 : 2);
        }
    }

    NamedInstance out{b.build(), std::move(names)};
    if (!out.game.is_symmetric() || out.game.max_abs_value() > 6) {
        throw std::logic_error("reduced game lost the symmetric 0..6 shape");
    }
    return out;
}

NamedInstance pit_no_instance() {
    AshgBuilder b(12);
    fill_pit_h(b);
    std::vector<std::string> names;
    for (int i = 0; i < kPitH; ++i) names.push_back("h" + ext(i));
    names.push_back("l1");
    return {b.build(), std::move(names)};
}

// ---------------------------------------------------------------------------
// covers <-> partitions

namespace {

void check_cover_shape(int num_vertices, const std::vector<std::array<int, 3>>& cover) {
    if (static_cast<int>(cover.size()) != num_vertices / 3) {
        throw std::invalid_argument("cover must contain exactly " +
                                    std::to_string(num_vertices / 3) + " triples");
    }
    std::vector<bool> seen(num_vertices, false);
    for (const auto& t : cover) {
        for (int v : t) {
            if (v < 0 || v >= num_vertices) {
                throw std::invalid_argument("cover uses unknown vertex " + ext(v));
            }
            if (seen[v]) {
                throw std::invalid_argument("cover lists vertex " + ext(v) + " twice");
            }
            seen[v] = true;
        }
    }
}

bool is_directed_3cycle(const Digraph& graph, const std::array<int, 3>& t) {
    const auto [a, b, c] = t;
    return (graph.has_arc(a, b) && graph.has_arc(b, c) && graph.has_arc(c, a)) ||
           (graph.has_arc(a, c) && graph.has_arc(c, b) && graph.has_arc(b, a));
}

bool is_triangle(const UndirectedGraph& graph, const std::array<int, 3>& t) {
    return graph.has_edge(t[0], t[1]) && graph.has_edge(t[1], t[2]) &&
           graph.has_edge(t[0], t[2]);
}

std::string triple_name(const std::array<int, 3>& t) {
    return "{" + ext(t[0]) + "," + ext(t[1]) + "," + ext(t[2]) + "}";
}

}  // namespace

PartitionIntoTriples jef_partition_from_triangle_cover(
    const Digraph& graph, const std::vector<std::array<int, 3>>& cover, const Ashg& game) {
    check_cover_shape(graph.num_vertices, cover);
    if (game.num_agents() != 9 + graph.num_vertices) {
        throw std::invalid_argument("agent count does not match the reduction layout");
    }
    for (const auto& t : cover) {
        if (!is_directed_3cycle(graph, t)) {
            throw std::invalid_argument("cover triple " + triple_name(t) +
                                        " is not a directed 3-cycle");
        }
    }
    // h1 h2 h3 | h4 l1 l2 | h5 l3 l4 | one triple per covered 3-cycle.
    std::vector<std::array<int, 3>> ts{{0, 1, 2}, {3, 5, 6}, {4, 7, 8}};
    for (const auto& t : cover) {
        ts.push_back({c_agent_dtc(t[0]), c_agent_dtc(t[1]), c_agent_dtc(t[2])});
    }
    return PartitionIntoTriples(game.num_agents(), std::move(ts));
}

PartitionIntoTriples jef_partition_from_triangle_cover(
    const UndirectedGraph& graph, const std::vector<std::array<int, 3>>& cover,
    const Ashg& game) {
    check_cover_shape(graph.num_vertices, cover);
    if (game.num_agents() != 15 + graph.num_vertices) {
        throw std::invalid_argument("agent count does not match the reduction layout");
    }
    for (const auto& t : cover) {
        if (!is_triangle(graph, t)) {
            throw std::invalid_argument("cover triple " + triple_name(t) +
                                        " is not a triangle");
        }
    }
    // h2 h10 h11 | h5 h6 h8 | h1 h9 h4 | h3 l1 l2 | h7 l3 l4 | covered triangles.
    std::vector<std::array<int, 3>> ts{
        {1, 9, 10}, {4, 5, 7}, {0, 8, 3}, {2, 11, 12}, {6, 13, 14}};
    for (const auto& t : cover) {
        ts.push_back({c_agent_pit(t[0]), c_agent_pit(t[1]), c_agent_pit(t[2])});
    }
    return PartitionIntoTriples(game.num_agents(), std::move(ts));
}

namespace {

template <typename Graph, typename Validator>
std::vector<std::array<int, 3>> cover_from_partition(const Graph& graph, const Ashg& game,
                                                     const PartitionIntoTriples& pi,
                                                     int first_vertex_agent,
                                                     Validator&& valid,
                                                     const char* shape_name) {
    require_clean(game, pi, Concept::jef, "justified envy-free");
    std::vector<std::array<int, 3>> cover;
    for (const auto& t : pi.triples()) {
        int vertex_members = 0;
        for (int a : t) vertex_members += a >= first_vertex_agent ? 1 : 0;
        if (vertex_members == 0) continue;
        if (vertex_members != 3) continue;
        cover.push_back({t[0] - first_vertex_agent, t[1] - first_vertex_agent,
                         t[2] - first_vertex_agent});
    }
    if (static_cast<int>(cover.size()) != graph.num_vertices / 3) {
        throw std::invalid_argument("partition holds " + std::to_string(cover.size()) +
                                    " all-vertex triples, expected " +
                                    std::to_string(graph.num_vertices / 3));
    }
    for (const auto& t : cover) {
        if (!valid(graph, t)) {
            throw std::invalid_argument("all-vertex triple " + triple_name(t) + " is not a " +
                                        shape_name);
        }
    }
    return cover;
}

}  // namespace

std::vector<std::array<int, 3>> triangle_cover_from_jef_partition(
    const Digraph& graph, const Ashg& game, const PartitionIntoTriples& pi) {
    if (game.num_agents() != 9 + graph.num_vertices) {
        throw std::invalid_argument("agent count does not match the reduction layout");
    }
    return cover_from_partition(graph, game, pi, kDtcH + kDtcL,
                                [](const Digraph& g, const std::array<int, 3>& t) {
                                    return is_directed_3cycle(g, t);
                                },
                                "directed 3-cycle");
}

std::vector<std::array<int, 3>> triangle_cover_from_jef_partition(
    const UndirectedGraph& graph, const Ashg& game, const PartitionIntoTriples& pi) {
    if (game.num_agents() != 15 + graph.num_vertices) {
        throw std::invalid_argument("agent count does not match the reduction layout");
    }
    return cover_from_partition(graph, game, pi, kPitH + kPitL,
                                [](const UndirectedGraph& g, const std::array<int, 3>& t) {
                                    return is_triangle(g, t);
                                },
                                "triangle");
}

}  // namespace triples
