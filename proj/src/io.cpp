#include "triples/io.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace triples {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& message) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + message);
}

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream split(raw);
        std::vector<std::string> tokens;
        std::string token;
        while (split >> token) tokens.push_back(token);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

std::int64_t parse_int(const Line& line, std::size_t index, const char* what) {
    if (index >= line.tokens.size()) {
        fail(line.number, std::string("missing ") + what);
    }
    const std::string& token = line.tokens[index];
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        fail(line.number, std::string("expected an integer ") + what + ", got '" + token + "'");
    }
    return value;
}

void expect_width(const Line& line, std::size_t width) {
    if (line.tokens.size() != width) {
        fail(line.number, "expected " + std::to_string(width) + " fields, got " +
                              std::to_string(line.tokens.size()));
    }
}

int to_internal_agent(const Line& line, std::size_t index, int num_agents, const char* what) {
    const std::int64_t id = parse_int(line, index, what);
    if (id < 1 || id > num_agents) {
        fail(line.number, std::string(what) + " " + std::to_string(id) +
                              " outside 1.." + std::to_string(num_agents));
    }
    return static_cast<int>(id - 1);
}

}  // namespace

Ashg parse_instance(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) {
        throw std::invalid_argument("line 1: empty instance, expected 'ashg <num_agents>'");
    }
    const Line& head = lines[0];
    if (head.tokens[0] != "ashg") {
        fail(head.number, "expected header 'ashg <num_agents>', got '" + head.tokens[0] + "'");
    }
    expect_width(head, 2);
    const std::int64_t n64 = parse_int(head, 1, "agent count");
    if (n64 < 3 || n64 % 3 != 0 || n64 > 1'000'000) {
        fail(head.number, "agent count must be a positive multiple of 3, got " +
                              std::to_string(n64));
    }
    const int n = static_cast<int>(n64);

    AshgBuilder builder(n);
    std::vector<bool> assigned(static_cast<std::size_t>(n) * n, false);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens[0] != "v") {
            fail(line.number, "expected 'v <i> <j> <value>', got '" + line.tokens[0] + "'");
        }
        expect_width(line, 4);
        const int i = to_internal_agent(line, 1, n, "agent");
        const int j = to_internal_agent(line, 2, n, "agent");
        if (i == j) {
            fail(line.number, "self-valuation of agent " + std::to_string(i + 1));
        }
        if (assigned[static_cast<std::size_t>(i) * n + j]) {
            fail(line.number, "duplicate valuation (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
        }
        assigned[static_cast<std::size_t>(i) * n + j] = true;
        builder.set(i, j, parse_int(line, 3, "valuation"));
    }
    return builder.build();
}

std::string serialize_instance(const Ashg& game) {
    std::string out = "ashg " + std::to_string(game.num_agents()) + "\n";
    for (int i = 0; i < game.num_agents(); ++i) {
        for (int j = 0; j < game.num_agents(); ++j) {
            const std::int64_t v = game.value(i, j);
            if (v != 0) {
                out += "v " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                       std::to_string(v) + "\n";
            }
        }
    }
    return out;
}

PartitionIntoTriples parse_partition(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) {
        throw std::invalid_argument("line 1: empty partition file");
    }
    const int num_agents = static_cast<int>(lines.size()) * 3;
    std::vector<std::array<int, 3>> triples;
    triples.reserve(lines.size());
    for (const Line& line : lines) {
        expect_width(line, 3);
        triples.push_back({to_internal_agent(line, 0, num_agents, "agent"),
                           to_internal_agent(line, 1, num_agents, "agent"),
                           to_internal_agent(line, 2, num_agents, "agent")});
    }
    return PartitionIntoTriples(num_agents, std::move(triples));
}

std::string serialize_partition(const PartitionIntoTriples& pi) {
    std::string out;
    for (const auto& t : pi.triples()) {
        out += std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " +
               std::to_string(t[2] + 1) + "\n";
    }
    return out;
}

X3SatFormula parse_formula(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) {
        throw std::invalid_argument("line 1: empty formula, expected 'x3sat <m>'");
    }
    const Line& head = lines[0];
    if (head.tokens[0] != "x3sat") {
        fail(head.number, "expected header 'x3sat <m>', got '" + head.tokens[0] + "'");
    }
    expect_width(head, 2);
    const std::int64_t m64 = parse_int(head, 1, "clause count");
    if (m64 < 1 || m64 > 1'000'000) {
        fail(head.number, "clause count out of range");
    }
    const int m = static_cast<int>(m64);
    std::vector<std::array<int, 3>> clauses;
    clauses.reserve(lines.size() - 1);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens[0] != "c") {
            fail(line.number, "expected 'c <a> <b> <c>', got '" + line.tokens[0] + "'");
        }
        expect_width(line, 4);
        clauses.push_back({to_internal_agent(line, 1, m, "variable"),
                           to_internal_agent(line, 2, m, "variable"),
                           to_internal_agent(line, 3, m, "variable")});
    }
    if (static_cast<int>(clauses.size()) != m) {
        throw std::invalid_argument("formula header announces " + std::to_string(m) +
                                    " clauses but " + std::to_string(clauses.size()) +
                                    " are given");
    }
    return X3SatFormula(m, std::move(clauses));
}

std::string serialize_formula(const X3SatFormula& formula) {
    std::string out = "x3sat " + std::to_string(formula.clauses.size()) + "\n";
    for (const auto& clause : formula.clauses) {
        out += "c " + std::to_string(clause[0] + 1) + " " + std::to_string(clause[1] + 1) +
               " " + std::to_string(clause[2] + 1) + "\n";
    }
    return out;
}

AnyGraph parse_graph(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) {
        throw std::invalid_argument(
            "line 1: empty graph, expected 'graph <v> directed|undirected'");
    }
    const Line& head = lines[0];
    if (head.tokens[0] != "graph") {
        fail(head.number, "expected header 'graph <v> directed|undirected', got '" +
                              head.tokens[0] + "'");
    }
    expect_width(head, 3);
    const std::int64_t v64 = parse_int(head, 1, "vertex count");
    if (v64 < 3 || v64 > 1'000'000) {
        fail(head.number, "vertex count out of range");
    }
    const int v = static_cast<int>(v64);
    const std::string& kind = head.tokens[2];
    if (kind != "directed" && kind != "undirected") {
        fail(head.number, "graph kind must be 'directed' or 'undirected', got '" + kind + "'");
    }
    std::vector<std::pair<int, int>> links;
    links.reserve(lines.size() - 1);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens[0] != "e") {
            fail(line.number, "expected 'e <a> <b>', got '" + line.tokens[0] + "'");
        }
        expect_width(line, 3);
        links.emplace_back(to_internal_agent(line, 1, v, "vertex"),
                           to_internal_agent(line, 2, v, "vertex"));
    }
    if (kind == "directed") return Digraph(v, std::move(links));
    return UndirectedGraph(v, std::move(links));
}

namespace {

std::string serialize_links(const std::string& kind, int num_vertices,
                            const std::vector<std::pair<int, int>>& links) {
    std::string out = "graph " + std::to_string(num_vertices) + " " + kind + "\n";
    for (auto [a, b] : links) {
        out += "e " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    }
    return out;
}

}  // namespace

std::string serialize_graph(const Digraph& graph) {
    return serialize_links("directed", graph.num_vertices, graph.arcs);
}

std::string serialize_graph(const UndirectedGraph& graph) {
    return serialize_links("undirected", graph.num_vertices, graph.edges);
}

std::string serialize_name_map(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += std::to_string(i + 1) + " " + names[i] + "\n";
    }
    return out;
}

Ashg parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

PartitionIntoTriples parse_partition_text(const std::string& text) {
    std::istringstream in(text);
    return parse_partition(in);
}

X3SatFormula parse_formula_text(const std::string& text) {
    std::istringstream in(text);
    return parse_formula(in);
}

AnyGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

}  // namespace triples
