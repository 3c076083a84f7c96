#include "streamnd/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "streamnd/errors.hpp"

namespace streamnd {

namespace {

// Splits a line into integer tokens; nullopt on a non-integer token.
std::optional<std::vector<long long>> integer_tokens(const std::string &line) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size() || line[i] == '#')
            break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#')
            ++j;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc() || ptr != line.data() + j)
            return std::nullopt;
        out.push_back(value);
        i = j;
    }
    return out;
}

// Calls fn(tokens, line_number) for each non-blank line.
template <class Fn> void for_each_record(std::istream &in, Fn &&fn, const std::string &source) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = integer_tokens(line);
        if (!tokens)
            throw ParseError(source, number, "expected integers, got '" + line + "'");
        if (tokens->empty())
            continue;
        fn(*tokens, number);
    }
}

int as_vertex(long long value, const std::string &source, std::size_t line) {
    if (value < 0 || value > 1'000'000'000)
        throw ParseError(source, line, "vertex id out of range");
    return static_cast<int>(value);
}

} // namespace

std::ifstream open_input(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    return in;
}

std::vector<EdgeLine> parse_edge_lines(std::istream &in, const std::string &source) {
    std::vector<EdgeLine> out;
    for_each_record(
        in,
        [&](const std::vector<long long> &t, std::size_t line) {
            if (t.size() != 2 && t.size() != 3)
                throw ParseError(source, line, "expected 'u v [w]'");
            const Weight w = t.size() == 3 ? t[2] : 1;
            if (w < 0)
                throw ParseError(source, line, "negative weight");
            out.push_back({as_vertex(t[0], source, line), as_vertex(t[1], source, line), w, line});
        },
        source);
    return out;
}

Graph parse_graph(std::istream &in, const std::string &source) {
    std::optional<Graph> g;
    long long declared = 0;
    std::size_t seen = 0;
    for_each_record(
        in,
        [&](const std::vector<long long> &t, std::size_t line) {
            if (!g) {
                if (t.size() != 2 || t[0] < 0 || t[1] < 0)
                    throw ParseError(source, line, "expected header 'n m'");
                g.emplace(static_cast<int>(t[0]));
                declared = t[1];
                return;
            }
            if (t.size() != 2 && t.size() != 3)
                throw ParseError(source, line, "expected 'u v [w]'");
            ++seen;
            const int u = as_vertex(t[0], source, line);
            const int v = as_vertex(t[1], source, line);
            const Weight w = t.size() == 3 ? t[2] : 1;
            if (!g->contains_vertex(u) || !g->contains_vertex(v))
                throw ParseError(source, line, "vertex id out of range [0, n)");
            if (w < 0)
                throw ParseError(source, line, "negative weight");
            if (u != v)
                g->add_edge(u, v, w);
        },
        source);
    if (!g)
        throw ParseError(source, 1, "missing header 'n m'");
    if (static_cast<long long>(seen) != declared)
        throw ParseError(source, seen + 1,
                         "header declares " + std::to_string(declared) + " edges, found " + std::to_string(seen));
    return *g;
}

Graph read_graph(const std::filesystem::path &path) {
    auto in = open_input(path);
    return parse_graph(in, path.string());
}

RequirementMap parse_requirements(std::istream &in, const std::string &source) {
    RequirementMap req;
    for_each_record(
        in,
        [&](const std::vector<long long> &t, std::size_t line) {
            if (t.size() != 3)
                throw ParseError(source, line, "expected 'u v r'");
            const int u = as_vertex(t[0], source, line);
            const int v = as_vertex(t[1], source, line);
            if (u == v)
                throw ParseError(source, line, "requirement r(uu) is undefined");
            if (t[2] < 0 || t[2] > 1'000'000)
                throw ParseError(source, line, "requirement out of range");
            req.set(u, v, static_cast<int>(t[2]));
        },
        source);
    return req;
}

RequirementMap read_requirements(const std::filesystem::path &path) {
    auto in = open_input(path);
    return parse_requirements(in, path.string());
}

void apply_reliability(Graph &g, std::istream &in, const std::string &source) {
    for_each_record(
        in,
        [&](const std::vector<long long> &t, std::size_t line) {
            if (t.size() != 1)
                throw ParseError(source, line, "expected a single vertex id");
            const int v = as_vertex(t[0], source, line);
            if (!g.contains_vertex(v))
                throw ParseError(source, line, "vertex id out of range");
            g.set_reliable(v, false);
        },
        source);
}

void read_reliability(Graph &g, const std::filesystem::path &path) {
    auto in = open_input(path);
    apply_reliability(g, in, path.string());
}

void write_graph(std::ostream &out, const Graph &g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto &e : g.edges())
        out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

void write_graph(const std::filesystem::path &path, const Graph &g) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    write_graph(out, g);
}

} // namespace streamnd
