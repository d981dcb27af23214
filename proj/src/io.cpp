#include "tcl/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "tcl/errors.hpp"

namespace tcl {

namespace {

bool skippable(const std::string& line) {
    auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

// Parses exactly `count` integers from the line; anything else is an error.
std::vector<long long> parse_ints(const std::string& line, std::size_t count, int line_no) {
    std::istringstream ss(line);
    std::vector<long long> values;
    long long x = 0;
    while (ss >> x) values.push_back(x);
    ss.clear();
    std::string rest;
    if (ss >> rest) throw ParseError(line_no, "unexpected token '" + rest + "'");
    if (values.size() != count) {
        throw ParseError(line_no, "expected " + std::to_string(count) + " integers, found " +
                                      std::to_string(values.size()));
    }
    return values;
}

template <std::size_t Arity>
std::pair<int, std::vector<std::array<Vertex, Arity>>> read_uniform(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::array<Vertex, Arity>> edges;
    std::set<std::array<Vertex, Arity>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        if (n < 0) {
            auto header = parse_ints(line, 2, line_no);
            if (header[0] != static_cast<long long>(Arity)) {
                throw ParseError(line_no, "header declares arity " + std::to_string(header[0]) +
                                              ", expected " + std::to_string(Arity));
            }
            if (header[1] < 0 || header[1] > 1'000'000) throw ParseError(line_no, "bad vertex count");
            n = static_cast<int>(header[1]);
            continue;
        }
        auto values = parse_ints(line, Arity, line_no);
        std::array<Vertex, Arity> e{};
        for (std::size_t i = 0; i < Arity; ++i) {
            if (values[i] < 1 || values[i] > n) {
                throw ParseError(line_no, "vertex " + std::to_string(values[i]) + " outside [1, " +
                                              std::to_string(n) + "]");
            }
            e[i] = static_cast<Vertex>(values[i]);
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw ParseError(line_no, "edge repeats a vertex");
        }
        if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
        edges.push_back(e);
    }
    if (n < 0) throw ParseError(line_no + 1, "missing header");
    return {n, std::move(edges)};
}

template <typename Edges>
void write_uniform(std::ostream& out, int arity, int n, const Edges& edges,
                   const std::vector<std::string>& comments) {
    out << arity << ' ' << n << '\n';
    for (const auto& c : comments) out << "# " << c << '\n';
    for (const auto& e : edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

template <typename Reader>
auto load(const std::string& path, Reader reader) {
    if (path == "-") return reader(std::cin);
    std::ifstream file(path);
    if (!file) throw InvalidArgument("cannot open '" + path + "'");
    return reader(file);
}

}  // namespace

Hypergraph3 read_hypergraph(std::istream& in) {
    auto [n, edges] = read_uniform<3>(in);
    return Hypergraph3(n, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph3& h, const std::vector<std::string>& comments) {
    write_uniform(out, 3, h.n(), h.edges(), comments);
}

Graph read_graph(std::istream& in) {
    auto [n, edges] = read_uniform<2>(in);
    return Graph(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    write_uniform(out, 2, g.n(), g.edges(), comments);
}

Hypergraph3 load_hypergraph(const std::string& path) {
    return load(path, [](std::istream& in) { return read_hypergraph(in); });
}

Graph load_graph(const std::string& path) {
    return load(path, [](std::istream& in) { return read_graph(in); });
}

}  // namespace tcl
