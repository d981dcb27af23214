#include "tcl/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tcl/errors.hpp"

namespace tcl {

namespace {

std::string show(const Triple& e) {
    return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "}";
}

}  // namespace

Triple make_triple(Vertex a, Vertex b, Vertex c) {
    Triple e{a, b, c};
    std::sort(e.begin(), e.end());
    return e;
}

Pair make_pair(Vertex a, Vertex b) { return a < b ? Pair{a, b} : Pair{b, a}; }

Hypergraph3::Hypergraph3(int n, std::vector<Triple> edges) : n_(n) {
    if (n < 0) throw InvalidArgument("negative vertex count");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (e[0] < 1 || e[2] > n) throw InvalidArgument("edge " + show(e) + " has a vertex outside [1, n]");
        if (e[0] == e[1] || e[1] == e[2]) throw InvalidArgument("edge " + show(e) + " repeats a vertex");
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw InvalidArgument("duplicate edge " + show(*dup));
    }
    if (edges.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw InvalidArgument("too many edges");
    }
    edges_ = std::move(edges);

    const auto nn = static_cast<std::size_t>(n);
    lookup_.reserve(edges_.size() * 2);
    vertex_degree_.assign(nn + 1, 0);
    std::vector<std::uint32_t> pair_count(nn * nn + 1, 0);
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
        const auto& [a, b, c] = edges_[i];
        lookup_.emplace(key(a, b, c), i);
        ++vertex_degree_[a];
        ++vertex_degree_[b];
        ++vertex_degree_[c];
        ++pair_count[pair_slot(a, b)];
        ++pair_count[pair_slot(a, c)];
        ++pair_count[pair_slot(b, c)];
    }

    pair_offsets_.assign(nn * nn + 1, 0);
    for (std::size_t s = 0; s < nn * nn; ++s) pair_offsets_[s + 1] = pair_offsets_[s] + pair_count[s];
    pair_edges_.resize(pair_offsets_.back());
    vertex_offsets_.assign(nn + 2, 0);
    for (std::size_t v = 1; v <= nn; ++v) vertex_offsets_[v + 1] = vertex_offsets_[v] + vertex_degree_[v];
    vertex_edges_.resize(edges_.size() * 3);

    std::vector<std::uint32_t> pair_fill(pair_offsets_.begin(), pair_offsets_.end() - 1);
    std::vector<std::uint32_t> vertex_fill(vertex_offsets_.begin(), vertex_offsets_.end() - 1);
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
        const auto& [a, b, c] = edges_[i];
        pair_edges_[pair_fill[pair_slot(a, b)]++] = i;
        pair_edges_[pair_fill[pair_slot(a, c)]++] = i;
        pair_edges_[pair_fill[pair_slot(b, c)]++] = i;
        vertex_edges_[vertex_fill[a]++] = i;
        vertex_edges_[vertex_fill[b]++] = i;
        vertex_edges_[vertex_fill[c]++] = i;
    }
}

std::uint64_t Hypergraph3::key(Vertex a, Vertex b, Vertex c) const {
    const auto base = static_cast<std::uint64_t>(n_) + 1;
    return (static_cast<std::uint64_t>(a) * base + static_cast<std::uint64_t>(b)) * base +
           static_cast<std::uint64_t>(c);
}

std::size_t Hypergraph3::pair_slot(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b - 1);
}

bool Hypergraph3::contains(Vertex a, Vertex b, Vertex c) const {
    return index_of(make_triple(a, b, c)).has_value();
}

std::optional<std::size_t> Hypergraph3::index_of(const Triple& e) const {
    const auto [a, b, c] = make_triple(e[0], e[1], e[2]);
    if (a < 1 || c > n_ || a == b || b == c) return std::nullopt;
    auto it = lookup_.find(key(a, b, c));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::span<const std::uint32_t> Hypergraph3::edges_containing(Vertex a, Vertex b) const {
    if (a == b || std::min(a, b) < 1 || std::max(a, b) > n_) return {};
    const auto s = pair_slot(a, b);
    return std::span<const std::uint32_t>(pair_edges_).subspan(pair_offsets_[s], pair_offsets_[s + 1] - pair_offsets_[s]);
}

std::span<const std::uint32_t> Hypergraph3::edges_containing(Vertex v) const {
    if (v < 1 || v > n_) return {};
    const auto s = static_cast<std::size_t>(v);
    return std::span<const std::uint32_t>(vertex_edges_).subspan(vertex_offsets_[s], vertex_offsets_[s + 1] - vertex_offsets_[s]);
}

Graph::Graph(int n, std::vector<Pair> edges) : n_(n) {
    if (n < 0) throw InvalidArgument("negative vertex count");
    for (auto& e : edges) {
        if (e[0] > e[1]) std::swap(e[0], e[1]);
        if (e[0] < 1 || e[1] > n) throw InvalidArgument("graph edge outside [1, n]");
        if (e[0] == e[1]) throw InvalidArgument("graph loop at " + std::to_string(e[0]));
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw InvalidArgument("duplicate graph edge {" + std::to_string((*dup)[0]) + "," +
                              std::to_string((*dup)[1]) + "}");
    }
    edges_ = std::move(edges);
    adjacency_.assign(static_cast<std::size_t>(n) + 1, {});
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::contains(Vertex u, Vertex v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_) return false;
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

int degree(const Hypergraph3& h, std::span<const Vertex> s) {
    for (Vertex v : s) {
        if (v < 1 || v > h.n()) throw InvalidArgument("vertex " + std::to_string(v) + " outside [1, n]");
    }
    if (s.size() == 1) return h.vertex_degree(s[0]);
    if (s.size() == 2) {
        if (s[0] == s[1]) throw InvalidArgument("degree of a pair needs two distinct vertices");
        return static_cast<int>(h.edges_containing(s[0], s[1]).size());
    }
    throw InvalidArgument("degree is defined for sets of size 1 or 2");
}

int min_degree(const Hypergraph3& h, int s) {
    if (s != 1 && s != 2) throw InvalidArgument("min_degree needs s in {1, 2}");
    if (h.n() < s) throw InvalidArgument("fewer than s vertices");
    int best = std::numeric_limits<int>::max();
    if (s == 1) {
        for (Vertex v = 1; v <= h.n(); ++v) best = std::min(best, h.vertex_degree(v));
    } else {
        for (Vertex a = 1; a <= h.n(); ++a) {
            for (Vertex b = a + 1; b <= h.n(); ++b) {
                best = std::min(best, static_cast<int>(h.edges_containing(a, b).size()));
            }
        }
    }
    return best;
}

Graph link_graph(const Hypergraph3& h, Vertex v) {
    if (v < 1 || v > h.n()) throw InvalidArgument("vertex " + std::to_string(v) + " outside [1, n]");
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(h.vertex_degree(v)));
    for (auto idx : h.edges_containing(v)) {
        Pair p{};
        int k = 0;
        for (Vertex x : h.edge(idx)) {
            if (x != v) p[k++] = x;
        }
        pairs.push_back(p);
    }
    return Graph(h.n(), std::move(pairs));
}

Hypergraph3 edge_subgraph(const Hypergraph3& h, std::span<const std::size_t> edge_indices) {
    std::vector<Triple> kept;
    kept.reserve(edge_indices.size());
    for (auto i : edge_indices) kept.push_back(h.edge(i));
    return Hypergraph3(h.n(), std::move(kept));
}

}  // namespace tcl
