#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace tcl {

// Vertices are dense 1-based integers.
using Vertex = int;
using Triple = std::array<Vertex, 3>;
using Pair = std::array<Vertex, 2>;

Triple make_triple(Vertex a, Vertex b, Vertex c);  // sorted ascending
Pair make_pair(Vertex a, Vertex b);                // sorted ascending

// A 3-uniform hypergraph on vertices 1..n. Immutable after construction.
//
// Edges are stored sorted ascending, each edge sorted ascending. The pair
// index lists, for every 2-set, the edges containing it; it is built eagerly
// so degree/codegree queries and tight-component grouping are O(1) lookups.
class Hypergraph3 {
public:
    Hypergraph3() = default;

    // Throws InvalidArgument on a repeated vertex, a vertex outside [1, n] or
    // a duplicate edge. Input edges may list their vertices in any order.
    Hypergraph3(int n, std::vector<Triple> edges);

    int n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Triple> edges() const noexcept { return edges_; }
    const Triple& edge(std::size_t i) const { return edges_[i]; }

    bool contains(Vertex a, Vertex b, Vertex c) const;
    bool contains(const Triple& e) const { return contains(e[0], e[1], e[2]); }
    std::optional<std::size_t> index_of(const Triple& e) const;

    // d({v}).
    int vertex_degree(Vertex v) const { return vertex_degree_[static_cast<std::size_t>(v)]; }

    // Indices (into edges()) of the edges containing both a and b, a != b.
    std::span<const std::uint32_t> edges_containing(Vertex a, Vertex b) const;

    // Indices of the edges containing v.
    std::span<const std::uint32_t> edges_containing(Vertex v) const;

    friend bool operator==(const Hypergraph3& x, const Hypergraph3& y) {
        return x.n_ == y.n_ && x.edges_ == y.edges_;
    }

private:
    std::uint64_t key(Vertex a, Vertex b, Vertex c) const;  // a < b < c
    std::size_t pair_slot(Vertex a, Vertex b) const;

    int n_ = 0;
    std::vector<Triple> edges_;
    std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
    std::vector<int> vertex_degree_;
    std::vector<std::uint32_t> pair_offsets_;
    std::vector<std::uint32_t> pair_edges_;
    std::vector<std::uint32_t> vertex_offsets_;
    std::vector<std::uint32_t> vertex_edges_;
};

// A simple graph on vertices 1..n. Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Throws InvalidArgument on loops, out-of-range endpoints or duplicates.
    Graph(int n, std::vector<Pair> edges);

    int n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Pair> edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool contains(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& x, const Graph& y) {
        return x.n_ == y.n_ && x.edges_ == y.edges_;
    }

private:
    int n_ = 0;
    std::vector<Pair> edges_;
    std::vector<std::vector<Vertex>> adjacency_;  // sorted, index 0 unused
};

// Number of edges containing S, |S| in {1, 2}.
int degree(const Hypergraph3& h, std::span<const Vertex> s);

// δ_s(H), s in {1, 2}.
int min_degree(const Hypergraph3& h, int s);

// L(v) on all n vertices; v itself stays isolated.
Graph link_graph(const Hypergraph3& h, Vertex v);

// Sub-hypergraph on the same vertex set keeping the listed edge indices.
Hypergraph3 edge_subgraph(const Hypergraph3& h, std::span<const std::size_t> edge_indices);

}  // namespace tcl
