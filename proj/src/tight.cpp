#include "tcl/tight.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "tcl/errors.hpp"

namespace tcl {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
};

}  // namespace

std::vector<std::size_t> TightComponentLabeling::edges_with_label(int id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == id) out.push_back(i);
    }
    return out;
}

TightComponentLabeling tight_components(const Hypergraph3& h) {
    const std::size_t m = h.edge_count();
    DisjointSets sets(m);
    // Edges sharing a pair sit in the same pair group; chain each group.
    for (Vertex a = 1; a <= h.n(); ++a) {
        for (Vertex b = a + 1; b <= h.n(); ++b) {
            auto group = h.edges_containing(a, b);
            for (std::size_t i = 1; i < group.size(); ++i) sets.unite(group[0], group[i]);
        }
    }
    TightComponentLabeling out;
    out.labels.assign(m, -1);
    std::vector<int> root_label(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        auto r = sets.find(i);
        if (root_label[r] < 0) {
            root_label[r] = out.component_count++;
            out.component_sizes.push_back(0);
        }
        out.labels[i] = root_label[r];
        ++out.component_sizes[static_cast<std::size_t>(root_label[r])];
    }
    return out;
}

Connectivity tight_connectivity(const Hypergraph3& h) {
    if (h.edge_count() == 0) return Connectivity::Empty;
    return tight_components(h).component_count == 1 ? Connectivity::Connected : Connectivity::Disconnected;
}

bool is_tightly_connected(const Hypergraph3& h) { return tight_connectivity(h) == Connectivity::Connected; }

std::optional<std::vector<std::size_t>> tight_walk(const Hypergraph3& h, std::size_t from, std::size_t to) {
    const std::size_t m = h.edge_count();
    if (from >= m || to >= m) throw InvalidArgument("edge index out of range");
    std::vector<std::size_t> prev(m, m);
    std::vector<char> seen(m, 0);
    std::queue<std::size_t> q;
    q.push(from);
    seen[from] = 1;
    while (!q.empty()) {
        auto cur = q.front();
        q.pop();
        if (cur == to) break;
        const auto& e = h.edge(cur);
        for (int skip = 0; skip < 3; ++skip) {
            Vertex a = e[skip == 0 ? 1 : 0];
            Vertex b = e[skip == 2 ? 1 : 2];
            for (auto nxt : h.edges_containing(a, b)) {
                if (!seen[nxt]) {
                    seen[nxt] = 1;
                    prev[nxt] = cur;
                    q.push(nxt);
                }
            }
        }
    }
    if (!seen[to]) return std::nullopt;
    std::vector<std::size_t> walk;
    for (auto cur = to; cur != m; cur = prev[cur]) walk.push_back(cur);
    std::reverse(walk.begin(), walk.end());
    return walk;
}

std::vector<std::size_t> component_star(const Hypergraph3& h, Vertex u, const GraphComponent& c) {
    const auto link = link_graph(h, u);
    const auto comps = connected_components(link);
    if (std::find(comps.begin(), comps.end(), c) == comps.end()) {
        throw InvalidArgument("not a connected component of the link graph of " + std::to_string(u));
    }
    std::vector<std::size_t> out;
    out.reserve(c.edges.size());
    for (const auto& [x, y] : c.edges) out.push_back(*h.index_of(make_triple(u, x, y)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tcl
