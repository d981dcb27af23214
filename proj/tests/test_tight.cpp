#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tcl/errors.hpp"
#include "tcl/generators.hpp"
#include "tcl/matching.hpp"
#include "tcl/random.hpp"
#include "tcl/tight.hpp"

using namespace tcl;

namespace {

// Same partition of edge indices, compared through class representatives.
bool same_partition(const TightComponentLabeling& labels, const std::vector<std::size_t>& reps) {
    std::map<int, std::size_t> first;
    for (std::size_t i = 0; i < labels.labels.size(); ++i) {
        const auto [it, fresh] = first.emplace(labels.labels[i], i);
        if (reps[i] != it->second) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("tight components on small examples") {
    CHECK(tight_components(Hypergraph3(4, {{1, 2, 3}, {2, 3, 4}})).component_count == 1);
    CHECK(tight_components(Hypergraph3(6, {{1, 2, 3}, {4, 5, 6}})).component_count == 2);
    CHECK(tight_components(testing::complete(5)).component_count == 1);
    CHECK(tight_components(Hypergraph3(5, {})).component_count == 0);
    // Sharing one vertex is not enough.
    CHECK(tight_components(Hypergraph3(5, {{1, 2, 3}, {1, 4, 5}})).component_count == 2);
}

TEST_CASE("tight connectivity") {
    CHECK(is_tightly_connected(testing::complete(4)));
    CHECK_FALSE(is_tightly_connected(Hypergraph3(6, {{1, 2, 3}, {4, 5, 6}})));
    CHECK(is_tightly_connected(extremal(9, 2).h));
    CHECK_FALSE(is_tightly_connected(Hypergraph3(3, {})));
    CHECK(tight_connectivity(Hypergraph3(3, {})) == Connectivity::Empty);
    CHECK(tight_connectivity(Hypergraph3(6, {{1, 2, 3}, {4, 5, 6}})) == Connectivity::Disconnected);
}

TEST_CASE("labeling invariants and naive oracle agreement") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        Rng rng(derive_seed(31, i));
        const int n = 3 + static_cast<int>(rng.below(9));
        // Sparse instances give many components.
        const auto h = random_3graph(n, 0.02 + 0.4 * rng.uniform01(), rng.next());
        if (h.edge_count() > 200) continue;
        const auto labels = tight_components(h);
        REQUIRE(labels.labels.size() == h.edge_count());
        std::size_t total = 0;
        for (auto s : labels.component_sizes) total += s;
        CHECK(total == h.edge_count());
        // Ids contiguous and first seen in canonical order.
        int next = 0;
        for (int l : labels.labels) {
            CHECK(l <= next);
            if (l == next) ++next;
        }
        CHECK(next == labels.component_count);
        for (std::size_t a = 0; a < h.edge_count(); ++a) {
            for (std::size_t b = a + 1; b < h.edge_count(); ++b) {
                if (oracle::shared_count(h.edge(a), h.edge(b)) == 2) CHECK(labels.labels[a] == labels.labels[b]);
            }
        }
        CHECK(same_partition(labels, oracle::naive_tight_classes(h)));
    }
}

TEST_CASE("monotone merge") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng(derive_seed(32, i));
        const int n = 4 + static_cast<int>(rng.below(6));
        const auto h = random_3graph(n, 0.1 + 0.3 * rng.uniform01(), rng.next());
        std::vector<Triple> all;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    if (!h.contains(a, b, c)) all.push_back({a, b, c});
        if (all.empty()) continue;
        const Triple extra = all[rng.below(all.size())];
        std::vector<Triple> grown(h.edges().begin(), h.edges().end());
        grown.push_back(extra);
        const Hypergraph3 g(n, grown);
        const auto before = tight_components(h);
        const auto after = tight_components(g);
        CHECK(after.component_count <= before.component_count + 1);
        // Edges together before stay together after.
        for (std::size_t a = 0; a < h.edge_count(); ++a) {
            for (std::size_t b = a + 1; b < h.edge_count(); ++b) {
                if (before.labels[a] == before.labels[b]) {
                    CHECK(after.labels[*g.index_of(h.edge(a))] == after.labels[*g.index_of(h.edge(b))]);
                }
            }
        }
    }
}

TEST_CASE("tight walks are witnesses") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng(derive_seed(33, i));
        const auto h = random_3graph(8, 0.15 + 0.3 * rng.uniform01(), rng.next());
        if (h.edge_count() < 2) continue;
        const auto labels = tight_components(h);
        const auto from = rng.below(h.edge_count());
        const auto to = rng.below(h.edge_count());
        const auto walk = tight_walk(h, from, to);
        CHECK(walk.has_value() == (labels.labels[from] == labels.labels[to]));
        if (!walk) continue;
        CHECK(walk->front() == from);
        CHECK(walk->back() == to);
        for (std::size_t k = 1; k < walk->size(); ++k) {
            CHECK(oracle::shared_count(h.edge((*walk)[k - 1]), h.edge((*walk)[k])) == 2);
        }
    }
}

TEST_CASE("component stars") {
    const auto k4 = testing::complete(4);
    const auto c = largest_component(link_graph(k4, 1));
    const auto star = component_star(k4, 1, c);
    CHECK(star.size() == 3);
    for (auto i : star) CHECK(k4.edge(i)[0] == 1);

    const Hypergraph3 two(6, {{1, 2, 3}, {4, 5, 6}});
    const GraphComponent edge23{{2, 3}, {{2, 3}}};
    const auto s = component_star(two, 1, edge23);
    REQUIRE(s.size() == 1);
    CHECK(two.edge(s[0]) == Triple{1, 2, 3});

    const GraphComponent not_component{{2, 4}, {{2, 4}}};
    CHECK_THROWS_AS(component_star(two, 1, not_component), InvalidArgument);
    const GraphComponent partial{{2, 3, 4}, {{2, 3}}};
    CHECK_THROWS_AS(component_star(testing::complete(5), 1, partial), InvalidArgument);
}

TEST_CASE("every link-component star lies in one tight component") {
    for (std::uint64_t i = 0; i < 60; ++i) {
        Rng rng(derive_seed(34, i));
        const int n = 5 + static_cast<int>(rng.below(6));
        const auto h = random_3graph(n, 0.2 + 0.7 * rng.uniform01(), rng.next());
        const auto labels = tight_components(h);
        for (Vertex u = 1; u <= n; ++u) {
            for (const auto& comp : connected_components(link_graph(h, u))) {
                if (comp.edges.empty()) continue;
                const auto star = component_star(h, u, comp);
                CHECK(star.size() == comp.edges.size());
                for (auto e : star) CHECK(labels.labels[e] == labels.labels[star.front()]);
            }
        }
    }
}
