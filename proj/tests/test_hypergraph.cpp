#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tcl/errors.hpp"
#include "tcl/generators.hpp"
#include "tcl/hypergraph.hpp"
#include "tcl/io.hpp"
#include "tcl/random.hpp"

using namespace tcl;

TEST_CASE("degree on K4") {
    const auto k4 = testing::complete(4);
    const Vertex one[] = {1};
    const Vertex pair[] = {1, 2};
    CHECK(degree(k4, one) == 3);
    CHECK(degree(k4, pair) == 2);
    const Vertex bad[] = {1, 5};
    CHECK_THROWS_AS(degree(k4, bad), InvalidArgument);
    const Vertex triple[] = {1, 2, 3};
    CHECK_THROWS_AS(degree(k4, triple), InvalidArgument);
}

TEST_CASE("degrees on the extremal instance n=9, a=2") {
    const auto inst = extremal(9, 2);
    for (Vertex b = 3; b <= 9; ++b) {
        const Vertex s[] = {b};
        CHECK(degree(inst.h, s) == 13);
    }
    CHECK(min_degree(inst.h, 1) == 13);
    CHECK(min_degree(inst.h, 1) == oracle::choose(8, 2) - oracle::choose(6, 2));
}

TEST_CASE("min degree") {
    CHECK(min_degree(testing::complete(5), 1) == 6);
    CHECK(min_degree(Hypergraph3(5, {}), 1) == 0);
    CHECK(min_degree(testing::complete(5), 2) == 3);
    CHECK_THROWS_AS(min_degree(testing::complete(5), 3), InvalidArgument);
    CHECK_THROWS_AS(min_degree(Hypergraph3(1, {}), 2), InvalidArgument);
}

TEST_CASE("construction rejects bad edges") {
    CHECK_THROWS_AS(Hypergraph3(4, {{1, 1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(Hypergraph3(4, {{1, 2, 5}}), InvalidArgument);
    CHECK_THROWS_AS(Hypergraph3(4, {{1, 2, 3}, {3, 2, 1}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InvalidArgument);
    const Hypergraph3 h(4, {{3, 1, 2}});
    CHECK(h.edge(0) == Triple{1, 2, 3});
    CHECK(h.contains(2, 3, 1));
}

TEST_CASE("link graphs") {
    const auto k4 = testing::complete(4);
    const Graph l = link_graph(k4, 1);
    CHECK(l.n() == 4);
    CHECK(l.edge_count() == 3);
    CHECK(l.contains(2, 3));
    CHECK(l.contains(3, 4));
    CHECK(l.degree(1) == 0);

    const Graph empty = link_graph(Hypergraph3(4, {{1, 2, 3}}), 4);
    CHECK(empty.n() == 4);
    CHECK(empty.edge_count() == 0);

    const auto inst = extremal(9, 2);
    CHECK(link_graph(inst.h, 5).edge_count() == 13);
    CHECK_THROWS_AS(link_graph(k4, 0), InvalidArgument);
    CHECK_THROWS_AS(link_graph(k4, 5), InvalidArgument);
}

TEST_CASE("handshake, pair index and link consistency on random instances") {
    for (std::uint64_t i = 0; i < 60; ++i) {
        Rng rng(derive_seed(11, i));
        const int n = 3 + static_cast<int>(rng.below(10));
        const auto h = random_3graph(n, rng.uniform01(), rng.next());
        std::int64_t sum = 0;
        for (Vertex v = 1; v <= n; ++v) sum += h.vertex_degree(v);
        CHECK(sum == 3 * static_cast<std::int64_t>(h.edge_count()));
        CHECK(static_cast<std::int64_t>(min_degree(h, 1)) * n <= 3 * static_cast<std::int64_t>(h.edge_count()));
        for (Vertex a = 1; a <= n; ++a) {
            for (Vertex b = a + 1; b <= n; ++b) {
                int count = 0;
                for (Vertex c = 1; c <= n; ++c) count += (c != a && c != b && h.contains(make_triple(a, b, c))) ? 1 : 0;
                CHECK(static_cast<int>(h.edges_containing(a, b).size()) == count);
            }
        }
        for (Vertex v = 1; v <= n; ++v) {
            const Graph l = link_graph(h, v);
            CHECK(static_cast<int>(l.edge_count()) == h.vertex_degree(v));
            for (Vertex u = 1; u <= n; ++u) {
                for (Vertex w = u + 1; w <= n; ++w) {
                    const bool in_h = u != v && w != v && h.contains(make_triple(u, v, w));
                    CHECK(l.contains(u, w) == in_h);
                }
            }
        }
    }
}

TEST_CASE("reading .3g text") {
    std::istringstream ok("3 4\n1 2 3\n1 2 4\n");
    const auto h = read_hypergraph(ok);
    CHECK(h.n() == 4);
    CHECK(h.edge_count() == 2);

    std::istringstream dup("3 3\n1 2 3\n1 2 3\n");
    try {
        read_hypergraph(dup);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    std::istringstream comments("# header comment\n3 4\n\n# edge list\n4 2 1\n");
    const auto c = read_hypergraph(comments);
    CHECK(c.edge_count() == 1);
    CHECK(c.edge(0) == Triple{1, 2, 4});

    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_hypergraph(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("2 4\n1 2\n") == 1);
    CHECK(line_of("3 x\n") == 1);
    CHECK(line_of("3 4\n1 2\n") == 2);
    CHECK(line_of("3 4\n1 2 3 4\n") == 2);
    CHECK(line_of("3 4\n1 2 5\n") == 2);
    CHECK(line_of("3 4\n1 2 3\n0 2 3\n") == 3);
    CHECK(line_of("3 4\n1 1 2\n") == 2);

    std::istringstream graph("2 3\n1 2\n# c\n3 2\n");
    const Graph g = read_graph(graph);
    CHECK(g.edge_count() == 2);
    std::istringstream bad_graph("2 3\n1 2\n2 1\n");
    CHECK_THROWS_AS(read_graph(bad_graph), ParseError);
}

TEST_CASE("file round trip on 1000 random instances") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        Rng rng(derive_seed(2024, i));
        const int n = static_cast<int>(rng.below(14));
        const auto h = random_3graph(n, rng.uniform01(), rng.next());
        std::ostringstream first;
        write_hypergraph(first, h, {"seed " + std::to_string(i)});
        std::istringstream in(first.str());
        const auto back = read_hypergraph(in);
        REQUIRE(back == h);
        std::ostringstream second;
        write_hypergraph(second, back, {"seed " + std::to_string(i)});
        REQUIRE(second.str() == first.str());

        const Graph g = random_graph(n, rng.uniform01(), rng.next());
        std::ostringstream gout;
        write_graph(gout, g);
        std::istringstream gin(gout.str());
        REQUIRE(read_graph(gin) == g);
    }
}

TEST_CASE("edge subgraph keeps the vertex set") {
    const auto k5 = testing::complete(5);
    const std::size_t keep[] = {0, 3};
    const auto sub = edge_subgraph(k5, keep);
    CHECK(sub.n() == 5);
    CHECK(sub.edge_count() == 2);
    CHECK(sub.contains(k5.edge(3)));
}
