#pragma once

#include <vector>

#include "tcl/hypergraph.hpp"

namespace testing {

inline tcl::Hypergraph3 complete(int n) {
    std::vector<tcl::Triple> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) edges.push_back({a, b, c});
    return tcl::Hypergraph3(n, edges);
}

inline tcl::Graph complete_graph(int n) {
    std::vector<tcl::Pair> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) edges.push_back({a, b});
    return tcl::Graph(n, edges);
}

}  // namespace testing
