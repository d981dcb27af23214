#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcl/hypergraph.hpp"

namespace tcl {

// All triples meeting A = {1..a} on [n]; B = {a+1..n}.
struct ExtremalInstance {
    Hypergraph3 h;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    std::int64_t predicted_min_degree = 0;  // C(n-1,2) - C(|B|-1,2)
    int cycle_upper_bound = 0;              // 3|A|
};

// Needs n >= 3 and 1 <= a <= n. The recomputed minimum degree is checked
// against the closed formula (InvariantViolation on mismatch).
ExtremalInstance extremal(int n, int a);

// |A| = floor(((1 - eta) n - 1) / 3).
ExtremalInstance extremal_from_eta(int n, double eta);

// Every triple independently with probability p.
Hypergraph3 random_3graph(int n, double p, std::uint64_t seed);

struct MinDegreeSample {
    std::optional<Hypergraph3> graph;   // absent when attempts ran out
    int best_min_degree = -1;
    int attempts = 0;
    double final_p = 0.0;
};

// Rejection sampling: attempt i draws random_3graph(n, p_i, derive_seed(seed, i))
// and stops once δ >= delta_target. p starts at p_start and rises by 0.01 after
// each miss, capped at 1.
MinDegreeSample random_min_degree_3graph(int n, int delta_target, std::uint64_t seed, int max_attempts = 1000,
                                         double p_start = 0.62);

// G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);

// Uniformly random graph with exactly `edges` edges.
Graph random_graph_with_edges(int n, std::int64_t edges, std::uint64_t seed);

}  // namespace tcl
