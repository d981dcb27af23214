#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcl/hypergraph.hpp"
#include "tcl/slice.hpp"

namespace tcl {

// Seeded instance samplers shared by the verify campaigns and the test suites.

// A graph on n vertices with e(G) > (5/9) C(n,2): G(n, p) with random p, an
// exact-threshold edge count, or a planted clique on just over 2n/3 vertices.
Graph sample_five_ninths_graph(int n, std::uint64_t seed);

// A 3-graph on n vertices with δ > (5/9) C(n,2).
Hypergraph3 sample_five_ninths_3graph(int n, std::uint64_t seed);

// Random or adversarial reduced graph on t clusters: densities k/q with small
// q, labels random or concentrated on one cluster, random d threshold.
ReducedGraph sample_reduced_graph(int t, std::uint64_t seed);

// Random 3-graphs of all densities mixed with extremal instances (|A| < n/3).
struct MixedInstance {
    Hypergraph3 h;
    bool extremal = false;
};
MixedInstance sample_mixed_3graph(std::uint64_t seed);

struct CampaignParams {
    std::vector<int> sizes;  // empty: campaign default
    int trials = 100;        // per size
    std::uint64_t seed = 0;
    int jobs = 1;
};

struct CampaignResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;  // first few
    double seconds = 0.0;

    bool ok() const { return trials > 0 && passed == trials; }
};

// graphmeet | fracmatch | farkas | lemma8 | erdos-gallai | extremal-bound
std::vector<std::string> campaign_names();
CampaignResult run_campaign(const std::string& name, const CampaignParams& params);

}  // namespace tcl
