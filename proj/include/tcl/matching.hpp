#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcl/hypergraph.hpp"

namespace tcl {

struct GraphMatching {
    std::vector<Pair> pairs;  // sorted, each pair sorted
    std::size_t size() const noexcept { return pairs.size(); }
};

// A connected component of a graph: sorted vertex list and sorted edge list.
struct GraphComponent {
    std::vector<Vertex> vertices;
    std::vector<Pair> edges;

    friend bool operator==(const GraphComponent&, const GraphComponent&) = default;
};

// Maximum-cardinality matching (Edmonds' blossom algorithm).
GraphMatching max_matching(const Graph& g);

// All connected components, isolated vertices included, ordered by smallest vertex.
std::vector<GraphComponent> connected_components(const Graph& g);

// Component with the most vertices; ties go to the lexicographically smallest
// vertex list. Throws InvalidArgument ("no component") on an edgeless graph.
GraphComponent largest_component(const Graph& g);

// max{C(2k-1, 2), C(k-1, 2) + (k-1)(N-k+1)}: any graph on N vertices with more
// edges than this has a matching of size k. Throws InvalidArgument when k < 1,
// N < 1 or N < 2k - 1.
std::int64_t erdos_gallai_threshold(std::int64_t vertex_count, std::int64_t k);

// Evidence for the four claims about largest components of two graphs of
// density above 5/9 on a common vertex set.
struct GraphMeetReport {
    int n = 0;
    std::array<GraphComponent, 2> components;
    std::array<GraphMatching, 2> matchings;   // truncated to the target size when large enough
    std::optional<Pair> shared_edge;
    std::size_t matching_target = 0;          // n/3, rounded up outside the 3 | n case

    // Verdicts (i)-(iv).
    bool covers_two_thirds = false;           // v(C_i) > 2n/3 for both i
    bool dense_component = false;             // e(C_i) > (4/9) C(n,2) for both i
    bool has_matching = false;                // C_i has a matching of size n/3 for both i
    bool components_meet = false;             // C_1, C_2 share an edge

    bool precondition_met = true;             // false only in observe mode

    bool all_verdicts() const {
        return covers_two_thirds && dense_component && has_matching && components_meet;
    }
    // Proportion of vertices outside C_1 and C_2 (alpha, beta).
    double alpha() const;
    double beta() const;
};

// True when e(G) > (5/9) C(n,2) (strict, exact integer comparison).
bool above_five_ninths(const Graph& g);

// Throws PreconditionError unless both graphs share n, 3 | n and both exceed
// the 5/9 density bound. With observe = true the verifier runs anyway and the
// report carries precondition_met = false.
GraphMeetReport graphmeet_verify(const Graph& g1, const Graph& g2, bool observe = false);

// Recomputes every verdict from the evidence fields alone.
bool graphmeet_consistent(const GraphMeetReport& report, const Graph& g1, const Graph& g2);

}  // namespace tcl
