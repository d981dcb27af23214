#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcl/fractional.hpp"
#include "tcl/hypergraph.hpp"
#include "tcl/slice.hpp"

namespace tcl {

// Cyclic vertex sequence whose every cyclic window of three is an edge.
struct TightCycle {
    std::vector<Vertex> order;
    std::size_t length() const noexcept { return order.size(); }
};

// Shortest accepted cycle. A single edge read as a 3-window cycle is degenerate.
inline constexpr std::size_t kMinCycleLength = 4;

enum class CycleDefect { None, VertexOutOfRange, DuplicateVertex, Degenerate, TooShort, MissingWindow };

struct CycleCheck {
    CycleDefect defect = CycleDefect::None;
    std::size_t position = 0;         // first offending index in the sequence
    std::optional<Triple> window;     // the missing window, in sequence order
    std::string message;

    bool valid() const noexcept { return defect == CycleDefect::None; }
};

CycleCheck validate_cycle(const Hypergraph3& h, std::span<const Vertex> sequence);

inline constexpr int kExactCycleMaxVertices = 22;

// Longest tight cycle by subset DP over (visited set, last ordered pair) with
// the smallest vertex pinned as the start. nullopt when no cycle of length
// >= 4 exists. Throws SizeLimitError for n > 22.
std::optional<TightCycle> longest_tight_cycle(const Hypergraph3& h);

struct CycleSearchParams {
    int restarts = 8;
    int backtrack_budget = 2000;  // per restart
    std::uint64_t seed = 0;
};

struct CycleSearchResult {
    std::optional<TightCycle> cycle;           // always validated
    std::vector<Vertex> longest_path;          // longest tight path seen
    std::vector<int> coverage;                 // per cluster: cycle vertices inside it
    std::vector<Rational> target;              // per cluster: load(M at cluster) * m
    Rational target_length = 0;                // 3 * total weight * m
    int restarts_used = 0;
    std::string failure;                       // empty on success
};

// Heuristic long-cycle builder. `m` is a fractional matching on the 3-graph
// whose vertex c + 1 is cluster c; its support must consist of R_d edges that
// are tightly connected inside R_d (InvalidArgument otherwise). The path winds
// around each support edge X for about 3 · w_X · m steps and moves between
// support edges along tight walks in R_d; the longest closable stretch becomes
// the cycle.
CycleSearchResult matching_guided_cycle(const Hypergraph3& h, const WeakSlice& s, const ReducedGraph& r,
                                        const FractionalMatching& m, const CycleSearchParams& params = {});

}  // namespace tcl
