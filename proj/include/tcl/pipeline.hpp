#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcl/cycle.hpp"
#include "tcl/serialize.hpp"
#include "tcl/slice.hpp"

namespace tcl {

struct PipelineParams {
    int t = 6;
    Rational d = make_rational(1, 10);     // density threshold for R_d
    Rational eps = make_rational(1, 5);    // witness-search tolerance
    int samples = 64;                      // witness samples per triple
    std::uint64_t seed = 0;
    // Clusters in fewer than good_fraction · C(t,2) irregular triples are
    // good; defaults to 2·sqrt(eps) rounded to 1e-6.
    std::optional<Rational> good_fraction;
    CycleSearchParams cycle;
};

enum class StageStatus { Ok, Failed, Skipped };

struct StageRecord {
    std::string name;
    StageStatus status = StageStatus::Skipped;
    std::string message;
    double millis = 0.0;
};

// Outcome of deletion -> weak slice -> densities -> regularity labels ->
// good clusters -> fractional matching on R' -> cycle construction. Later
// stages are marked skipped once one fails.
struct PipelineReport {
    // input
    int n = 0;
    std::size_t edges = 0;
    int min_degree = 0;
    Rational density = 0;  // e(H) / C(n,3)

    // slice
    int t = 0;
    int m = 0;
    std::uint64_t seed = 0;
    std::vector<Vertex> deleted;

    // reduced graphs
    Rational d_threshold = 0;
    Rational regular_fraction = 0;
    std::size_t reduced_edges = 0;           // |R_d|
    std::size_t lemma8_violations = 0;
    double mean_degree_gap = 0.0;            // mean |reldeg(Y; R) - reldeg(Y; G)|
    Rational good_fraction = 0;
    std::vector<int> good;

    // restricted reduced graph R'
    int restricted_min_degree = 0;
    Rational restricted_bound = 0;           // (5/9) C(|C|,2); δ(R') must exceed it
    std::optional<FractionalMatching> matching;  // over clusters (vertex c + 1 is cluster c)
    int matching_component = -1;

    // cycle
    std::optional<CycleSearchResult> cycle;

    std::vector<StageRecord> stages;

    std::optional<std::string> failed_stage() const;
    bool ok() const { return !failed_stage(); }
};

PipelineReport run_pipeline(const Hypergraph3& h, const PipelineParams& params);

// Full report; with timings = false the output is the canonical form used for
// determinism checks.
Json to_json(const PipelineReport& r, bool timings = true);

// Rational approximation of 2 sqrt(eps) with denominator 10^6.
Rational default_good_fraction(const Rational& eps);

}  // namespace tcl
