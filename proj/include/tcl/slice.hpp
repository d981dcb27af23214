#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tcl/hypergraph.hpp"
#include "tcl/rational.hpp"

namespace tcl {

using ClusterTriple = std::array<int, 3>;  // 0-based cluster ids, ascending

// Colex rank of {i < j < k}: C(k,3) + C(j,2) + i.
std::size_t colex_rank(const ClusterTriple& x);
// All 3-sets of [0, t) in colex order.
std::vector<ClusterTriple> colex_triples(int t);

// Equipartition of the undeleted vertices into t clusters of size m, plus an
// explicit bipartite graph between every pair of clusters (complete unless
// replaced). Pair graphs are indexed by local positions within clusters.
struct WeakSlice {
    int n = 0;
    int t = 0;
    int m = 0;
    std::vector<std::vector<Vertex>> clusters;  // each sorted ascending
    std::vector<Vertex> deleted;                // sorted ascending
    std::vector<std::vector<std::uint8_t>> pair_graphs;  // [pair rank][m * m]

    // Index of the pair graph between clusters i != j.
    static std::size_t pair_rank(int i, int j);

    bool pair_edge(int ci, int xi, int cj, int xj) const;
    void set_pair_edge(int ci, int xi, int cj, int xj, bool present);

    // Cluster of v, or -1 for deleted vertices.
    int cluster_of(Vertex v) const;
    std::vector<int> owner;  // [v] -> cluster id or -1, index 0 unused
};

// Deletes n mod t vertices chosen from the seed, then splits the rest
// uniformly at random into t clusters with complete pair graphs.
WeakSlice build_weak_slice(const Hypergraph3& h, int t, std::uint64_t seed);

// Polyad counts over X, optionally restricted to sub-clusters (local indices).
struct PolyadCount {
    std::int64_t supported = 0;  // |K_3(pair graphs)|
    std::int64_t edges = 0;      // supported triples that are edges of H
    Rational density() const;    // 0 when nothing is supported
};

PolyadCount polyad_count(const Hypergraph3& h, const WeakSlice& s, const ClusterTriple& x);
PolyadCount polyad_count(const Hypergraph3& h, const WeakSlice& s, const ClusterTriple& x,
                         const std::array<std::vector<int>, 3>& local_subsets);

// d(X): fraction of the supported triples over X that are edges of H.
Rational relative_density(const Hypergraph3& h, const WeakSlice& s, const ClusterTriple& x);

// Weighted reduced graph on t clusters with a regularity label per triple.
struct ReducedGraph {
    int t = 0;
    int m = 0;
    std::vector<Rational> density;   // colex-indexed
    std::vector<std::uint8_t> regular;  // colex-indexed
    Rational d_threshold = 0;

    std::size_t triple_count() const { return density.size(); }
    const Rational& d(const ClusterTriple& x) const { return density[colex_rank(x)]; }
    bool is_regular(const ClusterTriple& x) const { return regular[colex_rank(x)] != 0; }
    // X ∈ R_d: regular and d(X) >= d_threshold.
    bool in_reduced(const ClusterTriple& x) const;
};

// ReducedGraph with every triple labelled regular and zero density.
ReducedGraph make_reduced_graph(int t, int m, Rational d_threshold);

// R_d restricted to `clusters` as a 3-graph on 1..|clusters| (cluster
// clusters[i] becomes vertex i + 1).
Hypergraph3 reduced_hypergraph(const ReducedGraph& r, const std::vector<int>& clusters);

// Σ_{X ∋ y} d(X) / C(t-1, 2).
Rational relative_degree(const ReducedGraph& r, int y);
// |{X ∋ y : X ∈ R_d}| / C(t-1, 2).
Rational relative_degree_thresholded(const ReducedGraph& r, int y);
// d(v) / C(n-1, 2).
Rational relative_degree(const Hypergraph3& h, Vertex v);

// Fraction of triples containing y labelled irregular.
Rational zeta(const ReducedGraph& r, int y);

struct Lemma8Row {
    int cluster = 0;
    Rational thresholded_degree;  // left side
    Rational bound;               // weighted degree - d - zeta
    bool holds = false;
};

std::vector<Lemma8Row> lemma8_check(const ReducedGraph& r);

// A sub-polyad Q induced by vertex subsets of the three clusters whose
// density differs from d by more than eps while |K_3(Q)| > eps |K_3(polyad)|.
struct IrregularityWitness {
    ClusterTriple x{};
    std::array<std::vector<int>, 3> local_subsets;  // sorted local indices
    PolyadCount sub;
    PolyadCount whole;
};

// Tries `samples` starting sub-polyads (the whole polyad, then random vertex
// subsets) and refines each greedily, dropping the vertex that widens the
// density gap most. A miss is not a proof of regularity.
std::optional<IrregularityWitness> irregularity_witness(const Hypergraph3& h, const WeakSlice& s,
                                                        const ClusterTriple& x, const Rational& d,
                                                        const Rational& eps, int samples, std::uint64_t seed);

// Recounts both densities from scratch and re-checks both gaps.
bool verify_witness(const Hypergraph3& h, const WeakSlice& s, const IrregularityWitness& w,
                    const Rational& d, const Rational& eps);

struct ReductionParams {
    Rational d_threshold = make_rational(1, 10);
    Rational eps = make_rational(1, 5);
    int samples = 64;
    std::uint64_t seed = 0;
};

// Densities for every triple plus labels from the witness search (regular
// means no witness was found). samples = 0 skips the search.
ReducedGraph build_reduced_graph(const Hypergraph3& h, const WeakSlice& s, const ReductionParams& params);

// Clusters in fewer than threshold_fraction · C(t,2) irregular triples (or in
// none at all), trimmed largest id first to a multiple of 3.
std::vector<int> good_clusters(const ReducedGraph& r, const Rational& threshold_fraction);

}  // namespace tcl
