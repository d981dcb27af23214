#include "tcl/slice.hpp"

#include <algorithm>
#include <numeric>

#include "tcl/errors.hpp"
#include "tcl/random.hpp"

namespace tcl {

std::size_t colex_rank(const ClusterTriple& x) {
    return static_cast<std::size_t>(binom(x[2], 3) + binom(x[1], 2) + x[0]);
}

std::vector<ClusterTriple> colex_triples(int t) {
    std::vector<ClusterTriple> out;
    out.reserve(static_cast<std::size_t>(binom(t, 3)));
    for (int k = 2; k < t; ++k) {
        for (int j = 1; j < k; ++j) {
            for (int i = 0; i < j; ++i) out.push_back({i, j, k});
        }
    }
    return out;
}

std::size_t WeakSlice::pair_rank(int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(binom(j, 2) + i);
}

bool WeakSlice::pair_edge(int ci, int xi, int cj, int xj) const {
    if (ci > cj) {
        std::swap(ci, cj);
        std::swap(xi, xj);
    }
    return pair_graphs[pair_rank(ci, cj)][static_cast<std::size_t>(xi * m + xj)] != 0;
}

void WeakSlice::set_pair_edge(int ci, int xi, int cj, int xj, bool present) {
    if (ci > cj) {
        std::swap(ci, cj);
        std::swap(xi, xj);
    }
    pair_graphs[pair_rank(ci, cj)][static_cast<std::size_t>(xi * m + xj)] = present ? 1 : 0;
}

int WeakSlice::cluster_of(Vertex v) const { return owner[static_cast<std::size_t>(v)]; }

WeakSlice build_weak_slice(const Hypergraph3& h, int t, std::uint64_t seed) {
    if (t < 3) throw InvalidArgument("a weak slice needs t >= 3 clusters");
    if (t > h.n()) throw InvalidArgument("more clusters than vertices");
    WeakSlice s;
    s.n = h.n();
    s.t = t;
    std::vector<Vertex> order(static_cast<std::size_t>(h.n()));
    std::iota(order.begin(), order.end(), 1);
    Rng rng(seed);
    rng.shuffle(order);
    const auto removed = static_cast<std::size_t>(h.n() % t);
    s.deleted.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(removed));
    std::sort(s.deleted.begin(), s.deleted.end());
    s.m = (h.n() - static_cast<int>(removed)) / t;
    s.owner.assign(static_cast<std::size_t>(h.n()) + 1, -1);
    s.clusters.resize(static_cast<std::size_t>(t));
    for (int c = 0; c < t; ++c) {
        auto first = order.begin() + static_cast<std::ptrdiff_t>(removed + static_cast<std::size_t>(c * s.m));
        s.clusters[c].assign(first, first + s.m);
        std::sort(s.clusters[c].begin(), s.clusters[c].end());
        for (Vertex v : s.clusters[c]) s.owner[static_cast<std::size_t>(v)] = c;
    }
    s.pair_graphs.assign(static_cast<std::size_t>(binom(t, 2)),
                         std::vector<std::uint8_t>(static_cast<std::size_t>(s.m * s.m), 1));
    return s;
}

Rational PolyadCount::density() const {
    if (supported == 0) return 0;
    return make_rational(edges, supported);
}

PolyadCount polyad_count(const Hypergraph3& h, const WeakSlice& s, const ClusterTriple& x,
                         const std::array<std::vector<int>, 3>& local) {
    PolyadCount out;
    const auto& c0 = s.clusters[static_cast<std::size_t>(x[0])];
    const auto& c1 = s.clusters[static_cast<std::size_t>(x[1])];
    const auto& c2 = s.clusters[static_cast<std::size_t>(x[2])];
    for (int i : local[0]) {
        for (int j : local[1]) {
            if (!s.pair_edge(x[0], i, x[1], j)) continue;
            for (int k : local[2]) {
                if (!s.pair_edge(x[0], i, x[2], k) || !s.pair_edge(x[1], j, x[2], k)) continue;
                ++out.supported;
                if (h.contains(c0[static_cast<std::size_t>(i)], c1[static_cast<std::size_t>(j)],
                               c2[static_cast<std::size_t>(k)])) {
                    ++out.edges;
                }
            }
        }
    }
    return out;
}

PolyadCount polyad_count(const Hypergraph3& h, const WeakSlice& s, const ClusterTriple& x) {
    std::vector<int> all(static_cast<std::size_t>(s.m));
    std::iota(all.begin(), all.end(), 0);
    return polyad_count(h, s, x, {all, all, all});
}

Rational relative_density(const Hypergraph3& h, const WeakSlice& s, const ClusterTriple& x) {
    if (!(0 <= x[0] && x[0] < x[1] && x[1] < x[2] && x[2] < s.t)) {
        throw InvalidArgument("cluster triple must be three distinct ascending cluster ids");
    }
    return polyad_count(h, s, x).density();
}

bool ReducedGraph::in_reduced(const ClusterTriple& x) const {
    const auto r = colex_rank(x);
    return regular[r] != 0 && density[r] >= d_threshold;
}

ReducedGraph make_reduced_graph(int t, int m, Rational d_threshold) {
    ReducedGraph r;
    r.t = t;
    r.m = m;
    r.d_threshold = std::move(d_threshold);
    r.density.assign(static_cast<std::size_t>(binom(t, 3)), Rational(0));
    r.regular.assign(r.density.size(), 1);
    return r;
}

Hypergraph3 reduced_hypergraph(const ReducedGraph& r, const std::vector<int>& clusters) {
    std::vector<int> position(static_cast<std::size_t>(r.t), -1);
    for (std::size_t i = 0; i < clusters.size(); ++i) position[static_cast<std::size_t>(clusters[i])] = static_cast<int>(i);
    std::vector<Triple> edges;
    for (const auto& x : colex_triples(r.t)) {
        if (position[x[0]] < 0 || position[x[1]] < 0 || position[x[2]] < 0) continue;
        if (r.in_reduced(x)) edges.push_back(make_triple(position[x[0]] + 1, position[x[1]] + 1, position[x[2]] + 1));
    }
    return Hypergraph3(static_cast<int>(clusters.size()), std::move(edges));
}

namespace {

void require_cluster(const ReducedGraph& r, int y) {
    if (r.t < 3) throw InvalidArgument("relative degree needs t >= 3");
    if (y < 0 || y >= r.t) throw InvalidArgument("cluster id out of range");
}

bool contains(const ClusterTriple& x, int y) { return x[0] == y || x[1] == y || x[2] == y; }

}  // namespace

Rational relative_degree(const ReducedGraph& r, int y) {
    require_cluster(r, y);
    Rational sum = 0;
    for (const auto& x : colex_triples(r.t)) {
        if (contains(x, y)) sum += r.d(x);
    }
    return sum / binom(r.t - 1, 2);
}

Rational relative_degree_thresholded(const ReducedGraph& r, int y) {
    require_cluster(r, y);
    std::int64_t count = 0;
    for (const auto& x : colex_triples(r.t)) {
        if (contains(x, y) && r.in_reduced(x)) ++count;
    }
    return make_rational(count, binom(r.t - 1, 2));
}

Rational relative_degree(const Hypergraph3& h, Vertex v) {
    if (h.n() < 3) throw InvalidArgument("relative degree needs n >= 3");
    if (v < 1 || v > h.n()) throw InvalidArgument("vertex out of range");
    return make_rational(h.vertex_degree(v), binom(h.n() - 1, 2));
}

Rational zeta(const ReducedGraph& r, int y) {
    require_cluster(r, y);
    std::int64_t irregular = 0;
    for (const auto& x : colex_triples(r.t)) {
        if (contains(x, y) && !r.is_regular(x)) ++irregular;
    }
    return make_rational(irregular, binom(r.t - 1, 2));
}

std::vector<Lemma8Row> lemma8_check(const ReducedGraph& r) {
    std::vector<Lemma8Row> rows;
    for (int y = 0; y < r.t; ++y) {
        Lemma8Row row;
        row.cluster = y;
        row.thresholded_degree = relative_degree_thresholded(r, y);
        row.bound = relative_degree(r, y) - r.d_threshold - zeta(r, y);
        row.holds = row.thresholded_degree >= row.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

// Counts of a sub-polyad together with each local vertex's share of them.
struct SubPolyad {
    PolyadCount count;
    std::array<std::vector<std::int64_t>, 3> supported;
    std::array<std::vector<std::int64_t>, 3> edges;
};

SubPolyad measure(const Hypergraph3& h, const WeakSlice& s, const ClusterTriple& x,
                  const std::array<std::vector<int>, 3>& local) {
    SubPolyad out;
    for (int side = 0; side < 3; ++side) {
        out.supported[side].assign(static_cast<std::size_t>(s.m), 0);
        out.edges[side].assign(static_cast<std::size_t>(s.m), 0);
    }
    const auto& c0 = s.clusters[static_cast<std::size_t>(x[0])];
    const auto& c1 = s.clusters[static_cast<std::size_t>(x[1])];
    const auto& c2 = s.clusters[static_cast<std::size_t>(x[2])];
    for (int i : local[0]) {
        for (int j : local[1]) {
            if (!s.pair_edge(x[0], i, x[1], j)) continue;
            for (int k : local[2]) {
                if (!s.pair_edge(x[0], i, x[2], k) || !s.pair_edge(x[1], j, x[2], k)) continue;
                const int e = h.contains(c0[static_cast<std::size_t>(i)], c1[static_cast<std::size_t>(j)],
                                         c2[static_cast<std::size_t>(k)]) ? 1 : 0;
                ++out.count.supported;
                out.count.edges += e;
                ++out.supported[0][static_cast<std::size_t>(i)];
                ++out.supported[1][static_cast<std::size_t>(j)];
                ++out.supported[2][static_cast<std::size_t>(k)];
                out.edges[0][static_cast<std::size_t>(i)] += e;
                out.edges[1][static_cast<std::size_t>(j)] += e;
                out.edges[2][static_cast<std::size_t>(k)] += e;
            }
        }
    }
    return out;
}

Rational gap(std::int64_t edges, std::int64_t supported, const Rational& d) {
    return abs(make_rational(edges, supported) - d);
}

// Drops one vertex at a time, always the one whose removal widens the density
// gap the most, while the sub-polyad keeps more than eps |K_3(polyad)| triples.
std::optional<IrregularityWitness> descend(const Hypergraph3& h, const WeakSlice& s, const ClusterTriple& x,
                                           const Rational& d, const Rational& eps, const PolyadCount& whole,
                                           std::array<std::vector<int>, 3> local) {
    const Rational floor = eps * whole.supported;
    SubPolyad sub = measure(h, s, x, local);
    if (!(Rational(sub.count.supported) > floor)) return std::nullopt;
    Rational current = gap(sub.count.edges, sub.count.supported, d);
    while (true) {
        if (current > eps) return IrregularityWitness{x, std::move(local), sub.count, whole};
        int best_side = -1;
        std::size_t best_pos = 0;
        Rational best = current;
        for (int side = 0; side < 3; ++side) {
            if (local[side].size() < 2) continue;
            for (std::size_t pos = 0; pos < local[side].size(); ++pos) {
                const auto v = static_cast<std::size_t>(local[side][pos]);
                const std::int64_t supported = sub.count.supported - sub.supported[side][v];
                if (!(Rational(supported) > floor)) continue;
                const Rational g = gap(sub.count.edges - sub.edges[side][v], supported, d);
                if (g > best) {
                    best = g;
                    best_side = side;
                    best_pos = pos;
                }
            }
        }
        if (best_side < 0) return std::nullopt;
        local[best_side].erase(local[best_side].begin() + static_cast<std::ptrdiff_t>(best_pos));
        sub = measure(h, s, x, local);
        current = best;
    }
}

}  // namespace

std::optional<IrregularityWitness> irregularity_witness(const Hypergraph3& h, const WeakSlice& s,
                                                        const ClusterTriple& x, const Rational& d,
                                                        const Rational& eps, int samples, std::uint64_t seed) {
    if (!(sgn(eps) > 0 && eps < 1)) throw InvalidArgument("eps must lie in (0, 1)");
    if (samples < 1) throw InvalidArgument("samples must be positive");
    const PolyadCount whole = polyad_count(h, s, x);
    for (int sample = 0; sample < samples; ++sample) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(sample)));
        std::array<std::vector<int>, 3> subsets;
        for (auto& sub : subsets) {
            std::vector<int> local(static_cast<std::size_t>(s.m));
            std::iota(local.begin(), local.end(), 0);
            if (sample > 0) {
                rng.shuffle(local);
                local.resize(1 + rng.below(static_cast<std::uint64_t>(s.m)));
                std::sort(local.begin(), local.end());
            }
            sub = std::move(local);
        }
        if (auto w = descend(h, s, x, d, eps, whole, std::move(subsets))) return w;
    }
    return std::nullopt;
}

bool verify_witness(const Hypergraph3& h, const WeakSlice& s, const IrregularityWitness& w, const Rational& d,
                    const Rational& eps) {
    const auto sub = polyad_count(h, s, w.x, w.local_subsets);
    const auto whole = polyad_count(h, s, w.x);
    return Rational(sub.supported) > eps * whole.supported && abs(sub.density() - d) > eps &&
           sub.supported == w.sub.supported && sub.edges == w.sub.edges;
}

ReducedGraph build_reduced_graph(const Hypergraph3& h, const WeakSlice& s, const ReductionParams& params) {
    ReducedGraph r = make_reduced_graph(s.t, s.m, params.d_threshold);
    for (const auto& x : colex_triples(s.t)) {
        const auto rank = colex_rank(x);
        r.density[rank] = relative_density(h, s, x);
        if (params.samples == 0) continue;
        const auto witness = irregularity_witness(h, s, x, r.density[rank], params.eps, params.samples,
                                                  derive_seed(params.seed, rank));
        r.regular[rank] = witness ? 0 : 1;
    }
    return r;
}

std::vector<int> good_clusters(const ReducedGraph& r, const Rational& threshold_fraction) {
    std::vector<std::int64_t> irregular(static_cast<std::size_t>(r.t), 0);
    for (const auto& x : colex_triples(r.t)) {
        if (r.is_regular(x)) continue;
        for (int c : x) ++irregular[static_cast<std::size_t>(c)];
    }
    const Rational limit = threshold_fraction * binom(r.t, 2);
    std::vector<int> good;
    for (int c = 0; c < r.t; ++c) {
        const auto count = irregular[static_cast<std::size_t>(c)];
        if (count == 0 || Rational(count) < limit) good.push_back(c);
    }
    good.resize(good.size() - good.size() % 3);
    return good;
}

}  // namespace tcl
