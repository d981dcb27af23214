#include "tcl/generators.hpp"

#include <algorithm>
#include <cmath>

#include "tcl/errors.hpp"
#include "tcl/random.hpp"
#include "tcl/rational.hpp"

namespace tcl {

ExtremalInstance extremal(int n, int a) {
    if (n < 3) throw InvalidArgument("extremal construction needs n >= 3");
    if (a < 1 || a > n) throw InvalidArgument("extremal construction needs 1 <= a <= n");
    ExtremalInstance inst;
    for (Vertex v = 1; v <= n; ++v) (v <= a ? inst.a : inst.b).push_back(v);
    std::vector<Triple> edges;
    for (Vertex x = 1; x <= n; ++x) {
        for (Vertex y = x + 1; y <= n; ++y) {
            for (Vertex z = y + 1; z <= n; ++z) {
                if (x <= a) edges.push_back({x, y, z});  // x is the smallest, so x <= a iff the triple meets A
            }
        }
    }
    inst.h = Hypergraph3(n, std::move(edges));
    const auto b_size = static_cast<std::int64_t>(inst.b.size());
    inst.predicted_min_degree = binom(n - 1, 2) - (b_size == 0 ? 0 : binom(b_size - 1, 2));
    inst.cycle_upper_bound = 3 * a;
    if (min_degree(inst.h, 1) != inst.predicted_min_degree) {
        throw InvariantViolation("extremal minimum degree disagrees with the closed formula",
                                 std::to_string(min_degree(inst.h, 1)));
    }
    return inst;
}

ExtremalInstance extremal_from_eta(int n, double eta) {
    const int a = static_cast<int>(std::floor(((1.0 - eta) * n - 1.0) / 3.0));
    return extremal(n, a);
}

Hypergraph3 random_3graph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
    if (n < 0) throw InvalidArgument("negative vertex count");
    Rng rng(seed);
    std::vector<Triple> edges;
    for (Vertex x = 1; x <= n; ++x) {
        for (Vertex y = x + 1; y <= n; ++y) {
            for (Vertex z = y + 1; z <= n; ++z) {
                if (rng.bernoulli(p)) edges.push_back({x, y, z});
            }
        }
    }
    return Hypergraph3(n, std::move(edges));
}

MinDegreeSample random_min_degree_3graph(int n, int delta_target, std::uint64_t seed, int max_attempts,
                                         double p_start) {
    if (n < 3) throw InvalidArgument("need n >= 3");
    if (delta_target > binom(n - 1, 2)) throw InvalidArgument("delta_target exceeds C(n-1, 2)");
    MinDegreeSample out;
    double p = std::clamp(p_start, 0.0, 1.0);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        ++out.attempts;
        out.final_p = p;
        auto h = random_3graph(n, p, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        const int delta = min_degree(h, 1);
        out.best_min_degree = std::max(out.best_min_degree, delta);
        if (delta >= delta_target) {
            out.graph = std::move(h);
            return out;
        }
        p = std::min(1.0, p + 0.01);
    }
    return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Pair> edges;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (rng.bernoulli(p)) edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

Graph random_graph_with_edges(int n, std::int64_t edges, std::uint64_t seed) {
    std::vector<Pair> all;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) all.push_back({u, v});
    }
    if (edges < 0 || edges > static_cast<std::int64_t>(all.size())) throw InvalidArgument("edge count out of range");
    Rng rng(seed);
    rng.shuffle(all);
    all.resize(static_cast<std::size_t>(edges));
    return Graph(n, std::move(all));
}

}  // namespace tcl
