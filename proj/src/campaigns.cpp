#include "tcl/campaigns.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <variant>

#include "tcl/cycle.hpp"
#include "tcl/errors.hpp"
#include "tcl/fractional.hpp"
#include "tcl/generators.hpp"
#include "tcl/matching.hpp"
#include "tcl/random.hpp"

namespace tcl {

Graph sample_five_ninths_graph(int n, std::uint64_t seed) {
    Rng rng(seed);
    const std::int64_t pairs = binom(n, 2);
    const std::int64_t minimum = 5 * pairs / 9 + 1;  // smallest e with 9e > 5 C(n,2)
    switch (rng.below(3)) {
        case 0:
            for (std::uint64_t attempt = 0;; ++attempt) {
                const double p = 0.56 + 0.44 * rng.uniform01();
                Graph g = random_graph(n, p, derive_seed(seed, attempt));
                if (above_five_ninths(g)) return g;
            }
        case 1:
            return random_graph_with_edges(n, minimum, rng.next());
        default: {
            std::vector<Vertex> order(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
            rng.shuffle(order);
            const auto clique = static_cast<std::size_t>(std::min(n, 2 * n / 3 + 1));
            std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
            for (std::size_t i = 0; i < clique; ++i) in[static_cast<std::size_t>(order[i])] = 1;
            const double q = 0.5 * rng.uniform01();
            std::vector<Pair> edges, rest;
            for (Vertex u = 1; u <= n; ++u) {
                for (Vertex v = u + 1; v <= n; ++v) {
                    if (in[u] && in[v]) edges.push_back({u, v});
                    else if (rng.bernoulli(q)) edges.push_back({u, v});
                    else rest.push_back({u, v});
                }
            }
            rng.shuffle(rest);
            while (9 * static_cast<std::int64_t>(edges.size()) <= 5 * pairs) {
                edges.push_back(rest.back());
                rest.pop_back();
            }
            return Graph(n, std::move(edges));
        }
    }
}

Hypergraph3 sample_five_ninths_3graph(int n, std::uint64_t seed) {
    const int target = static_cast<int>(5 * binom(n, 2) / 9 + 1);
    Rng rng(seed);
    for (std::uint64_t round = 0;; ++round) {
        const double p_start = 0.6 + 0.3 * rng.uniform01();
        auto sample = random_min_degree_3graph(n, target, derive_seed(seed, round), 1000, p_start);
        if (sample.graph) return std::move(*sample.graph);
    }
}

ReducedGraph sample_reduced_graph(int t, std::uint64_t seed) {
    Rng rng(seed);
    const auto q = static_cast<std::int64_t>(1 + rng.below(12));
    ReducedGraph r = make_reduced_graph(t, 1, make_rational(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(q) + 1)), q));
    const auto mode = rng.below(3);
    const int focus = static_cast<int>(rng.below(static_cast<std::uint64_t>(t)));
    const double irregular_rate = rng.uniform01();
    for (const auto& x : colex_triples(t)) {
        const auto rank = colex_rank(x);
        const bool touches = x[0] == focus || x[1] == focus || x[2] == focus;
        switch (mode) {
            case 0:
                r.density[rank] = make_rational(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(q) + 1)), q);
                r.regular[rank] = rng.bernoulli(irregular_rate) ? 0 : 1;
                break;
            case 1:
                // Densities hugging the threshold, irregularity piled on one cluster.
                r.density[rank] = rng.bernoulli(0.5) ? r.d_threshold
                                                     : Rational(r.d_threshold - make_rational(1, 1000 * q));
                if (sgn(r.density[rank]) < 0) r.density[rank] = 0;
                r.regular[rank] = touches && rng.bernoulli(irregular_rate) ? 0 : 1;
                break;
            default:
                r.density[rank] = rng.bernoulli(0.5) ? 1 : 0;
                r.regular[rank] = touches ? 0 : (rng.bernoulli(irregular_rate) ? 0 : 1);
                break;
        }
    }
    return r;
}

MixedInstance sample_mixed_3graph(std::uint64_t seed) {
    Rng rng(seed);
    if (rng.below(4) == 0) {
        const int n = 6 + static_cast<int>(rng.below(7));
        const int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>((n - 1) / 3)));
        return {extremal(n, a).h, true};
    }
    const int n = 4 + static_cast<int>(rng.below(9));
    const double p = 0.05 + 0.95 * rng.uniform01();
    return {random_3graph(n, p, rng.next()), false};
}

namespace {

using Check = std::function<std::optional<std::string>(int size, int index, std::uint64_t seed)>;

struct Campaign {
    std::vector<int> default_sizes;
    // Instances per size; extremal-bound enumerates all a instead of sampling.
    std::function<int(int size, int trials)> count;
    Check check;
};

std::string tag(int size, int index) { return "n=" + std::to_string(size) + " #" + std::to_string(index) + ": "; }

std::optional<std::string> check_graphmeet(int n, int, std::uint64_t seed) {
    const Graph g1 = sample_five_ninths_graph(n, derive_seed(seed, 0));
    const Graph g2 = sample_five_ninths_graph(n, derive_seed(seed, 1));
    const auto report = graphmeet_verify(g1, g2);
    if (!report.all_verdicts()) return "a verdict failed";
    if (!graphmeet_consistent(report, g1, g2)) return "evidence does not reproduce the verdicts";
    for (const auto& m : report.matchings) {
        if (m.size() != report.matching_target) return "matching size differs from n/3";
    }
    return std::nullopt;
}

std::optional<std::string> check_fracmatch(int n, int, std::uint64_t seed) {
    const auto h = sample_five_ninths_3graph(n, seed);
    const auto out = lemma_fracmatch(h);
    const auto labels = tight_components(h);
    if (out.matching.total_weight * 3 != n) return "total weight is not n/3";
    if (!is_valid_fractional_matching(h, out.matching, &labels)) return "matching infeasible";
    for (const auto& e : out.matching.edges) {
        if (labels.labels[*h.index_of(e)] != out.component) return "support leaves H'";
    }
    if (9 * static_cast<std::int64_t>(out.subgraph_min_degree) < 4 * binom(n, 2)) return "δ(H') below (4/9) C(n,2)";
    return std::nullopt;
}

std::optional<std::string> check_farkas(int, int, std::uint64_t seed) {
    const auto inst = sample_mixed_3graph(seed);
    const auto& h = inst.h;
    const auto labels = tight_components(h);
    if (labels.component_count == 0) return std::nullopt;
    for (int c = 0; c < labels.component_count; ++c) {
        const auto result = perfect_or_certificate(h, labels, c);
        std::vector<Triple> edges;
        for (auto i : labels.edges_with_label(c)) edges.push_back(h.edge(i));
        if (const auto* m = std::get_if<FractionalMatching>(&result)) {
            if (inst.extremal) return std::string("extremal instance returned a perfect matching");
            if (!m->perfect() || !is_valid_fractional_matching(h, *m, &labels)) return std::string("bad perfect matching");
        } else {
            const auto& cert = std::get<FarkasCertificate>(result);
            if (!is_valid_certificate(cert, edges)) return std::string("certificate fails re-check");
            if (max_fractional_matching(h, labels, c).perfect()) return std::string("certificate and perfect matching coexist");
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_lemma8(int t, int, std::uint64_t seed) {
    const auto r = sample_reduced_graph(t, seed);
    for (const auto& row : lemma8_check(r)) {
        if (!row.holds) return "cluster " + std::to_string(row.cluster) + " violates the inequality";
    }
    return std::nullopt;
}

std::optional<std::string> check_erdos_gallai(int n, int, std::uint64_t seed) {
    Rng rng(seed);
    const Graph g = random_graph(n, rng.uniform01(), rng.next());
    const auto nu = static_cast<std::int64_t>(max_matching(g).size());
    for (std::int64_t k = 1; 2 * k - 1 <= n; ++k) {
        if (static_cast<std::int64_t>(g.edge_count()) > erdos_gallai_threshold(n, k) && nu < k) {
            return "e(G) = " + std::to_string(g.edge_count()) + " exceeds the threshold for k = " + std::to_string(k) +
                   " but ν(G) = " + std::to_string(nu);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_extremal(int n, int index, std::uint64_t) {
    const int a = index + 1;
    const auto inst = extremal(n, a);
    const auto b = static_cast<std::int64_t>(n - a);
    if (min_degree(inst.h, 1) != binom(n - 1, 2) - (b == 0 ? 0 : binom(b - 1, 2))) return "δ differs from formula";
    const auto cycle = longest_tight_cycle(inst.h);
    const int expected = std::min(3 * a, n);
    if (expected < static_cast<int>(kMinCycleLength)) {
        if (cycle) return "found a cycle where none should exist";
    } else if (!cycle || static_cast<int>(cycle->length()) != expected) {
        return "longest cycle " + std::to_string(cycle ? cycle->length() : 0) + " != " + std::to_string(expected);
    }
    return std::nullopt;
}

const std::map<std::string, Campaign>& registry() {
    static const std::map<std::string, Campaign> campaigns = {
        {"graphmeet", {{9, 12, 15, 18, 21, 24}, [](int, int trials) { return trials; }, check_graphmeet}},
        {"fracmatch", {{9, 12, 15}, [](int, int trials) { return trials; }, check_fracmatch}},
        {"farkas", {{0}, [](int, int trials) { return trials; }, check_farkas}},
        {"lemma8", {{4, 5, 6, 7, 8, 9, 10}, [](int, int trials) { return trials; }, check_lemma8}},
        {"erdos-gallai", {{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, [](int, int trials) { return trials; }, check_erdos_gallai}},
        {"extremal-bound", {{3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, [](int n, int) { return n; }, check_extremal}},
    };
    return campaigns;
}

}  // namespace

std::vector<std::string> campaign_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : registry()) names.push_back(name);
    return names;
}

CampaignResult run_campaign(const std::string& name, const CampaignParams& params) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw InvalidArgument("unknown campaign '" + name + "'");
    const Campaign& campaign = it->second;
    const auto& sizes = params.sizes.empty() ? campaign.default_sizes : params.sizes;

    struct Task {
        int size;
        int index;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        const int count = campaign.count(sizes[s], params.trials);
        for (int i = 0; i < count; ++i) {
            tasks.push_back({sizes[s], i, derive_seed(derive_seed(params.seed, s), static_cast<std::uint64_t>(i))});
        }
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::optional<std::string>> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                outcomes[i] = campaign.check(tasks[i].size, tasks[i].index, tasks[i].seed);
            } catch (const std::exception& e) {
                outcomes[i] = std::string("exception: ") + e.what();
            }
        }
    };
    const int jobs = std::max(1, params.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    CampaignResult result;
    result.name = name;
    result.trials = tasks.size();
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!outcomes[i]) {
            ++result.passed;
        } else if (result.failures.size() < 10) {
            result.failures.push_back(tag(tasks[i].size, tasks[i].index) + *outcomes[i]);
        }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace tcl
