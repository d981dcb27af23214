#include "tcl/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "tcl/errors.hpp"
#include "tcl/fractional.hpp"
#include "tcl/random.hpp"

namespace tcl {

namespace {

const char* status_name(StageStatus s) {
    switch (s) {
        case StageStatus::Ok: return "ok";
        case StageStatus::Failed: return "failed";
        case StageStatus::Skipped: return "skipped";
    }
    return "?";
}

class StageRunner {
public:
    explicit StageRunner(PipelineReport& report) : report_(report) {}

    // Runs body unless an earlier stage failed. body returns an error message,
    // empty on success.
    template <typename Body>
    bool run(const std::string& name, Body&& body) {
        StageRecord rec;
        rec.name = name;
        if (failed_) {
            report_.stages.push_back(rec);
            return false;
        }
        const auto start = std::chrono::steady_clock::now();
        try {
            rec.message = body();
        } catch (const std::exception& e) {
            rec.message = e.what();
        }
        rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        rec.status = rec.message.empty() ? StageStatus::Ok : StageStatus::Failed;
        failed_ = rec.status == StageStatus::Failed;
        report_.stages.push_back(rec);
        return !failed_;
    }

private:
    PipelineReport& report_;
    bool failed_ = false;
};

// Mean relative degree of the cluster's vertices in G = H minus deleted vertices.
Rational cluster_degree_in_g(const Hypergraph3& h, const WeakSlice& s, int cluster) {
    const int n_kept = s.t * s.m;
    Rational total = 0;
    for (Vertex v : s.clusters[static_cast<std::size_t>(cluster)]) {
        std::int64_t deg = 0;
        for (auto idx : h.edges_containing(v)) {
            const auto& e = h.edge(idx);
            if (s.cluster_of(e[0]) >= 0 && s.cluster_of(e[1]) >= 0 && s.cluster_of(e[2]) >= 0) ++deg;
        }
        total += make_rational(deg, binom(n_kept - 1, 2));
    }
    return total / s.m;
}

}  // namespace

Rational default_good_fraction(const Rational& eps) {
    const double root = 2.0 * std::sqrt(eps.get_d());
    return make_rational(std::llround(root * 1e6), 1'000'000);
}

std::optional<std::string> PipelineReport::failed_stage() const {
    for (const auto& s : stages) {
        if (s.status == StageStatus::Failed) return s.name;
    }
    return std::nullopt;
}

PipelineReport run_pipeline(const Hypergraph3& h, const PipelineParams& params) {
    PipelineReport rep;
    rep.n = h.n();
    rep.edges = h.edge_count();
    rep.min_degree = h.n() >= 1 ? min_degree(h, 1) : 0;
    rep.density = h.n() >= 3 ? make_rational(static_cast<std::int64_t>(h.edge_count()), binom(h.n(), 3)) : Rational(0);
    rep.t = params.t;
    rep.seed = params.seed;
    rep.d_threshold = params.d;
    rep.good_fraction = params.good_fraction ? *params.good_fraction : default_good_fraction(params.eps);

    StageRunner stages(rep);
    WeakSlice slice;
    ReducedGraph reduced;
    Hypergraph3 restricted;

    stages.run("slice", [&] {
        slice = build_weak_slice(h, params.t, params.seed);
        rep.m = slice.m;
        rep.deleted = slice.deleted;
        return std::string();
    });

    stages.run("reduce", [&] {
        ReductionParams rp;
        rp.d_threshold = params.d;
        rp.eps = params.eps;
        rp.samples = params.samples;
        rp.seed = derive_seed(params.seed, 1);
        reduced = build_reduced_graph(h, slice, rp);
        std::size_t regular = 0;
        for (auto r : reduced.regular) regular += r;
        rep.regular_fraction = make_rational(static_cast<std::int64_t>(regular),
                                             static_cast<std::int64_t>(reduced.triple_count()));
        for (const auto& x : colex_triples(reduced.t)) rep.reduced_edges += reduced.in_reduced(x) ? 1 : 0;
        for (const auto& row : lemma8_check(reduced)) rep.lemma8_violations += row.holds ? 0 : 1;
        double gap = 0.0;
        for (int y = 0; y < reduced.t; ++y) {
            gap += std::abs(Rational(relative_degree(reduced, y) - cluster_degree_in_g(h, slice, y)).get_d());
        }
        rep.mean_degree_gap = gap / reduced.t;
        if (rep.lemma8_violations) return std::string("relative degree inequality failed on some cluster");
        return std::string();
    });

    stages.run("good_clusters", [&] {
        rep.good = good_clusters(reduced, rep.good_fraction);
        if (rep.good.size() < 3) return "only " + std::to_string(rep.good.size()) + " good clusters after trimming";
        return std::string();
    });

    stages.run("fracmatch", [&] {
        restricted = reduced_hypergraph(reduced, rep.good);
        const auto c = static_cast<std::int64_t>(rep.good.size());
        rep.restricted_min_degree = min_degree(restricted, 1);
        rep.restricted_bound = make_rational(5 * binom(c, 2), 9);
        const auto outcome = lemma_fracmatch(restricted);
        rep.matching_component = outcome.component;
        // Relabel R' vertices back to cluster ids.
        FractionalMatching m;
        m.n = reduced.t;
        m.support_component = outcome.component;
        for (std::size_t i = 0; i < outcome.matching.edges.size(); ++i) {
            const auto& e = outcome.matching.edges[i];
            m.edges.push_back(make_triple(rep.good[static_cast<std::size_t>(e[0] - 1)] + 1,
                                          rep.good[static_cast<std::size_t>(e[1] - 1)] + 1,
                                          rep.good[static_cast<std::size_t>(e[2] - 1)] + 1));
            m.weights.push_back(outcome.matching.weights[i]);
        }
        m.total_weight = outcome.matching.total_weight;
        // Keep canonical edge order after relabelling.
        std::vector<std::size_t> order(m.edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return m.edges[a] < m.edges[b]; });
        FractionalMatching sorted = m;
        for (std::size_t i = 0; i < order.size(); ++i) {
            sorted.edges[i] = m.edges[order[i]];
            sorted.weights[i] = m.weights[order[i]];
        }
        rep.matching = std::move(sorted);
        return std::string();
    });

    stages.run("cycle", [&] {
        CycleSearchParams cp = params.cycle;
        cp.seed = derive_seed(params.seed, 2);
        auto result = matching_guided_cycle(h, slice, reduced, *rep.matching, cp);
        std::string failure = result.failure;
        rep.cycle = std::move(result);
        return failure;
    });

    return rep;
}

Json to_json(const PipelineReport& r, bool timings) {
    Json stages = Json::array();
    for (const auto& s : r.stages) {
        Json st = {{"name", s.name}, {"status", status_name(s.status)}};
        if (!s.message.empty()) st["message"] = s.message;
        stages.push_back(st);
    }
    Json j;
    j["input"] = {{"n", r.n}, {"edges", r.edges}, {"min_degree", r.min_degree}, {"density", to_string(r.density)}};
    j["slice"] = {{"t", r.t}, {"m", r.m}, {"seed", r.seed}, {"deleted", r.deleted}, {"deleted_count", r.deleted.size()}};
    j["reduced"] = {{"d_threshold", to_string(r.d_threshold)},
                    {"regular_fraction", to_string(r.regular_fraction)},
                    {"reduced_edges", r.reduced_edges},
                    {"lemma8_violations", r.lemma8_violations},
                    {"mean_degree_gap", r.mean_degree_gap},
                    {"good_fraction", to_string(r.good_fraction)},
                    {"good_clusters", r.good},
                    {"good_count", r.good.size()}};
    j["restricted"] = {{"min_degree", r.restricted_min_degree}, {"five_ninths_bound", to_string(r.restricted_bound)}};
    j["matching"] = r.matching ? to_json(*r.matching) : Json(nullptr);
    if (r.cycle) {
        Json c = {{"target_length", to_string(r.cycle->target_length)},
                  {"longest_path_length", r.cycle->longest_path.size()},
                  {"restarts_used", r.cycle->restarts_used}};
        Json targets = Json::object();
        for (std::size_t i = 0; i < r.cycle->target.size(); ++i) targets[std::to_string(i)] = to_string(r.cycle->target[i]);
        c["targets"] = targets;
        if (r.cycle->cycle) {
            c["cycle"] = to_json(*r.cycle->cycle, true, r.cycle->coverage);
        } else {
            c["cycle"] = nullptr;
            c["failure"] = r.cycle->failure;
        }
        j["cycle"] = c;
    } else {
        j["cycle"] = nullptr;
    }
    j["stages"] = stages;
    const auto failed = r.failed_stage();
    j["failed_stage"] = failed ? Json(*failed) : Json(nullptr);
    if (timings) {
        Json t = Json::object();
        for (const auto& s : r.stages) t[s.name] = s.millis;
        j["timings_ms"] = t;
    }
    return j;
}

}  // namespace tcl
