#include <doctest.h>

#include "oracles.hpp"
#include "tcl/campaigns.hpp"
#include "tcl/errors.hpp"
#include "tcl/hypergraph.hpp"

using namespace tcl;

TEST_CASE("samplers meet their density guarantees") {
    for (int n : {9, 12, 15}) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto g = sample_five_ninths_graph(n, seed);
            CHECK(g.n() == n);
            CHECK(9 * static_cast<std::int64_t>(g.edge_count()) > 5 * oracle::choose(n, 2));
            CHECK(g == sample_five_ninths_graph(n, seed));
        }
    }
    for (int n : {9, 12}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto h = sample_five_ninths_3graph(n, seed);
            CHECK(9 * static_cast<std::int64_t>(min_degree(h, 1)) > 5 * oracle::choose(n, 2));
        }
    }
    int extremal = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto mixed = sample_mixed_3graph(seed);
        CHECK(mixed.h.n() >= 4);
        CHECK(mixed.h.n() <= 12);
        extremal += mixed.extremal ? 1 : 0;
    }
    CHECK(extremal > 20);
    CHECK(extremal < 100);
    for (int t = 4; t <= 8; ++t) {
        const auto r = sample_reduced_graph(t, 3);
        CHECK(r.t == t);
        CHECK(r.triple_count() == static_cast<std::size_t>(oracle::choose(t, 3)));
        for (const auto& d : r.density) CHECK((sgn(d) >= 0 && d <= 1));
    }
}

TEST_CASE("every campaign passes at small sizes") {
    for (const auto& name : campaign_names()) {
        CampaignParams p;
        p.trials = 8;
        p.seed = 17;
        if (name == "graphmeet" || name == "fracmatch") p.sizes = {9};
        if (name == "lemma8") p.sizes = {5, 6};
        if (name == "erdos-gallai") p.sizes = {6, 7};
        if (name == "extremal-bound") p.sizes = {6, 7};
        const auto r = run_campaign(name, p);
        CAPTURE(name);
        CHECK(r.name == name);
        CHECK(r.trials > 0);
        CHECK(r.ok());
        CHECK(r.failures.empty());
    }
    CHECK_THROWS_AS(run_campaign("nosuch", {}), InvalidArgument);
}

TEST_CASE("campaign outcomes do not depend on the worker count") {
    CampaignParams p;
    p.sizes = {9, 12};
    p.trials = 12;
    p.seed = 3;
    const auto one = run_campaign("graphmeet", p);
    p.jobs = 3;
    const auto three = run_campaign("graphmeet", p);
    CHECK(one.trials == three.trials);
    CHECK(one.passed == three.passed);
    CHECK(one.failures == three.failures);
}
