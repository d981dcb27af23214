#include <doctest.h>

#include "helpers.hpp"
#include "tcl/cycle.hpp"
#include "tcl/generators.hpp"
#include "tcl/pipeline.hpp"

using namespace tcl;

namespace {

PipelineParams params_with_seed(std::uint64_t seed) {
    PipelineParams p;
    p.seed = seed;
    return p;
}

}  // namespace

TEST_CASE("complete 3-graph runs end to end") {
    const auto h = testing::complete(30);
    const auto rep = run_pipeline(h, params_with_seed(4));
    CHECK(rep.ok());
    CHECK(rep.n == 30);
    CHECK(rep.m == 5);
    CHECK(rep.deleted.empty());
    CHECK(rep.density == 1);
    CHECK(rep.regular_fraction == 1);
    CHECK(rep.reduced_edges == 20);
    CHECK(rep.lemma8_violations == 0);
    CHECK(rep.good.size() == 6);
    REQUIRE(rep.matching);
    CHECK(rep.matching->total_weight == 2);
    REQUIRE(rep.cycle);
    REQUIRE(rep.cycle->cycle);
    CHECK(rep.cycle->cycle->length() == 30);
    CHECK(validate_cycle(h, rep.cycle->cycle->order).valid());
    for (const auto& stage : rep.stages) CHECK(stage.status == StageStatus::Ok);
}

TEST_CASE("deleted vertices when t does not divide n") {
    const auto h = testing::complete(32);
    const auto rep = run_pipeline(h, params_with_seed(9));
    CHECK(rep.ok());
    CHECK(rep.deleted.size() == 2);
    REQUIRE(rep.cycle);
    REQUIRE(rep.cycle->cycle);
    CHECK(validate_cycle(h, rep.cycle->cycle->order).valid());
}

TEST_CASE("extremal instances fail at the fractional matching stage") {
    const auto h = extremal(30, 6).h;
    for (std::uint64_t seed : {0u, 1u, 2u}) {
        const auto rep = run_pipeline(h, params_with_seed(seed));
        CAPTURE(seed);
        CHECK(!rep.ok());
        REQUIRE(rep.failed_stage());
        CHECK(*rep.failed_stage() == "fracmatch");
        bool after = false;
        for (const auto& stage : rep.stages) {
            if (after) CHECK(stage.status == StageStatus::Skipped);
            if (stage.name == "fracmatch") {
                CHECK(stage.status == StageStatus::Failed);
                CHECK(!stage.message.empty());
                after = true;
            }
        }
        CHECK(after);
    }
}

TEST_CASE("reports are deterministic without timings") {
    const auto h = random_3graph(36, 0.8, 12);
    const auto a = to_json(run_pipeline(h, params_with_seed(5)), false).dump();
    const auto b = to_json(run_pipeline(h, params_with_seed(5)), false).dump();
    CHECK(a == b);
    const auto c = to_json(run_pipeline(h, params_with_seed(6)), false).dump();
    CHECK(a != c);
    CHECK(a.find("timings_ms") == std::string::npos);
    CHECK(to_json(run_pipeline(h, params_with_seed(5)), true).dump().find("timings_ms") != std::string::npos);
}

TEST_CASE("default good fraction") {
    CHECK(default_good_fraction(make_rational(1, 4)) == 1);
    CHECK(default_good_fraction(make_rational(1, 100)) == make_rational(1, 5));
    CHECK(default_good_fraction(make_rational(1, 5)) == make_rational(894427, 1000000));
}
