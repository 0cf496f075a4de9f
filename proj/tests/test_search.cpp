#include <cmath>

#include "doctest.h"
#include "subclique/search.hpp"
#include "test_util.hpp"

using namespace subclique;

TEST_SUITE_BEGIN("search");

TEST_CASE("config derivation") {
    const SearchConfig cfg = make_search_config(1000, 0.5);
    CHECK(cfg.eps == 0.25);  // capped
    CHECK(cfg.eps_user == 0.5);
    CHECK(cfg.B == 1024.0);  // ceiling power of two
    CHECK(cfg.delta_prime == doctest::Approx(1.0 / 20));
    const double expect_r =
        std::ceil((4.0 / 0.25) * std::log(2.0 * 100.0 / 0.05));
    CHECK(cfg.r_search == static_cast<uint64_t>(expect_r));
    CHECK(cfg.delta_inner ==
          doctest::Approx(cfg.delta_prime / (2.0 * static_cast<double>(cfg.r_search))));
}

TEST_CASE("exact estimator stops at the first certifiable guess") {
    const double truth = 700.0;
    const SearchConfig cfg = make_search_config(4096, 0.25);
    const auto result = geometric_search(
        [&](double, double, double) { return std::optional<double>(truth); }, cfg);
    REQUIRE(result.found);
    CHECK(result.value == truth);
    // stop fires at the largest power of two with truth >= (1+eps)*abar
    const auto& stop = result.trajectory.back();
    CHECK(stop.stopped);
    CHECK(stop.abar == 512.0);
    CHECK(truth >= (1 + cfg.eps) * stop.abar);
    CHECK(truth < (1 + cfg.eps) * stop.abar * 2);
}

TEST_CASE("overestimating stub never certifies and exhausts") {
    // returns V(1+2eps) above V and 0 at or below it; no power of two lands
    // where the stop condition could fire
    const double truth = 5.0;
    const SearchConfig cfg = make_search_config(64, 0.25);
    const auto result = geometric_search(
        [&](double guess, double eps, double) {
            return std::optional<double>(guess > truth ? truth * (1 + 2 * eps) : 0.0);
        },
        cfg);
    CHECK_FALSE(result.found);
    CHECK(result.floor_seen);
    CHECK(result.floor_value == 0.0);
}

TEST_CASE("trajectory structure matches the halving sweep") {
    const SearchConfig cfg = make_search_config(16, 0.25);
    const auto result = geometric_search(
        [&](double, double, double) { return std::optional<double>(0.0); }, cfg);
    CHECK_FALSE(result.found);

    // passes with atilde = 16, 8, 4, 2, 1; pass j sweeps abar = 16 .. atilde
    size_t i = 0;
    for (double atilde = 16.0; atilde >= 1.0; atilde /= 2.0) {
        for (double abar = 16.0; abar >= atilde; abar /= 2.0) {
            REQUIRE(i < result.trajectory.size());
            const auto& step = result.trajectory[i++];
            CHECK(step.atilde == atilde);
            CHECK(step.abar == abar);
            CHECK(step.r == cfg.r_search);
            CHECK(step.delta_inner == cfg.delta_inner);
            CHECK_FALSE(step.stopped);
        }
    }
    CHECK(i == result.trajectory.size());
}

TEST_CASE("estimator failures count as zero and are recorded") {
    const SearchConfig cfg = make_search_config(4, 0.25);
    const auto result = geometric_search(
        [&](double, double, double) { return std::optional<double>(); }, cfg);
    CHECK_FALSE(result.found);
    for (const auto& step : result.trajectory) {
        CHECK(step.fails == cfg.r_search);
        CHECK(step.x_min == 0.0);
    }
}

TEST_CASE("four-fifths success bound against hypothesis-faithful stubs") {
    // stub honoring the wrapper's contract: good guesses estimate within
    // (1 +- eps) with probability 1-delta; high guesses undershoot
    // (1+eps)*truth with probability eps/4; low guesses return garbage
    const double truth = 1000.0;
    const SearchConfig cfg = make_search_config(1 << 14, 0.25);
    Rng rng(2025);

    uint32_t good = 0;
    const uint32_t trials = 2000;
    for (uint32_t trial = 0; trial < trials; ++trial) {
        const auto stub = [&](double guess, double eps,
                              double delta) -> std::optional<double> {
            if (guess > truth) {
                if (rng.bernoulli(eps / 4)) return truth;
                return 10 * truth;
            }
            if (guess >= truth / 4) {
                if (rng.bernoulli(1 - delta))
                    return truth * (1 + eps * (2 * rng.uniform_double() - 1));
                return 0.0;
            }
            return 0.0;  // out-of-range guesses carry no guarantee
        };
        const auto result = geometric_search(stub, cfg);
        if (result.found && result.value >= (1 - cfg.eps) * truth &&
            result.value <= (1 + cfg.eps) * truth)
            ++good;
    }
    // theorem floor is 4/5; allow Monte-Carlo slack
    CHECK(static_cast<double>(good) / trials >= 0.75);
}

TEST_CASE("auto mode on the triangle") {
    const Graph g = test::triangle();
    Constants consts;
    consts.q_const = 0.05;  // keep the unit test cheap; acceptance runs bigger
    uint32_t good = 0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        QueryOracle oracle(g);
        const auto report =
            approximate_cliques_auto(oracle, 3, 0.5, -1.0, seed, consts);
        REQUIRE(report.ok());
        if (report.estimate > 0.5 && report.estimate < 1.5) ++good;
        CHECK_FALSE(report.trajectory.empty());
    }
    CHECK(good >= 15);
}

TEST_CASE("auto mode on an empty graph returns zero with a flag") {
    const Graph g = test::graph_from_text("n 5\n");
    QueryOracle oracle(g);
    const auto report = approximate_cliques_auto(oracle, 3, 0.5, -1.0, 7);
    REQUIRE(report.ok());
    CHECK(report.estimate == 0.0);
    CHECK(report.no_cliques_detectable);
}

TEST_CASE("auto mode on a triangle-free graph flags no cliques") {
    const Graph g = test::path_graph(50);
    Constants consts;
    consts.q_const = 0.05;
    QueryOracle oracle(g);
    const auto report = approximate_cliques_auto(oracle, 3, 0.5, -1.0, 3, consts);
    REQUIRE(report.ok());
    CHECK(report.estimate == 0.0);
    CHECK(report.search_exhausted);
    CHECK(report.no_cliques_detectable);
}

TEST_SUITE_END();
