#include "doctest.h"
#include "subclique/baseline.hpp"
#include "subclique/estimator.hpp"
#include "test_util.hpp"

using namespace subclique;

TEST_SUITE_BEGIN("estimator");

TEST_CASE("triangle-free input always reports zero") {
    const Graph g = test::path_graph(100);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Params p = derive_params(g.n(), 3, static_cast<double>(g.m()), 2, 0.5,
                                 0.1, seed);
        QueryOracle oracle(g);
        const auto report = approximate_cliques(oracle, p);
        REQUIRE(report.ok());
        CHECK(report.estimate == 0.0);
        CHECK(report.chi_sum == 0);
    }
}

TEST_CASE("K4 estimates concentrate around 4") {
    const Graph g = test::complete_graph(4);
    uint32_t hits = 0;
    const uint32_t trials = 200;
    for (uint32_t trial = 0; trial < trials; ++trial) {
        Params p = derive_params(4, 3, 12, 4, 0.5, 0.1, 1000 + trial);
        QueryOracle oracle(g);
        const auto report = approximate_cliques(oracle, p);
        REQUIRE(report.ok());
        // step-6 formula identity: estimate reconstructible from the report
        const double scale = 12.0 * p.theta_deg / 1.0;  // m(S)*theta^{k-2}/((k-2)!*(s/n))
        CHECK(report.estimate ==
              doctest::Approx(scale * static_cast<double>(report.chi_sum) /
                              static_cast<double>(report.q_used)));
        CHECK(report.upfront_mode);  // q far exceeds mbar on a desk graph
        if (report.estimate >= 2.0 && report.estimate <= 6.0) ++hits;
    }
    CHECK(hits >= 180);  // (1 +- 0.5)*4 in at least 90% of runs
}

TEST_CASE("upfront read aborts when mbar is a gross underestimate") {
    // K20: m = 380; mbar = 100 passes the T acceptance (380 <= 400) but the
    // upfront read sees more than mbar/(1-eps) = 200 ordered edges
    const Graph g = test::complete_graph(20);
    Params p = derive_params(g.n(), 3, 100, 31, 0.5, 0.1, 1);
    QueryOracle oracle(g);
    const auto report = approximate_cliques(oracle, p);
    CHECK_FALSE(report.ok());
    CHECK(report.budget_exceeded);
    CHECK(report.upfront_mode);
}

TEST_CASE("typical-set failure propagates as fail") {
    const Graph g = test::complete_graph(10);  // m = 90 > 4*mbar = 12
    Params p = derive_params(g.n(), 3, 3, 1, 0.5, 0.1, 1);
    QueryOracle oracle(g);
    const auto report = approximate_cliques(oracle, p);
    CHECK_FALSE(report.ok());
    CHECK(report.typical_failed);
}

TEST_CASE("edgeless graph yields zero estimate") {
    const Graph g = test::graph_from_text("n 6\n");
    REQUIRE(g.m() == 0);
    Params p = derive_params(g.n(), 3, 1, 1, 0.5, 0.1, 40);
    QueryOracle oracle(g);
    const auto report = approximate_cliques(oracle, p);
    REQUIRE(report.ok());
    CHECK(report.estimate == 0.0);
    CHECK(report.q_used == 0);
}

TEST_CASE("resolution floor returns the exact count") {
    const Graph g = test::complete_graph(4);
    // eps = 0.02 is below 1/12^{3/2} ~ 0.024
    Params p = derive_params(4, 3, 12, 4, 0.02, 0.1, 1);
    REQUIRE(p.exact_route);
    QueryOracle oracle(g);
    const auto report = approximate_cliques(oracle, p);
    REQUIRE(report.ok());
    CHECK(report.exact_route);
    CHECK(report.estimate == 4.0);
    // the whole graph was read through the oracle
    CHECK(report.queries.neighbor == g.m());
    CHECK(report.queries.degree == g.n());
}

TEST_CASE("realized partition is appropriate and loses almost nothing") {
    // path + K8: every K8 vertex is far below both popularity thresholds
    const Graph g = gen_path_plus_clique(300, 8);
    const auto census = count_cliques_exact(g, 3);
    Params p = derive_params(g.n(), 3, 0.9 * static_cast<double>(g.m()),
                             static_cast<double>(census.total) / 2.0, 0.5, 0.1, 3);
    QueryOracle oracle(g);
    Rng rng(9);
    const TypicalSet t = sample_degrees_typical(oracle, p, rng);
    REQUIRE(t.accepted);
    const auto verdicts = realize_partition(oracle, t, p, rng);

    const auto audit = unassigned_clique_mass(g, verdicts, 3);
    CHECK(audit.total == census.total);
    CHECK(static_cast<double>(audit.unassigned) <=
          p.eps_bar * static_cast<double>(census.total));
    // corollary: assigned mass within [(1-eps_bar) C_k, C_k]
    CHECK(audit.assigned_sum() + audit.unassigned == census.total);
    CHECK(static_cast<double>(audit.assigned_sum()) >=
          (1.0 - p.eps_bar) * static_cast<double>(census.total));
}

TEST_CASE("sampled S keeps its assigned-clique share") {
    // 2000-blade wheel: 2000 unit-weight tips spread the mass thin enough
    // for a quarter-size S to concentrate
    const Graph g = test::blade_wheel(2000);
    const auto census = count_cliques_exact(g, 3);
    REQUIRE(census.total == 2000);
    Params p = derive_params(g.n(), 3, static_cast<double>(g.m()),
                             static_cast<double>(census.total), 0.5, 0.1, 4);

    std::vector<Verdict> verdicts(g.n(), Verdict::unpopular);
    const auto audit = unassigned_clique_mass(g, verdicts, 3);

    const uint64_t s = 1000;
    const double expect =
        static_cast<double>(s) / g.n() * static_cast<double>(census.total);
    const double lo = (1 - p.eps_bar) * (1 - p.eps_bar) * expect;
    const double hi = (1 + p.eps_bar) * (1 + p.eps_bar) * expect;

    Rng rng(12);
    uint32_t ok_draws = 0;
    const uint32_t draws = 1000;
    for (uint32_t d = 0; d < draws; ++d) {
        double alpha_s = 0;
        for (uint64_t i = 0; i < s; ++i)
            alpha_s += static_cast<double>(
                audit.alpha[rng.uniform_index(g.n())]);
        if (alpha_s >= lo && alpha_s <= hi) ++ok_draws;
    }
    CHECK(static_cast<double>(ok_draws) / draws >= 1.0 - p.delta_bar);
}

TEST_CASE("expected estimate equals the assigned mass at S = V, T = V") {
    // with every sampling layer exact, E[estimate] reduces to alpha(V);
    // verified symbolically from the enumerated tuple set, then spot-checked
    // against one long run
    const Graph g = test::complete_graph(5);
    const auto census = count_cliques_exact(g, 3);
    Params p = derive_params(g.n(), 3, static_cast<double>(g.m()),
                             static_cast<double>(census.total), 0.5, 0.1, 21);

    std::vector<VertexId> all(g.n());
    for (VertexId v = 0; v < g.n(); ++v) all[v] = v;
    const auto tuples = test::enumerate_tuple_set(g, 3, all);

    // every vertex is unpopular here, so chi fires exactly when u is the
    // order-minimum of the clique; the per-tuple probability is exactly
    // 1/(m * theta^{k-2})
    std::vector<Verdict> verdicts(g.n(), Verdict::unpopular);
    double expected_estimate = 0;
    const double per_tuple =
        1.0 / (static_cast<double>(g.m()) * p.theta_pow_k_minus_2());
    for (const auto& [key, mult] : tuples) {
        // chi = 1 iff key[0] is the order-first unpopular vertex of the set
        VertexId best = key[0];
        for (size_t i = 1; i < key.size(); ++i)
            if (precedes(g, key[i], best)) best = key[i];
        if (best != key[0]) continue;
        expected_estimate += static_cast<double>(mult) * per_tuple;
    }
    expected_estimate *= static_cast<double>(g.m()) * p.theta_pow_k_minus_2() /
                         (p.factorial_k_minus_2() * 1.0);
    const auto audit = unassigned_clique_mass(g, verdicts, 3);
    CHECK(expected_estimate ==
          doctest::Approx(static_cast<double>(audit.assigned_sum())).epsilon(1e-9));

    QueryOracle oracle(g);
    const auto report = approximate_cliques(oracle, p);
    REQUIRE(report.ok());
    CHECK(report.estimate ==
          doctest::Approx(expected_estimate).epsilon(0.15));
}

TEST_SUITE_END();
