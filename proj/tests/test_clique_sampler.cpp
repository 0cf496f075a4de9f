#include <map>

#include "doctest.h"
#include "subclique/clique_sampler.hpp"
#include "test_util.hpp"

using namespace subclique;
using test::TupleKey;

namespace {

struct SamplerFixture {
    Graph g;
    Params params;
    QueryOracle oracle;
    EdgeSampler s_sampler;
    TypicalSet typical;
    Rng rng;

    SamplerFixture(Graph graph, uint32_t k, std::vector<VertexId> s_members,
                   uint64_t seed = 123, double eps = 0.5)
        : g(std::move(graph)),
          params(test::default_params_for(g, k, 1, eps, 0.1, seed)),
          oracle(g),
          rng(seed) {
        s_sampler = EdgeSampler::build(s_members, query_degrees(oracle, s_members));
        Rng t_rng(seed + 1);
        typical = sample_degrees_typical(oracle, params, t_rng);
        REQUIRE(typical.accepted);
    }
};

// Frequency audit of sample_a_clique against the brute-forced tuple set.
// Returns {tv distance, success count}.
std::pair<double, uint64_t> audit(SamplerFixture& f,
                                  const std::vector<VertexId>& s_members,
                                  uint64_t calls) {
    const auto target = test::enumerate_tuple_set(f.g, f.params.k, s_members);
    double target_mass = 0;
    for (const auto& [key, mult] : target) target_mass += static_cast<double>(mult);

    std::map<TupleKey, uint64_t> hist;
    uint64_t successes = 0;
    for (uint64_t i = 0; i < calls; ++i) {
        const auto tuple =
            sample_a_clique(f.s_sampler, f.typical, f.oracle, f.params, f.rng);
        if (!tuple) continue;
        ++successes;
        // independent re-verification of the tuple contract
        for (uint32_t a = 0; a < tuple->k; ++a)
            for (uint32_t b = a + 1; b < tuple->k; ++b)
                REQUIRE(f.g.has_edge(tuple->vertex[a], tuple->vertex[b]));
        for (uint32_t j = 0; j + 2 < tuple->k; ++j)
            REQUIRE(precedes(f.g, tuple->v(), tuple->w(j)));
        REQUIRE(target.count(test::key_of(*tuple)) == 1);
        ++hist[test::key_of(*tuple)];
    }
    const double tv = test::total_variation(hist, successes, target, target_mass);
    return {tv, successes};
}

}  // namespace

TEST_SUITE_BEGIN("clique_sampler");

TEST_CASE("per-tuple probability on K4") {
    // m = 12, mbar = 12, k = 3, S = {0}: three tuples, each with
    // probability 1/(3 * 2*sqrt(12)) ~ 0.0481
    SamplerFixture f(test::complete_graph(4), 3, {0});
    REQUIRE(f.params.mbar == 12.0);

    const uint64_t calls = 1'000'000;
    std::map<TupleKey, uint64_t> hist;
    for (uint64_t i = 0; i < calls; ++i) {
        const auto tuple =
            sample_a_clique(f.s_sampler, f.typical, f.oracle, f.params, f.rng);
        if (tuple) ++hist[test::key_of(*tuple)];
    }
    REQUIRE(hist.size() == 3);
    const double per_tuple = 1.0 / (3.0 * f.params.theta_deg);
    CHECK(per_tuple == doctest::Approx(0.0481).epsilon(0.01));
    for (const auto& [key, count] : hist) {
        const double freq = static_cast<double>(count) / static_cast<double>(calls);
        CHECK(freq == doctest::Approx(per_tuple).epsilon(0.05));
    }
}

TEST_CASE("triangle-free graphs never yield a tuple") {
    SamplerFixture f(test::path_graph(10), 3, {0, 1, 2, 3, 4});
    for (uint64_t i = 0; i < 100'000; ++i)
        CHECK_FALSE(
            sample_a_clique(f.s_sampler, f.typical, f.oracle, f.params, f.rng));
}

TEST_CASE("uniformity across C(S)") {
    SUBCASE("K6, k=4, singleton S") {
        SamplerFixture f(test::complete_graph(6), 4, {2});
        const auto [tv, successes] = audit(f, {2}, 1'000'000);
        CHECK(successes > 1000);
        CHECK(tv < 0.02);
    }
    SUBCASE("two K4s sharing a vertex, k=3, S = {shared}") {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId a = 0; a < 4; ++a)
            for (VertexId b = a + 1; b < 4; ++b) edges.emplace_back(a, b);
        for (VertexId a : {0u, 4u, 5u, 6u})
            for (VertexId b : {0u, 4u, 5u, 6u})
                if (a < b) edges.emplace_back(a, b);
        SamplerFixture f(Graph::from_edges(7, edges), 3, {0});
        const auto [tv, successes] = audit(f, {0}, 1'000'000);
        CHECK(successes > 1000);
        CHECK(tv < 0.02);
    }
    SUBCASE("K5 plus pendant path, k=5, S = V") {
        Graph g = gen_path_plus_clique(12, 5);
        std::vector<VertexId> all(g.n());
        for (VertexId v = 0; v < g.n(); ++v) all[v] = v;
        SamplerFixture f(std::move(g), 5, all);
        // success probability ~6.5e-4; enough calls for ~25k tuples
        const auto [tv, successes] = audit(f, all, 40'000'000);
        CHECK(successes > 10'000);
        CHECK(tv < 0.02);
    }
}

TEST_CASE("absolute success probability") {
    // Pr[success] = |C(S)| / (m(S) * theta^{k-2}) with T = V
    SamplerFixture f(test::complete_graph(6), 3, {1, 3});
    const auto target = test::enumerate_tuple_set(f.g, 3, {1, 3});
    double tuple_count = 0;
    for (const auto& [key, mult] : target) tuple_count += static_cast<double>(mult);

    const uint64_t calls = 1'000'000;
    uint64_t successes = 0;
    for (uint64_t i = 0; i < calls; ++i)
        if (sample_a_clique(f.s_sampler, f.typical, f.oracle, f.params, f.rng))
            ++successes;

    const double p_expect =
        tuple_count / (static_cast<double>(f.s_sampler.m_of()) * f.params.theta_deg);
    const double p_hat = static_cast<double>(successes) / static_cast<double>(calls);
    const double se = std::sqrt(p_expect * (1 - p_expect) / static_cast<double>(calls));
    CHECK(p_hat >= (1 - f.params.eps_bar) * p_expect - 3 * se);
    CHECK(p_hat <= (1 + f.params.eps_bar) * p_expect + 3 * se);
}

TEST_CASE("low and high pivot regimes agree") {
    // x sits in a low triangle {x,y,z} and in {x,h1,h2} where both hubs
    // carry 25 pads: d(h) = 27 > theta = 2*sqrt(112) ~ 21.2
    std::vector<std::pair<VertexId, VertexId>> edges;
    const VertexId x = 0, y = 1, z = 2, h1 = 3, h2 = 4;
    edges.insert(edges.end(), {{x, y}, {x, z}, {y, z}, {x, h1}, {x, h2}, {h1, h2}});
    VertexId next = 5;
    for (int i = 0; i < 25; ++i) edges.emplace_back(h1, next++);
    for (int i = 0; i < 25; ++i) edges.emplace_back(h2, next++);
    SamplerFixture f(Graph::from_edges(next, edges), 3, {x});
    REQUIRE(static_cast<double>(f.g.degree(h1)) > f.params.theta_deg);
    REQUIRE(static_cast<double>(f.g.degree(y)) <= f.params.theta_deg);

    const VertexId v_low = precedes(f.g, y, z) ? y : z;
    const VertexId v_high = precedes(f.g, h1, h2) ? h1 : h2;
    uint64_t low_hits = 0, high_hits = 0;
    const uint64_t calls = 2'000'000;
    for (uint64_t i = 0; i < calls; ++i) {
        const auto tuple =
            sample_a_clique(f.s_sampler, f.typical, f.oracle, f.params, f.rng);
        if (!tuple) continue;
        if (tuple->v() == v_low) ++low_hits;
        if (tuple->v() == v_high) ++high_hits;
    }
    REQUIRE(low_hits > 1000);
    REQUIRE(high_hits > 1000);
    const double ratio = static_cast<double>(low_hits) / static_cast<double>(high_hits);
    const double band = (1 + f.params.eps_bar) * (1 + f.params.eps_bar) /
                        ((1 - f.params.eps_bar) * (1 - f.params.eps_bar));
    CHECK(ratio < band);
    CHECK(ratio > 1.0 / band);
}

TEST_CASE("per-call query cost stays within the contract") {
    SamplerFixture f(gen_path_plus_clique(60, 8), 4, {54, 55, 56, 57});
    const uint32_t k = f.params.k;
    for (int i = 0; i < 2000; ++i) {
        const QueryCounts before = f.oracle.counts();
        (void)sample_a_clique(f.s_sampler, f.typical, f.oracle, f.params, f.rng);
        const QueryCounts after = f.oracle.counts();
        CHECK(after.neighbor - before.neighbor <= 1 + (k - 2));
        CHECK(after.degree - before.degree <= k);
        CHECK(after.pair - before.pair <= k * (k - 1) / 2);
        CHECK(after.uniform_vertex == before.uniform_vertex);
    }
}

TEST_SUITE_END();
