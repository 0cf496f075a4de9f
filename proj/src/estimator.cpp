#include "subclique/estimator.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include "subclique/baseline.hpp"
#include "subclique/clique_sampler.hpp"
#include "subclique/edge_sampler.hpp"

namespace subclique {

namespace {

// eps below the sampling resolution floor: read the graph through the
// oracle (charged once per degree and ordered edge slot) and count exactly.
EstimateReport exact_route(QueryOracle& oracle, const Params& params) {
    EstimateReport report;
    report.exact_route = true;
    const uint32_t n = oracle.n();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < n; ++v) {
        const uint32_t d = oracle.degree(v);
        for (uint32_t i = 1; i <= d; ++i) {
            const VertexId w = oracle.neighbor(v, i);
            if (v < w) edges.emplace_back(v, w);
        }
    }
    const Graph local = Graph::from_edges(n, edges);
    report.estimate =
        static_cast<double>(count_cliques_exact(local, params.k).total);
    report.queries = oracle.counts();
    return report;
}

}  // namespace

EstimateReport approximate_cliques(QueryOracle& oracle, const Params& params,
                                   const RunHooks& hooks) {
    const auto t_start = std::chrono::steady_clock::now();
    auto finish = [&](EstimateReport& report) -> EstimateReport& {
        report.queries = oracle.counts();
        report.wallclock_ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t_start)
                .count();
        return report;
    };

    oracle.exit_upfront_mode();

    if (params.exact_route) {
        EstimateReport report = exact_route(oracle, params);
        return finish(report);
    }

    EstimateReport report;
    const uint32_t n = oracle.n();
    Rng rng_s = make_stream(params.seed, RngStream::s_draw);
    Rng rng_t = make_stream(params.seed, RngStream::t_draw);
    Rng rng_clique = make_stream(params.seed, RngStream::clique_sampler);
    Rng rng_pop = make_stream(params.seed, RngStream::popularity);

    // S: uniform multiset of size s, or V once s reaches n
    std::vector<VertexId> s_members;
    if (params.s >= n) {
        s_members.resize(n);
        std::iota(s_members.begin(), s_members.end(), 0);
        report.s_all_vertices = true;
    } else {
        s_members.resize(params.s);
        for (auto& v : s_members) v = oracle.uniform_vertex(rng_s);
    }
    report.s_used = s_members.size();
    auto s_degrees = query_degrees(oracle, s_members);
    const EdgeSampler s_sampler =
        EdgeSampler::build(std::move(s_members), std::move(s_degrees));

    TypicalSet typical = sample_degrees_typical(oracle, params, rng_t);
    report.t_all_vertices = typical.is_all_vertices;
    if (hooks.typical_out) *hooks.typical_out = typical;
    if (!typical.accepted) {
        report.outcome = EstimateReport::Outcome::fail;
        report.typical_failed = true;
        return finish(report);
    }

    if (s_sampler.empty()) {
        // no edges originate from S; nothing can be sampled and the
        // step-6 formula degenerates to 0
        report.estimate = 0;
        report.q_used = 0;
        return finish(report);
    }

    const uint64_t q = params.q_of(s_sampler.m_of());
    report.q_used = q;

    // q > mbar fallback: read the covered adjacency once and answer the
    // loop from it. The read stops (and the run fails) as soon as it sees
    // more ordered edges than any m consistent with a valid mbar, i.e.
    // mbar/(1-eps).
    if (static_cast<double>(q) > params.mbar && !params.disable_upfront) {
        report.upfront_mode = true;
        std::vector<bool> covered(n, false);
        uint64_t slots = 0;
        for (VertexId v : s_sampler.members()) {
            if (!covered[v]) {
                covered[v] = true;
                slots += oracle.graph().degree(v);
            }
            for (VertexId w : oracle.graph().neighbors_of(v)) {
                if (!covered[w]) {
                    covered[w] = true;
                    slots += oracle.graph().degree(w);
                }
            }
        }
        const double abort_at = params.mbar / (1.0 - params.eps);
        if (static_cast<double>(slots) > abort_at) {
            oracle.counts().neighbor += static_cast<uint64_t>(abort_at) + 1;
            report.outcome = EstimateReport::Outcome::fail;
            report.budget_exceeded = true;
            return finish(report);
        }
        oracle.enter_upfront_mode(std::move(covered));
    }

    VerdictCache local_cache;
    VerdictCache& verdicts = hooks.verdict_cache ? *hooks.verdict_cache : local_cache;

    uint64_t chi_sum = 0;
    for (uint64_t i = 0; i < q; ++i) {
        const auto tuple =
            sample_a_clique(s_sampler, typical, oracle, params, rng_clique);
        if (!tuple) continue;

        // the clique is assigned to the first vertex in the degree order
        // whose verdict is unpopular; chi_i = 1 iff that vertex is u_i
        VertexId first_unpopular = 0;
        uint32_t first_degree = 0;
        bool any_unpopular = false;
        for (uint32_t j = 0; j < tuple->k; ++j) {
            const VertexId x = tuple->vertex[j];
            const PopularityVerdict& pv =
                verdicts.get_or_compute(x, typical, oracle, params, rng_pop);
            if (pv.verdict != Verdict::unpopular) continue;
            if (!any_unpopular || pv.degree < first_degree ||
                (pv.degree == first_degree && x < first_unpopular)) {
                first_unpopular = x;
                first_degree = pv.degree;
                any_unpopular = true;
            }
        }
        if (any_unpopular && first_unpopular == tuple->u()) ++chi_sum;
    }

    report.chi_sum = chi_sum;
    const double s_frac =
        static_cast<double>(report.s_used) / static_cast<double>(n);
    report.estimate = static_cast<double>(s_sampler.m_of()) *
                      params.theta_pow_k_minus_2() /
                      (params.factorial_k_minus_2() * s_frac) *
                      (static_cast<double>(chi_sum) / static_cast<double>(q));
    return finish(report);
}

}  // namespace subclique
