#include "subclique/popularity.hpp"

#include "subclique/clique_sampler.hpp"

namespace subclique {

PopularityVerdict is_popular(VertexId u, const TypicalSet& t_ctx,
                             QueryOracle& oracle, const Params& params,
                             Rng& rng) {
    PopularityVerdict out;
    out.vertex = u;
    out.degree = oracle.degree(u);

    if (static_cast<double>(out.degree) > params.tau_d) {
        out.verdict = Verdict::popular;
        out.by_degree = true;
        return out;
    }
    if (out.degree == 0) {
        out.verdict = Verdict::unpopular;
        return out;
    }

    // singleton sampler over {u}; degree already queried above
    auto singleton = EdgeSampler::build({u}, {out.degree});
    const uint64_t r = params.r_of(out.degree);
    uint64_t hits = 0;
    for (uint64_t i = 0; i < r; ++i) {
        if (sample_a_clique(singleton, t_ctx, oracle, params, rng)) ++hits;
    }
    out.trials_used = r;
    out.estimate = static_cast<double>(out.degree) * params.theta_pow_k_minus_2() *
                   static_cast<double>(hits) /
                   (params.factorial_k_minus_2() * static_cast<double>(r));
    out.verdict =
        out.estimate >= params.tau_c / 2.0 ? Verdict::popular : Verdict::unpopular;
    return out;
}

std::vector<Verdict> realize_partition(QueryOracle& oracle,
                                       const TypicalSet& t_ctx,
                                       const Params& params, Rng& rng) {
    std::vector<Verdict> verdicts(oracle.n(), Verdict::unpopular);
    for (VertexId u = 0; u < oracle.n(); ++u) {
        verdicts[u] = is_popular(u, t_ctx, oracle, params, rng).verdict;
    }
    return verdicts;
}

}  // namespace subclique
