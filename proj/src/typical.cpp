#include "subclique/typical.hpp"

#include <cmath>
#include <numeric>

namespace subclique {

TypicalSet sample_degrees_typical(QueryOracle& oracle, const Params& params,
                                  Rng& rng) {
    TypicalSet result;
    const uint32_t n = oracle.n();

    const bool take_all = params.t >= n && !params.force_sample_t;
    if (take_all) {
        std::vector<VertexId> members(n);
        std::iota(members.begin(), members.end(), 0);
        auto degrees = query_degrees(oracle, members);
        auto sampler = EdgeSampler::build(std::move(members), std::move(degrees));
        result.t_used = n;
        result.scale = 1.0;
        result.is_all_vertices = true;
        result.attempts = 1;
        // m(T) = m exactly; the acceptance bound still applies.
        result.accepted =
            static_cast<double>(sampler.m_of()) <= 4.0 * params.mbar;
        result.sampler = std::move(sampler);
        return result;
    }

    const uint64_t t = params.t;
    const double scale = static_cast<double>(t) / static_cast<double>(n);
    const double bound = scale * 4.0 * params.mbar;
    const uint32_t max_attempts = params.typical_attempts();

    for (uint32_t attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<VertexId> members(t);
        for (auto& v : members) v = oracle.uniform_vertex(rng);
        auto degrees = query_degrees(oracle, members);
        auto sampler = EdgeSampler::build(std::move(members), std::move(degrees));
        if (static_cast<double>(sampler.m_of()) <= bound) {
            result.sampler = std::move(sampler);
            result.t_used = t;
            result.scale = scale;
            result.accepted = true;
            result.attempts = attempt;
            return result;
        }
    }
    result.t_used = t;
    result.scale = scale;
    result.accepted = false;
    result.attempts = max_attempts;
    return result;
}

bool verify_degrees_typical(const Graph& g, const TypicalSet& t,
                            const Params& params) {
    const double bound = t.scale * 4.0 * params.mbar;
    if (static_cast<double>(t.m_of()) > bound) return false;

    std::vector<uint32_t> multiplicity(g.n(), 0);
    for (VertexId v : t.sampler.members()) ++multiplicity[v];

    const double slack = params.eps_bar / static_cast<double>(params.k);
    for (VertexId w = 0; w < g.n(); ++w) {
        if (static_cast<double>(g.degree(w)) <= params.theta_deg) continue;
        uint64_t d_t = 0;
        for (VertexId nb : g.neighbors_of(w)) d_t += multiplicity[nb];
        const double expected = t.scale * static_cast<double>(g.degree(w));
        if (static_cast<double>(d_t) < (1.0 - slack) * expected ||
            static_cast<double>(d_t) > (1.0 + slack) * expected)
            return false;
    }
    return true;
}

}  // namespace subclique
