#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "subclique/edge_sampler.hpp"
#include "subclique/oracle.hpp"
#include "subclique/params.hpp"
#include "subclique/rng.hpp"
#include "subclique/typical.hpp"

namespace subclique {

constexpr uint32_t kMaxCliqueK = 16;
inline constexpr uint32_t kDegreeUnknown = UINT32_MAX;

// A k-tuple (u, v, w_1..w_{k-2}) whose vertices induce a k-clique, with
// u drawn from the multiset S and v preceding every w_j in the degree
// order. Each clique through u corresponds to (k-2)! such tuples.
struct CliqueTuple {
    std::array<VertexId, kMaxCliqueK> vertex{};
    uint32_t k = 0;

    VertexId u() const { return vertex[0]; }
    VertexId v() const { return vertex[1]; }
    VertexId w(uint32_t j) const { return vertex[2 + j]; }  // j in [0, k-3]
};

// One attempt to draw a member of C(S); fail is the normal outcome.
//
//   1. draw a uniform ordered edge (u, v) from E(S);
//   2. pick k-2 candidate extensions: below the degree threshold, a uniform
//      neighbor of v kept with probability d(v)/theta_deg; above it, the
//      far endpoint y of a uniform edge from E(T), kept with probability
//      m(T)/(d(y)*(t/n)*theta_deg) provided y is itself high-degree;
//   3. query every pair among the k candidates (distinct pairs charged once);
//   4. return the tuple iff it induces a k-clique and v precedes every w_j.
//
// With T accepted, each fixed tuple of C(S) is returned with probability
// within (1 +- eps_bar) of 1/(m(S)*theta_deg^{k-2}). Rejection failures in
// step 2 return immediately, so failed attempts never pay for pair queries.
inline std::optional<CliqueTuple> sample_a_clique(const EdgeSampler& s_sampler,
                                                  const TypicalSet& t_ctx,
                                                  QueryOracle& oracle,
                                                  const Params& params,
                                                  Rng& rng) {
    const double theta = params.theta_deg;
    const double inv_theta = 1.0 / theta;
    const uint32_t k = params.k;

    const OrderedEdge e = s_sampler.sample_edge(oracle, rng);
    const VertexId v = e.v;
    const uint32_t dv = oracle.degree(v);

    CliqueTuple tuple;
    tuple.k = k;
    tuple.vertex[0] = e.u;
    tuple.vertex[1] = v;

    // degrees of the high-case extensions are known as a side effect;
    // low-case ones are queried later, only if the clique check passes
    std::array<uint32_t, kMaxCliqueK> deg{};
    deg[1] = dv;

    const bool v_low = static_cast<double>(dv) <= theta;
    for (uint32_t j = 2; j < k; ++j) {
        if (v_low) {
            const auto slot = static_cast<uint32_t>(rng.uniform_index(dv));
            const VertexId w = oracle.neighbor(v, slot + 1);
            if (!rng.bernoulli(static_cast<double>(dv) * inv_theta)) return std::nullopt;
            tuple.vertex[j] = w;
            deg[j] = kDegreeUnknown;
        } else {
            const OrderedEdge te = t_ctx.sampler.sample_edge(oracle, rng);
            const VertexId y = te.v;
            const uint32_t dy = oracle.degree(y);
            if (static_cast<double>(dy) <= theta) return std::nullopt;
            double keep = static_cast<double>(t_ctx.m_of()) /
                          (static_cast<double>(dy) * t_ctx.scale * theta);
            // keep <= 1 is exactly the accepted m(T) bound; materially above
            // 1 means the caller handed over a multiset that never passed
            // acceptance, which is a bug, not a samplable state.
            if (keep > 1.0 + 1e-9)
                throw std::logic_error("sample_a_clique: rejection probability > 1");
            if (keep > 1.0) keep = 1.0;
            if (!rng.bernoulli(keep)) return std::nullopt;
            tuple.vertex[j] = y;
            deg[j] = dy;
        }
    }

    // step 3: all pairs, repeated vertex pairs answered from the first query
    std::array<uint64_t, kMaxCliqueK*(kMaxCliqueK - 1) / 2> asked;
    uint32_t asked_n = 0;
    bool clique = true;
    for (uint32_t a = 0; a < k; ++a) {
        for (uint32_t b = a + 1; b < k; ++b) {
            VertexId x = tuple.vertex[a];
            VertexId y = tuple.vertex[b];
            if (x > y) std::swap(x, y);
            const uint64_t key = (static_cast<uint64_t>(x) << 32) | y;
            bool seen = false;
            for (uint32_t i = 0; i < asked_n; ++i) {
                if (asked[i] == key) {
                    seen = true;
                    break;
                }
            }
            if (seen) continue;
            asked[asked_n++] = key;
            if (!oracle.pair(x, y)) clique = false;  // x == y answers false
        }
    }
    if (!clique) return std::nullopt;

    // step 4: v must precede every extension in the (degree, id) order
    for (uint32_t j = 2; j < k; ++j) {
        if (deg[j] == kDegreeUnknown) deg[j] = oracle.degree(tuple.vertex[j]);
        const VertexId w = tuple.vertex[j];
        if (deg[j] < dv || (deg[j] == dv && w < v)) return std::nullopt;
    }
    return tuple;
}

}  // namespace subclique
