#pragma once

#include <cstdint>

#include "subclique/edge_sampler.hpp"
#include "subclique/graph.hpp"
#include "subclique/oracle.hpp"
#include "subclique/params.hpp"
#include "subclique/rng.hpp"

namespace subclique {

// The reference multiset T used to sample high-degree vertices: a uniform
// multiset whose incident-edge total is certified small, so that edges
// drawn from E(T) land on any fixed high-degree vertex with probability
// close to d(w)/(n*theta_deg) after rejection.
struct TypicalSet {
    EdgeSampler sampler;      // D(T), built over T's cached degrees
    uint64_t t_used = 0;      // |T| including multiplicity
    double scale = 0;         // t/n
    bool accepted = false;
    bool is_all_vertices = false;
    uint32_t attempts = 0;    // candidate draws consumed

    uint64_t m_of() const { return sampler.m_of(); }
};

// Draws up to ceil(log2(2/gamma)) candidate multisets of size t and returns
// the first whose incident-edge total m(T) is at most (t/n)*4*mbar, with its
// edge sampler. With t >= n the whole vertex set is used instead (the bound
// is then exact and the draw deterministic). accepted=false if every
// candidate exceeds the bound.
TypicalSet sample_degrees_typical(QueryOracle& oracle, const Params& params,
                                  Rng& rng);

// Test-only oracle with full graph access (not query-budgeted): checks the
// accepted bound on m(T) and, for every vertex w with d(w) > theta_deg,
// that T holds (1 +- eps_bar/k)*(t/n)*d(w) of w's neighbors.
bool verify_degrees_typical(const Graph& g, const TypicalSet& t,
                            const Params& params);

}  // namespace subclique
