#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "subclique/graph.hpp"
#include "subclique/popularity.hpp"

namespace subclique {

struct CliqueCensus {
    uint64_t total = 0;
    std::vector<uint64_t> per_vertex;  // c_k(u), indexed by vertex
    uint32_t k = 0;
};

struct EnumerationBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumerates each k-clique exactly once (vertices listed in the degree
// order), by orienting edges along that order and extending out-neighbor
// intersections. The callback receives the clique's vertex list. Throws
// EnumerationBudgetExceeded past node_budget recursion nodes.
void enumerate_cliques(const Graph& g, uint32_t k,
                       const std::function<void(std::span<const VertexId>)>& cb,
                       uint64_t node_budget = 2'000'000'000ULL);

// Exact total and per-vertex k-clique counts. Desk-scale tool.
CliqueCensus count_cliques_exact(const Graph& g, uint32_t k,
                                 uint64_t node_budget = 2'000'000'000ULL);

// Independent cross-check: tries all C(n,k) subsets. Refuses n > 30.
uint64_t count_cliques_naive(const Graph& g, uint32_t k);

// Disjoint union of a path on n-t vertices and a complete graph on t
// vertices (clique vertices take the top ids). C_k = C(t, k).
Graph gen_path_plus_clique(uint32_t n, uint32_t t);

// Uniform simple graph with exactly m_edges undirected edges.
Graph gen_gnm(uint32_t n, uint64_t m_edges, uint64_t seed);

struct AssignmentCensus {
    uint64_t unassigned = 0;           // cliques whose vertices are all popular
    std::vector<uint64_t> alpha;       // cliques assigned to each vertex
    uint64_t total = 0;                // C_k

    uint64_t assigned_sum() const {
        uint64_t s = 0;
        for (uint64_t a : alpha) s += a;
        return s;
    }
};

// Brute-force assignment audit for a verdict partition: every k-clique is
// charged to its first vertex (degree order) with an unpopular verdict, or
// counted unassigned if there is none.
AssignmentCensus unassigned_clique_mass(const Graph& g,
                                        std::span<const Verdict> verdicts,
                                        uint32_t k);

}  // namespace subclique
