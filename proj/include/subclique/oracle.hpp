#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "subclique/graph.hpp"
#include "subclique/rng.hpp"

namespace subclique {

struct QueryCounts {
    uint64_t degree = 0;
    uint64_t neighbor = 0;
    uint64_t pair = 0;
    uint64_t uniform_vertex = 0;

    uint64_t total() const { return degree + neighbor + pair + uniform_vertex; }

    QueryCounts& operator+=(const QueryCounts& o) {
        degree += o.degree;
        neighbor += o.neighbor;
        pair += o.pair;
        uniform_vertex += o.uniform_vertex;
        return *this;
    }
};

// Counting facade over a Graph: degree, i-th neighbor (1-based), pair
// adjacency, and uniform vertex draws. Answers are pure functions of the
// graph; each call normally charges exactly one counter.
//
// Upfront mode implements the q > m̄ fallback: the adjacency of N[S] has
// been read and charged once by the caller, after which degree/neighbor
// reads are cache hits and only pair queries with both endpoints outside
// the covered set still cost a query.
class QueryOracle {
public:
    explicit QueryOracle(const Graph& g) : g_(&g) {}

    const Graph& graph() const { return *g_; }
    uint32_t n() const { return g_->n(); }
    const QueryCounts& counts() const { return counts_; }
    QueryCounts& counts() { return counts_; }

    uint32_t degree(VertexId v) {
        if (!g_->in_range(v)) throw std::out_of_range("degree: vertex out of range");
        if (!upfront_ || !is_covered(v)) ++counts_.degree;
        return g_->degree(v);
    }

    // 1-based neighbor index, matching the external query model.
    VertexId neighbor(VertexId v, uint32_t i) {
        if (!g_->in_range(v)) throw std::out_of_range("neighbor: vertex out of range");
        if (i < 1) throw std::out_of_range("neighbor: index out of range");
        if (!upfront_ || !is_covered(v)) ++counts_.neighbor;
        return g_->neighbor_checked(v, i - 1);
    }

    bool pair(VertexId u, VertexId v) {
        if (!g_->in_range(u) || !g_->in_range(v))
            throw std::out_of_range("pair: vertex out of range");
        if (!upfront_ || (!is_covered(u) && !is_covered(v))) ++counts_.pair;
        return g_->has_edge(u, v);
    }

    VertexId uniform_vertex(Rng& rng) {
        ++counts_.uniform_vertex;
        return static_cast<VertexId>(rng.uniform_index(g_->n()));
    }

    bool upfront_mode() const { return upfront_; }

    // Back to per-query charging (each estimator run pays for its own
    // upfront read; knowledge is not carried across runs).
    void exit_upfront_mode() {
        upfront_ = false;
        all_covered_ = false;
        covered_.clear();
    }

    // Charge the one-time read of the covered set's degrees and adjacency
    // lists, then switch to cached answering. Returns the number of ordered
    // edge slots charged. Caller is responsible for the abort-threshold
    // check.
    uint64_t enter_upfront_mode(std::vector<bool> covered) {
        covered_ = std::move(covered);
        uint64_t slots = 0;
        uint64_t verts = 0;
        for (VertexId v = 0; v < g_->n(); ++v) {
            if (covered_[v]) {
                slots += g_->degree(v);
                ++verts;
            }
        }
        counts_.degree += verts;
        counts_.neighbor += slots;
        upfront_ = true;
        all_covered_ = verts == g_->n();
        return slots;
    }

private:
    bool is_covered(VertexId v) const { return all_covered_ || covered_[v]; }

    const Graph* g_;
    QueryCounts counts_;
    bool upfront_ = false;
    bool all_covered_ = false;
    std::vector<bool> covered_;
};

}  // namespace subclique
