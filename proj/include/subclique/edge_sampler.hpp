#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subclique/oracle.hpp"
#include "subclique/rng.hpp"

namespace subclique {

// A vertex multiset: members listed with multiplicity.
struct VertexMultiset {
    std::vector<VertexId> members;
};

struct OrderedEdge {
    VertexId u;
    VertexId v;
};

// Uniform sampler over the ordered edges originating from a vertex multiset.
// Member selection uses a Walker/Vose alias table over the cached degrees,
// so construction is linear in the member count and each draw is O(1); the
// drawn member is then extended by one uniform neighbor query.
//
// Degrees must be queried by the caller (once per distinct member) and
// passed in; the sampler never re-queries them.
class EdgeSampler {
public:
    EdgeSampler() = default;

    static EdgeSampler build(std::vector<VertexId> members,
                             std::vector<uint32_t> degrees) {
        if (members.size() != degrees.size())
            throw std::invalid_argument("EdgeSampler: members/degrees size mismatch");
        EdgeSampler s;
        s.members_ = std::move(members);
        s.degrees_ = std::move(degrees);
        for (uint32_t d : s.degrees_) s.m_of_ += d;
        if (s.m_of_ > 0) s.build_alias();
        return s;
    }

    bool empty() const { return m_of_ == 0; }
    uint64_t m_of() const { return m_of_; }
    size_t size() const { return members_.size(); }
    const std::vector<VertexId>& members() const { return members_; }
    const std::vector<uint32_t>& degrees() const { return degrees_; }

    // Index of a member drawn with probability degree/m_of.
    size_t sample_member(Rng& rng) const {
        const double x = rng.uniform_double() * static_cast<double>(cells_.size());
        const auto idx = static_cast<size_t>(x);
        const double frac = x - static_cast<double>(idx);
        const Cell& c = cells_[idx];
        return frac < c.prob ? idx : c.alias;
    }

    // Uniform ordered edge from E(S): member u with probability d(u)/m(S),
    // then a uniform neighbor of u. Costs one neighbor query.
    OrderedEdge sample_edge(QueryOracle& oracle, Rng& rng) const {
        if (empty()) throw std::logic_error("sample_edge: empty sampler");
        const size_t i = sample_member(rng);
        const Slot s = slots_[i];
        const auto slot = static_cast<uint32_t>(rng.uniform_index(s.degree));
        return {s.member, oracle.neighbor(s.member, slot + 1)};
    }

    // Exact member-selection marginal induced by the alias table (for
    // verification; not used on the sampling path).
    std::vector<double> member_marginals() const {
        std::vector<double> p(members_.size(), 0.0);
        if (empty()) return p;
        const double cell = 1.0 / static_cast<double>(cells_.size());
        for (size_t i = 0; i < cells_.size(); ++i) {
            p[i] += cell * cells_[i].prob;
            p[cells_[i].alias] += cell * (1.0 - cells_[i].prob);
        }
        return p;
    }

private:
    struct Cell {
        double prob = 0;
        uint32_t alias = 0;
        uint32_t pad = 0;
    };
    struct Slot {
        VertexId member = 0;
        uint32_t degree = 0;
    };

    void build_alias() {
        const size_t count = members_.size();
        cells_.assign(count, Cell{});
        slots_.resize(count);
        for (size_t i = 0; i < count; ++i)
            slots_[i] = {members_[i], degrees_[i]};

        std::vector<double> scaled(count);
        for (size_t i = 0; i < count; ++i)
            scaled[i] = static_cast<double>(degrees_[i]) * static_cast<double>(count) /
                        static_cast<double>(m_of_);

        std::vector<uint32_t> small, large;
        small.reserve(count);
        large.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            (scaled[i] < 1.0 ? small : large).push_back(static_cast<uint32_t>(i));
        }
        while (!small.empty() && !large.empty()) {
            const uint32_t s = small.back();
            const uint32_t l = large.back();
            small.pop_back();
            cells_[s].prob = scaled[s];
            cells_[s].alias = l;
            scaled[l] -= 1.0 - scaled[s];
            if (scaled[l] < 1.0) {
                large.pop_back();
                small.push_back(l);
            }
        }
        for (uint32_t l : large) {
            cells_[l].prob = 1.0;
            cells_[l].alias = l;
        }
        // leftovers in small are 1.0 up to rounding
        for (uint32_t s : small) {
            cells_[s].prob = 1.0;
            cells_[s].alias = s;
        }
    }

    std::vector<VertexId> members_;
    std::vector<uint32_t> degrees_;
    uint64_t m_of_ = 0;
    std::vector<Cell> cells_;
    std::vector<Slot> slots_;
};

// Queries the degree of every member, charging once per distinct vertex
// (repeat occurrences reuse the cached answer), and returns degrees aligned
// with members.
inline std::vector<uint32_t> query_degrees(QueryOracle& oracle,
                                           const std::vector<VertexId>& members) {
    std::unordered_map<VertexId, uint32_t> seen;
    seen.reserve(members.size());
    std::vector<uint32_t> degrees(members.size());
    for (size_t i = 0; i < members.size(); ++i) {
        auto [it, fresh] = seen.try_emplace(members[i], 0);
        if (fresh) it->second = oracle.degree(members[i]);
        degrees[i] = it->second;
    }
    return degrees;
}

}  // namespace subclique
