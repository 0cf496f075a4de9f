#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "subclique/oracle.hpp"
#include "subclique/params.hpp"
#include "subclique/rng.hpp"
#include "subclique/typical.hpp"

namespace subclique {

enum class Verdict : uint8_t { popular, unpopular };

struct PopularityVerdict {
    VertexId vertex = 0;
    Verdict verdict = Verdict::unpopular;
    uint32_t degree = 0;
    double estimate = 0;      // c_k(u) estimate; 0 when decided by degree
    bool by_degree = false;   // decided by the tau_d short-circuit
    uint64_t trials_used = 0;
};

// Decides popular vs unpopular for one vertex. Degree above tau_d is
// popular outright (one degree query, no sampling); otherwise r(d(u))
// singleton-sampler trials estimate c_k(u) and the verdict is popular iff
// the estimate reaches tau_c/2. With T accepted, vertices with
// c_k(u) > tau_c or d(u) > tau_d come back popular and vertices with
// c_k(u) <= tau_c/4 and d(u) <= tau_d come back unpopular, each with
// probability at least 1 - delta_bar/n; anything in between may go either
// way.
PopularityVerdict is_popular(VertexId u, const TypicalSet& t_ctx,
                             QueryOracle& oracle, const Params& params,
                             Rng& rng);

// Write-once verdict memo for one run: the main loop must answer repeated
// queries about the same vertex consistently with one fixed partition.
class VerdictCache {
public:
    const PopularityVerdict& get_or_compute(VertexId u, const TypicalSet& t_ctx,
                                            QueryOracle& oracle,
                                            const Params& params, Rng& rng) {
        auto it = map_.find(u);
        if (it == map_.end())
            it = map_.emplace(u, is_popular(u, t_ctx, oracle, params, rng)).first;
        return it->second;
    }

    const PopularityVerdict* find(VertexId u) const {
        auto it = map_.find(u);
        return it == map_.end() ? nullptr : &it->second;
    }

    size_t size() const { return map_.size(); }
    const std::unordered_map<VertexId, PopularityVerdict>& entries() const {
        return map_;
    }

private:
    std::unordered_map<VertexId, PopularityVerdict> map_;
};

// Runs is_popular on every vertex and returns the induced partition
// (index = vertex id). Test + analysis helper; not part of the estimator's
// sublinear path.
std::vector<Verdict> realize_partition(QueryOracle& oracle,
                                       const TypicalSet& t_ctx,
                                       const Params& params, Rng& rng);

}  // namespace subclique
