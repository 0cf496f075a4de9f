#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "subclique/estimator.hpp"
#include "subclique/oracle.hpp"
#include "subclique/params.hpp"

namespace subclique {

// Configuration of the guess-free wrapper around a guess-parameterized
// estimator. The wrapper's internal accuracy is capped at 1/4; the caller's
// larger eps only widens the final interval.
struct SearchConfig {
    double B = 0;            // power-of-two upper bound on the true value
    uint32_t ell = 2;        // runtime degradation exponent of the estimator
    double eps = 0;          // min(caller eps, 1/4)
    double eps_user = 0;
    double delta_prime = 0;  // 1 / (5 * 2^ell)
    uint64_t r_search = 0;   // ceil((4/eps) * ln(2 log2(B)^2 / delta_prime))
    double delta_inner = 0;  // delta_prime / (2 r_search)
};

// B rounds up to a power of two so the halving sequence stays on integers.
SearchConfig make_search_config(double upper_bound, double eps, uint32_t ell = 2);

// estimator(guess, eps, delta) -> estimate, or nullopt for a fail run.
using GuessedEstimator =
    std::function<std::optional<double>(double guess, double eps, double delta)>;

struct SearchResult {
    bool found = false;        // stop condition fired
    double value = 0;          // X at the stopping level (or the floor level)
    double floor_value = 0;    // X at the final guess = 1 level, if reached
    bool floor_seen = false;
    std::vector<SearchStep> trajectory;
};

// Halving search: the outer guess falls from B; each pass sweeps the full
// prefix B, B/2, ..., guess, takes X = min over r_search estimator calls,
// and returns that X once X >= (1+eps) * abar. Failed estimator calls
// contribute 0 to the minimum (they can never certify a stop). If the
// sweep exhausts below 1 the stop never fired; callers decide what the
// floor-level X means.
SearchResult geometric_search(const GuessedEstimator& estimator,
                              const SearchConfig& config);

// End-to-end guess-free clique counting: wires the estimator into the
// search with B = min(n^k, mbar^{k/2}). mbar < 0 means "compute m from the
// graph and deflate by (1-eps/5)" (reported as exact mode). On exhaustion
// the floor-level X is returned with outcome ok and the raw fail recorded
// in the report flags.
EstimateReport approximate_cliques_auto(QueryOracle& oracle, uint32_t k,
                                        double eps, double mbar, uint64_t seed,
                                        const Constants& consts = {},
                                        bool disable_upfront = false);

}  // namespace subclique
