#pragma once

#include <cstdint>
#include <vector>

#include "subclique/oracle.hpp"
#include "subclique/params.hpp"
#include "subclique/popularity.hpp"
#include "subclique/typical.hpp"

namespace subclique {

struct SearchStep {
    double atilde = 0;   // outer guess
    double abar = 0;     // inner sweep value
    double ckbar = 0;    // clique guess actually passed down
    uint64_t r = 0;      // invocations folded into x_min
    double delta_inner = 0;
    double x_min = 0;    // minimum estimate over the r invocations
    uint64_t fails = 0;  // invocations that returned fail
    bool stopped = false;
};

struct EstimateReport {
    double estimate = 0;
    enum class Outcome : uint8_t { ok, fail } outcome = Outcome::ok;
    uint64_t chi_sum = 0;
    uint64_t q_used = 0;
    uint64_t s_used = 0;
    QueryCounts queries;
    double wallclock_ms = 0;

    // diagnostics
    bool typical_failed = false;    // no accepted T within the attempt budget
    bool budget_exceeded = false;   // upfront read found more edges than a
                                    // valid mbar allows
    bool upfront_mode = false;      // q > mbar fallback engaged
    bool exact_route = false;       // eps below resolution floor; counted exactly
    bool s_all_vertices = false;
    bool t_all_vertices = false;

    // auto/search runs only
    bool search_exhausted = false;
    bool no_cliques_detectable = false;
    std::vector<SearchStep> trajectory;

    bool ok() const { return outcome == Outcome::ok; }
};

// Optional side channels for tests and analysis tools.
struct RunHooks {
    VerdictCache* verdict_cache = nullptr;  // shared/inspectable verdict memo
    TypicalSet* typical_out = nullptr;      // copy of the accepted T
};

// The main estimator: draws S, certifies T, runs q tuple-sampling rounds,
// marks chi_i = 1 when the returned tuple's clique is assigned to its S
// endpoint (first unpopular vertex in the degree order), and scales the
// hit rate back to a clique count:
//
//   estimate = m(S) * theta_deg^{k-2} / ((k-2)! * (s/n)) * (chi_sum / q).
//
// If mbar and ckbar are valid (mbar in [(1-eps)m, m], ckbar in [C_k/4, C_k])
// the estimate lands in (1 +- eps) * C_k with probability at least 1 - delta.
EstimateReport approximate_cliques(QueryOracle& oracle, const Params& params,
                                   const RunHooks& hooks = {});

}  // namespace subclique
