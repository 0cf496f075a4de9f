#include "subclique/search.hpp"

#include <chrono>
#include <cmath>

namespace subclique {

SearchConfig make_search_config(double upper_bound, double eps, uint32_t ell) {
    if (!(upper_bound >= 1)) throw ParamError("search: upper bound below 1");
    if (!(eps > 0)) throw ParamError("search: epsilon must be positive");
    SearchConfig cfg;
    cfg.eps_user = eps;
    cfg.eps = std::min(eps, 0.25);
    cfg.ell = ell;
    cfg.B = std::exp2(std::ceil(std::log2(upper_bound)));
    cfg.delta_prime = 1.0 / (5.0 * std::exp2(static_cast<double>(ell)));
    const double log_b = std::max(1.0, std::log2(cfg.B));
    cfg.r_search = static_cast<uint64_t>(std::ceil(
        (4.0 / cfg.eps) * std::log(2.0 * log_b * log_b / cfg.delta_prime)));
    cfg.delta_inner = cfg.delta_prime / (2.0 * static_cast<double>(cfg.r_search));
    return cfg;
}

SearchResult geometric_search(const GuessedEstimator& estimator,
                              const SearchConfig& config) {
    SearchResult result;
    for (double atilde = config.B; atilde >= 1.0; atilde /= 2.0) {
        for (double abar = config.B; abar >= atilde; abar /= 2.0) {
            SearchStep step;
            step.atilde = atilde;
            step.abar = abar;
            step.ckbar = abar;
            step.r = config.r_search;
            step.delta_inner = config.delta_inner;

            double x_min = 0;
            bool first = true;
            for (uint64_t i = 0; i < config.r_search; ++i) {
                const auto est = estimator(abar, config.eps, config.delta_inner);
                const double value = est.value_or(0.0);
                if (!est) ++step.fails;
                if (first || value < x_min) x_min = value;
                first = false;
            }
            step.x_min = x_min;

            if (abar == 1.0) {
                result.floor_value = x_min;
                result.floor_seen = true;
            }
            if (x_min >= (1.0 + config.eps) * abar) {
                step.stopped = true;
                result.trajectory.push_back(step);
                result.found = true;
                result.value = x_min;
                return result;
            }
            result.trajectory.push_back(step);
        }
    }
    return result;
}

EstimateReport approximate_cliques_auto(QueryOracle& oracle, uint32_t k,
                                        double eps, double mbar, uint64_t seed,
                                        const Constants& consts,
                                        bool disable_upfront) {
    const auto t_start = std::chrono::steady_clock::now();
    EstimateReport report;
    auto finish = [&](EstimateReport& r) -> EstimateReport& {
        r.queries = oracle.counts();
        r.wallclock_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t_start)
                             .count();
        return r;
    };

    const uint32_t n = oracle.n();
    const bool exact_mbar = mbar < 0;
    if (exact_mbar) {
        // m computed from the loaded graph, outside the query budget,
        // deflated so the estimator sees a conservative underestimate
        mbar = (1.0 - eps / 5.0) * static_cast<double>(oracle.graph().m());
    }

    if (mbar < 1.0) {
        // no edges: no k-cliques for k >= 3
        report.estimate = 0;
        report.no_cliques_detectable = true;
        return finish(report);
    }

    const double mbar_pow_k2 = std::pow(mbar, static_cast<double>(k) / 2.0);
    const double upper =
        std::min(std::pow(static_cast<double>(n), static_cast<double>(k)),
                 mbar_pow_k2);
    SearchConfig cfg = make_search_config(std::max(1.0, upper), eps);

    uint64_t invocation = 0;
    const GuessedEstimator estimator = [&](double guess, double inner_eps,
                                           double inner_delta)
        -> std::optional<double> {
        // a ceiling power of two can poke above mbar^{k/2}; the estimator's
        // guess is clamped while the sweep value stays on the halving grid
        const double ckbar = std::min(guess, mbar_pow_k2);
        uint64_t sm = seed;
        const uint64_t call_seed = splitmix64(sm) ^ (0x5851f42d4c957f2dULL * ++invocation);
        Params p = derive_params(n, k, mbar, std::max(1.0, ckbar), inner_eps,
                                 inner_delta, call_seed, consts);
        p.disable_upfront = disable_upfront;
        EstimateReport inner = approximate_cliques(oracle, p);
        report.s_used = inner.s_used;
        report.upfront_mode |= inner.upfront_mode;
        if (!inner.ok()) return std::nullopt;
        return inner.estimate;
    };

    SearchResult sr = geometric_search(estimator, cfg);
    report.trajectory = std::move(sr.trajectory);
    if (sr.found) {
        report.estimate = sr.value;
    } else {
        // stop never certified; the floor-level minimum is still an
        // estimate at the finest guess, and 0 there means no clique was
        // ever sampled
        report.search_exhausted = true;
        report.estimate = sr.floor_seen ? sr.floor_value : 0.0;
        report.no_cliques_detectable = report.estimate == 0.0;
    }
    return finish(report);
}

}  // namespace subclique
