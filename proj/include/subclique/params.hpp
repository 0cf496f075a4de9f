#pragma once

#include <cstdint>
#include <stdexcept>

namespace subclique {

struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Slack constants in the derived sample sizes. Defaults are the smallest
// round values for which every concentration bound in docs/parameters.md
// goes through; they are deliberately conservative and can be overridden
// (all reports echo the effective values).
struct Constants {
    double s_const = 128.0;   // multiset S size
    double q_const = 10.0;    // estimator loop length, divided by (1-eps_bar)^3
    double t_const = 3.0;     // multiset T size
    double r_const = 12.0;    // popularity trial count
    double tau_c_const = 32.0;  // clique-count popularity threshold
    double tau_d_const = 4.0;   // degree popularity threshold
};

// All derived run constants. See docs/parameters.md for the derivations.
struct Params {
    uint32_t n = 0;
    uint32_t k = 0;
    double mbar = 0;    // ordered-edge count estimate
    double ckbar = 0;   // clique-count guess
    double eps = 0;
    double eps_bar = 0;    // eps / 5
    double delta = 0;
    double delta_bar = 0;  // delta / 4
    double theta_deg = 0;  // 2 * sqrt(mbar); high-degree threshold
    double tau_c = 0;      // popularity: clique-count threshold
    double tau_d = 0;      // popularity: degree threshold
    double gamma = 0;      // typical-set failure budget
    uint64_t s = 0;        // |S| (clamped at n)
    uint64_t t = 0;        // |T| (clamped at n)
    bool s_clamped = false;
    bool t_clamped = false;
    uint64_t seed = 1;
    Constants consts;

    // eps at or below the 1/mbar^(k/2) resolution floor: sampling cannot
    // separate counts that finely, so the estimator reads the graph and
    // counts exactly instead.
    bool exact_route = false;

    // Test hooks; never set by derive_params.
    bool force_sample_t = false;  // skip the T = V shortcut
    bool disable_upfront = false; // keep per-query charging even when q > mbar

    double factorial_k_minus_2() const;
    double theta_pow_k_minus_2() const;

    // Estimator loop length for a realized m(S).
    uint64_t q_of(uint64_t m_of_s) const;

    // Popularity trial count for a vertex of degree d.
    uint64_t r_of(uint32_t d) const;

    // Max candidate draws for the degrees-typical multiset.
    uint32_t typical_attempts() const;
};

// Validates inputs and derives every run constant.
//   n >= 1, 3 <= k <= 16, mbar >= 1, 1 <= ckbar <= mbar^(k/2),
//   0 < eps < 1, 0 < delta < 1.
Params derive_params(uint32_t n, uint32_t k, double mbar, double ckbar,
                     double eps, double delta, uint64_t seed,
                     const Constants& consts = {});

}  // namespace subclique
