#include "subclique/params.hpp"

#include <algorithm>
#include <cmath>

namespace subclique {

namespace {

constexpr uint32_t kMaxK = 16;

double factorial(uint32_t x) {
    double f = 1.0;
    for (uint32_t i = 2; i <= x; ++i) f *= i;
    return f;
}

uint64_t ceil_to_u64(double x, const char* what) {
    if (!(x >= 0)) throw ParamError(std::string(what) + ": negative");
    const double c = std::ceil(x);
    if (c > 9.2e18) throw ParamError(std::string(what) + ": too large");
    return static_cast<uint64_t>(c);
}

}  // namespace

double Params::factorial_k_minus_2() const { return factorial(k - 2); }

double Params::theta_pow_k_minus_2() const {
    return std::pow(theta_deg, static_cast<double>(k - 2));
}

uint64_t Params::q_of(uint64_t m_of_s) const {
    if (m_of_s == 0) return 0;
    const double s_frac = static_cast<double>(s) / static_cast<double>(n);
    const double q = consts.q_const * std::log(2.0 / delta_bar) *
                     static_cast<double>(m_of_s) * theta_pow_k_minus_2() /
                     (eps_bar * eps_bar * std::pow(1.0 - eps_bar, 3.0) *
                      factorial_k_minus_2() * ckbar * s_frac);
    return std::max<uint64_t>(1, ceil_to_u64(q, "q"));
}

uint64_t Params::r_of(uint32_t d) const {
    if (d == 0) return 0;
    const double r = consts.r_const * static_cast<double>(d) *
                     theta_pow_k_minus_2() *
                     std::log(2.0 * static_cast<double>(n) / delta_bar) /
                     (factorial_k_minus_2() * tau_c * eps_bar * eps_bar);
    return std::max<uint64_t>(1, ceil_to_u64(r, "r"));
}

uint32_t Params::typical_attempts() const {
    return static_cast<uint32_t>(std::ceil(std::log2(2.0 / gamma)));
}

Params derive_params(uint32_t n, uint32_t k, double mbar, double ckbar,
                     double eps, double delta, uint64_t seed,
                     const Constants& consts) {
    if (n < 1) throw ParamError("n must be at least 1");
    if (k < 3 || k > kMaxK) throw ParamError("k must be in [3, 16]");
    if (!(mbar >= 1)) throw ParamError("mbar must be at least 1");
    if (!(ckbar >= 1)) throw ParamError("ckbar must be at least 1");
    if (!(eps > 0 && eps < 1)) throw ParamError("epsilon must be in (0,1)");
    if (!(delta > 0 && delta < 1)) throw ParamError("delta must be in (0,1)");
    const double mbar_pow_k2 = std::pow(mbar, static_cast<double>(k) / 2.0);
    if (ckbar > mbar_pow_k2)
        throw ParamError("ckbar must not exceed mbar^(k/2)");

    Params p;
    p.n = n;
    p.k = k;
    p.mbar = mbar;
    p.ckbar = ckbar;
    p.eps = eps;
    p.eps_bar = eps / 5.0;
    p.delta = delta;
    p.delta_bar = delta / 4.0;
    p.seed = seed;
    p.consts = consts;
    p.exact_route = eps <= 1.0 / mbar_pow_k2;

    p.theta_deg = 2.0 * std::sqrt(mbar);
    const double kd = static_cast<double>(k);

    // tau_c = 32*k*ckbar^(1-1/k) / eps_bar^(1/k)
    p.tau_c = consts.tau_c_const * kd * std::pow(ckbar, 1.0 - 1.0 / kd) /
              std::pow(p.eps_bar, 1.0 / kd);
    // tau_d = 4*mbar / (eps_bar*ckbar)^(1/k)
    p.tau_d = consts.tau_d_const * mbar / std::pow(p.eps_bar * ckbar, 1.0 / kd);

    p.gamma = std::min(std::pow(mbar, -kd / 2.0), p.delta_bar);

    // s = ceil(128*k*n*ln(2/delta_bar) / (eps_bar^(2+1/k) * ckbar^(1/k))),
    // clamped at n (S = V once the whole vertex set is cheaper).
    const double s_raw = consts.s_const * kd * static_cast<double>(n) *
                         std::log(2.0 / p.delta_bar) /
                         (std::pow(p.eps_bar, 2.0 + 1.0 / kd) * std::pow(ckbar, 1.0 / kd));
    p.s_clamped = s_raw >= static_cast<double>(n);
    p.s = p.s_clamped ? n : std::max<uint64_t>(1, ceil_to_u64(s_raw, "s"));

    // t = ceil(3*(k/eps_bar)^2 * (n/sqrt(mbar)) * ln(4n/gamma^2)), clamped
    // at n. The Chernoff bound behind it needs
    //   2*exp(-(eps_bar/k)^2 * t * d(w)/n / 3) < gamma^2/(2n)
    // for every w with d(w) > theta_deg >= sqrt(mbar), which this t delivers.
    const double t_raw = consts.t_const * (kd / p.eps_bar) * (kd / p.eps_bar) *
                         (static_cast<double>(n) / std::sqrt(mbar)) *
                         std::log(4.0 * static_cast<double>(n) / (p.gamma * p.gamma));
    p.t_clamped = t_raw >= static_cast<double>(n);
    p.t = p.t_clamped ? n : std::max<uint64_t>(1, ceil_to_u64(t_raw, "t"));

    return p;
}

}  // namespace subclique
