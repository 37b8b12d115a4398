// SPDX-License-Identifier: Apache-2.0
#include "leosim/sr_distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "leosim/kummer.hpp"
#include "leosim/quadrature.hpp"
#include "leosim/util.hpp"

namespace leosim {
namespace {

// m * log( 2bm / (2bm + omega) ), the log of the power prefactor
double log_prefactor(const SRParams& p) {
    double tpb = 2.0 * p.b * p.m + p.omega;
    return p.m * (std::log(2.0 * p.b * p.m) - std::log(tpb));
}

// Regularized lower incomplete gamma P(n, x) for integer n >= 1. Both branches
// sum Poisson probabilities starting from the largest term, so nothing
// overflows and cancellation never exceeds one rounding step.
double reg_lower_gamma(int n, double x) {
    if (x <= 0.0) return 0.0;
    auto poisson_pmf = [x](int k) {
        return std::exp(k * std::log(x) - std::lgamma(k + 1.0) - x);
    };
    if (x >= n) {
        // complement of the left Poisson tail, which is at most ~0.6 here
        double t = poisson_pmf(n - 1);
        double s = t;
        for (int k = n - 1; k >= 1; --k) {
            t *= k / x;
            s += t;
            if (t <= 1e-17 * s) break;
        }
        return 1.0 - s;
    }
    // x < n: P(n, x) = sum_{k>=n} e^{-x} x^k / k!, terms strictly decreasing
    double t = poisson_pmf(n);
    double s = t;
    for (int k = n + 1; k < n + 100000; ++k) {
        t *= x / k;
        s += t;
        if (t <= 1e-17 * s || t == 0.0) break;
    }
    return s;
}

}  // namespace

double sr_pdf(double x, const SRParams& p) {
    validate(p);
    require_domain(x >= 0.0, "sr_pdf: envelope must be nonnegative");
    if (x == 0.0) return 0.0;
    double tpb = 2.0 * p.b * p.m + p.omega;
    double z = p.omega <= 0.0 ? 0.0 : p.omega * x * x / (2.0 * p.b * tpb);
    double lf = std::log(x / p.b) + log_prefactor(p) - x * x / (2.0 * p.b) +
                log_kummer_1f1(p.m, z);
    return std::exp(lf);
}

double ssr_pdf(double y, const SRParams& p) {
    validate(p);
    require_domain(y >= 0.0, "ssr_pdf: power must be nonnegative");
    double tpb = 2.0 * p.b * p.m + p.omega;
    double z = p.omega <= 0.0 ? 0.0 : p.omega * y / (2.0 * p.b * tpb);
    double lf = -std::log(2.0 * p.b) + log_prefactor(p) - y / (2.0 * p.b) +
                log_kummer_1f1(p.m, z);
    return std::exp(lf);
}

double ssr_cdf(double y, const SRParams& p, double rel_tol) {
    validate(p);
    require_domain(std::isfinite(y) && y >= 0.0, "ssr_cdf: power must be nonnegative");
    if (y == 0.0) return 0.0;
    auto f = [&p](double t) { return ssr_pdf(t, p); };
    // piecewise so a huge upper limit cannot make the sampler skip the mass
    double scale = 2.0 * p.b + p.omega;
    double acc = 0.0, lo = 0.0;
    double edge = std::min(y, 0.5 * scale);
    for (;;) {
        acc += integrate(f, lo, edge, rel_tol, 1e-14).value;
        if (edge >= y) break;
        lo = edge;
        edge = std::min(y, 4.0 * edge);
    }
    return std::min(1.0, std::max(0.0, acc));
}

double ssr_pdf_int(double y, const IntegerSRParams& p) {
    validate(p);
    require_domain(y >= 0.0, "ssr_pdf_int: power must be nonnegative");
    double b = p.b, omega = p.omega;
    double m = p.m;
    double tpb = 2.0 * b * m + omega;
    // Kummer polynomial at zeta = omega*y / (2b*(2bm+omega)); combined with its
    // e^zeta factor the exponent becomes -my/(2bm+omega)
    double zeta = omega <= 0.0 ? 0.0 : omega * y / (2.0 * b * tpb);
    double term = 1.0, sum = 1.0;
    for (int i = 0; i + 1 < p.m; ++i) {
        term *= zeta * (m - 1.0 - i) / ((i + 1.0) * (i + 1.0));
        sum += term;
    }
    double lf = -std::log(2.0 * b) + m * (std::log(2.0 * b * m) - std::log(tpb)) -
                m * y / tpb + std::log(sum);
    return std::exp(lf);
}

double ssr_cdf_int(double y, const IntegerSRParams& p) {
    validate(p);
    require_domain(y >= 0.0, "ssr_cdf_int: power must be nonnegative");
    if (y == 0.0) return 0.0;
    double omega = p.omega;
    double m = p.m;
    double tpb = 2.0 * p.b * m + omega;
    double x = m * y / tpb;
    // Integrating the density term by term rearranges the closed form into a
    // binomial mixture of Erlang distribution functions: weights
    // Binom(m-1, omega/(2bm+omega)), components P(i+1, my/(2bm+omega)).
    // Every factor lives in [0,1], which keeps any order stable.
    double q = omega / tpb;
    double w = std::exp((m - 1.0) * std::log1p(-q));
    double acc = 0.0;
    for (int i = 0; i < p.m; ++i) {
        acc += w * reg_lower_gamma(i + 1, x);
        if (i + 1 < p.m) w *= q / (1.0 - q) * (m - 1.0 - i) / (i + 1.0);
    }
    return std::min(1.0, std::max(0.0, acc));
}

double ssr_mean_int(const IntegerSRParams& p) {
    validate(p);
    return 2.0 * p.b + p.omega;
}

double rounding_cdf_distance(const SRParams& p, int grid_points) {
    validate(p);
    require(grid_points >= 16, "rounding_cdf_distance: grid too small");
    IntegerSRParams q = round_fading_order(p);
    // upper end: where the integer-order law holds all but 1e-9 of its mass,
    // padded because the two laws' tails differ slightly
    double hi = 2.0 * p.b + p.omega;
    while (ssr_cdf_int(hi, q) < 1.0 - 1e-9) hi *= 2.0;
    hi *= 1.5;
    double sup = 0.0;
    double f_true = 0.0;
    double prev_y = 0.0;
    auto pdf = [&p](double t) { return ssr_pdf(t, p); };
    for (int i = 1; i < grid_points; ++i) {
        double y = hi * i / (grid_points - 1);
        f_true += integrate(pdf, prev_y, y, 1e-10, 1e-13).value;
        prev_y = y;
        sup = std::max(sup, std::abs(f_true - ssr_cdf_int(y, q)));
    }
    return sup;
}

}  // namespace leosim
