// SPDX-License-Identifier: Apache-2.0
#include "leosim/kummer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace leosim {
namespace {

constexpr double kRelTol = 1e-12;
// The series terms peak near k = z, so the cap must clear the crossover point
// (z = 512) plus the post-peak decay length of a few hundred terms.
constexpr int kMaxTerms = 2000;
constexpr double kAsymptoticFrom = 512.0;  // series still fully accurate here
constexpr double kRescaleAt = 1e280;

bool is_positive_integer(double m) {
    return m == std::floor(m) && m >= 1.0 && m <= 1e6;
}

void check_domain(double m, double z) {
    if (!(m > 0.0)) throw std::domain_error("kummer_1f1: requires m > 0");
    if (!(z >= 0.0)) throw std::domain_error("kummer_1f1: requires z >= 0");
}

// For integer m the series terminates after the Kummer transform:
// 1F1(m;1;z) = e^z * sum_{i=0}^{m-1} [ (m-1)! / ((m-1-i)! (i!)^2) ] z^i.
// Returns log of the polynomial part, rescaling so any m and z < inf work.
double log_integer_poly(int m, double z) {
    double term = 1.0, sum = 1.0, log_scale = 0.0;
    for (int i = 0; i + 1 < m; ++i) {
        term *= z * (m - 1.0 - i) / ((i + 1.0) * (i + 1.0));
        sum += term;
        if (sum > kRescaleAt) {
            sum /= kRescaleAt;
            term /= kRescaleAt;
            log_scale += std::log(kRescaleAt);
        }
    }
    return std::log(sum) + log_scale;
}

// Ascending series sum_k (m)_k z^k / (k!)^2, all terms positive.
// Returns log(sum) with the same rescaling trick.
double log_series(double m, double z) {
    double term = 1.0, sum = 1.0, log_scale = 0.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (m + k) * z / ((k + 1.0) * (k + 1.0));
        sum += term;
        if (sum > kRescaleAt) {
            sum /= kRescaleAt;
            term /= kRescaleAt;
            log_scale += std::log(kRescaleAt);
        }
        // converged once the term is negligible and the ratio has dropped below 1
        if (term <= kRelTol * sum && (m + k + 1.0) * z < (k + 2.0) * (k + 2.0))
            return std::log(sum) + log_scale;
    }
    throw std::runtime_error("kummer_1f1: series did not converge");
}

// 1F1(m;1;z) ~ e^z z^(m-1) / Gamma(m) * sum_k ((1-m)_k)^2 / (k! z^k).
// The correction sum terminates for integer m and is truncated at its
// smallest term otherwise; at z = 512 the truncation error is ~1e-25.
double log_asymptotic(double m, double z) {
    double corr = 1.0, term = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 64; ++k) {
        double f = k - m;  // (1-m) + (k-1)
        term *= f * f / (k * z);
        if (std::abs(term) >= prev) break;
        corr += term;
        prev = std::abs(term);
        if (prev < 1e-18 * std::abs(corr)) break;
    }
    return z + (m - 1.0) * std::log(z) - std::lgamma(m) + std::log(corr);
}

}  // namespace

double log_kummer_1f1(double m, double z) {
    check_domain(m, z);
    if (z == 0.0) return 0.0;
    if (is_positive_integer(m))
        return z + log_integer_poly(static_cast<int>(m), z);
    if (z <= kAsymptoticFrom) return log_series(m, z);
    return log_asymptotic(m, z);
}

double kummer_1f1(double m, double z) {
    return std::exp(log_kummer_1f1(m, z));
}

}  // namespace leosim
