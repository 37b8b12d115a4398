// SPDX-License-Identifier: Apache-2.0
#include "leosim/bessel.hpp"

#include <cmath>
#include <limits>

#include "leosim/util.hpp"

namespace leosim {
namespace {

constexpr double kSeriesLimit = 12.0;

// sum_k (-q)^k / (k! (k+1)!)  with q = (x/2)^2, so that
// J1(x) = (x/2) * S and 2*J1(x)/x = S.
double j1_series_sum(double q) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 64; ++k) {
        term *= -q / ((k + 1.0) * (k + 2.0));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Hankel asymptotic expansion for x > kSeriesLimit, truncated at the smallest
// term. Worst case (x just above 12) is accurate to about 1e-11.
double j1_asymptotic(double x) {
    constexpr double mu = 4.0;  // 4 * nu^2 for nu = 1
    double p = 1.0, q = 0.0;
    double a = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 30; ++k) {
        double odd = 2.0 * k - 1.0;
        a *= (mu - odd * odd) / (k * 8.0 * x);
        if (std::abs(a) >= prev) break;  // divergent tail reached
        int j = (k % 2 == 0) ? k / 2 : (k - 1) / 2;
        double signed_a = (j % 2 == 0) ? a : -a;
        if (k % 2 == 0)
            p += signed_a;
        else
            q += signed_a;
        prev = std::abs(a);
        if (prev < 1e-17) break;
    }
    double chi = x - 0.75 * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j1(double x) {
    double ax = std::abs(x);
    double v;
    if (ax <= kSeriesLimit)
        v = 0.5 * ax * j1_series_sum(0.25 * ax * ax);
    else
        v = j1_asymptotic(ax);
    return x < 0.0 ? -v : v;  // J1 is odd
}

double two_j1_over_x(double x) {
    double ax = std::abs(x);
    if (ax <= kSeriesLimit) return j1_series_sum(0.25 * ax * ax);
    return 2.0 * j1_asymptotic(ax) / ax;
}

}  // namespace leosim
