// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "leosim/kummer.hpp"
#include "leosim/quadrature.hpp"
#include "leosim/sr_distributions.hpp"
#include "support/oracles.hpp"

using namespace leosim;

namespace {

const SRParams kLight{0.158, 19.4, 1.29};
const SRParams kAverage{0.126, 10.1, 0.835};
const SRParams kHeavy{0.063, 0.739, 8.97e-4};

// textbook density written straight down, long double, for cross-checking
double ssr_pdf_reference(double y, const SRParams& p) {
    long double tpb = 2.0L * p.b * p.m + p.omega;
    long double pre = std::pow(2.0L * p.b * p.m / tpb, (long double)p.m) / (2.0L * p.b);
    long double z = p.omega * y / (2.0L * p.b * tpb);
    return static_cast<double>(pre * std::exp(-(long double)y / (2.0L * p.b)) *
                               oracles::naive_1f1(p.m, z, 2000, 1e-20L));
}

}  // namespace

TEST_CASE("Rayleigh degenerate forms") {
    // omega = 0, b = 1/2: envelope density 2 x e^{-x^2}, power density e^{-y}
    SRParams p{0.5, 1.0, 0.0};
    CHECK(sr_pdf(1.0, p) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-13));
    CHECK(sr_pdf(0.0, p) == 0.0);
    CHECK(ssr_pdf(0.0, p) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ssr_pdf(2.0, p) == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
    // the order is irrelevant without a line-of-sight component
    SRParams pm{0.5, 7.3, 0.0};
    CHECK(ssr_pdf(1.3, pm) == doctest::Approx(ssr_pdf(1.3, p)).epsilon(1e-12));
}

TEST_CASE("density values against the straight transcription") {
    for (const SRParams& p : {kLight, kAverage, kHeavy}) {
        for (double y : {0.0, 0.05, 0.3, 1.0, 2.2}) {
            CAPTURE(p.m);
            CAPTURE(y);
            CHECK(ssr_pdf(y, p) == doctest::Approx(ssr_pdf_reference(y, p)).epsilon(1e-11));
        }
    }
}

TEST_CASE("envelope and power densities are change-of-variable consistent") {
    for (const SRParams& p : {kLight, kAverage, kHeavy}) {
        for (double y : {0.09, 0.5, 1.0, 2.5}) {
            CAPTURE(p.m);
            CAPTURE(y);
            double x = std::sqrt(y);
            CHECK(ssr_pdf(y, p) ==
                  doctest::Approx(sr_pdf(x, p) / (2.0 * x)).epsilon(1e-11));
        }
    }
}

TEST_CASE("densities integrate to one") {
    for (const SRParams& p : {kLight, kAverage, kHeavy}) {
        CAPTURE(p.m);
        auto fx = [&p](double x) { return sr_pdf(x, p); };
        auto fy = [&p](double y) { return ssr_pdf(y, p); };
        CHECK(integrate_half_line(fx, 0.0, 1e-10).value ==
              doctest::Approx(1.0).epsilon(1e-8));
        CHECK(integrate_half_line(fy, 0.0, 1e-10).value ==
              doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("heavy shadowing density decreases from y = 0") {
    double prev = ssr_pdf(0.0, kHeavy);
    for (int i = 1; i <= 50; ++i) {
        double y = 0.02 * i;
        double cur = ssr_pdf(y, kHeavy);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("integer-order density matches the general one at integer m") {
    for (IntegerSRParams q : {IntegerSRParams{0.158, 19, 1.29},
                              IntegerSRParams{0.126, 10, 0.835},
                              IntegerSRParams{0.063, 1, 8.97e-4},
                              IntegerSRParams{0.2, 2, 1.0}}) {
        SRParams p = to_params(q);
        for (double y : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
            CAPTURE(q.m);
            CAPTURE(y);
            CHECK(ssr_pdf_int(y, q) == doctest::Approx(ssr_pdf(y, p)).epsilon(1e-10));
        }
    }
}

TEST_CASE("integer order one is exponential") {
    IntegerSRParams q{0.5, 1, 1.0};
    // mean 2b + omega = 2
    CHECK(ssr_pdf_int(0.0, q) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(ssr_pdf_int(2.0, q) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-13));
    CHECK(ssr_cdf_int(2.0, q) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
}

TEST_CASE("closed-form distribution function") {
    for (IntegerSRParams q : {IntegerSRParams{0.158, 19, 1.29},
                              IntegerSRParams{0.126, 10, 0.835},
                              IntegerSRParams{0.063, 1, 8.97e-4}}) {
        CAPTURE(q.m);
        CHECK(ssr_cdf_int(0.0, q) == 0.0);
        double mean = ssr_mean_int(q);
        CHECK(ssr_cdf_int(1e6 * mean, q) == doctest::Approx(1.0).epsilon(1e-9));

        // nondecreasing
        double prev = 0.0;
        for (int i = 1; i <= 60; ++i) {
            double y = mean * i / 10.0;
            double cur = ssr_cdf_int(y, q);
            CHECK(cur >= prev);
            prev = cur;
        }

        // derivative recovers the density
        for (double y : {0.2 * mean, mean, 2.5 * mean}) {
            double h = 1e-6 * mean;
            double d = oracles::num_derivative(
                [&q](double t) { return ssr_cdf_int(t, q); }, y, h);
            CHECK(d == doctest::Approx(ssr_pdf_int(y, q)).epsilon(1e-6));
        }

        // agrees with quadrature of the matching general density
        SRParams p = to_params(q);
        for (double y : {0.3 * mean, mean, 3.0 * mean}) {
            CAPTURE(y);
            CHECK(ssr_cdf_int(y, q) == doctest::Approx(ssr_cdf(y, p)).epsilon(1e-8));
        }
    }
}

TEST_CASE("quadrature distribution function handles edge arguments") {
    CHECK(ssr_cdf(0.0, kAverage) == 0.0);
    CHECK(ssr_cdf(1e9, kAverage) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(ssr_cdf(1e290, kAverage) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("mean of the squared envelope") {
    CHECK(ssr_mean_int({0.126, 10, 0.835}) == doctest::Approx(1.087).epsilon(1e-15));
    CHECK(ssr_mean_int({0.5, 1, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ssr_mean_int({0.158, 19, 1.29}) == doctest::Approx(1.606).epsilon(1e-15));
}

TEST_CASE("order rounding moves the distribution very little") {
    CHECK(rounding_cdf_distance(kLight, 201) < 0.03);
    CHECK(rounding_cdf_distance(kAverage, 201) < 0.03);
    CHECK(rounding_cdf_distance(kHeavy, 201) < 0.03);
}

TEST_CASE("domain violations throw") {
    CHECK_THROWS_AS(sr_pdf(-0.1, kAverage), std::domain_error);
    CHECK_THROWS_AS(ssr_pdf(-1e-12, kAverage), std::domain_error);
    CHECK_THROWS_AS(ssr_cdf(-1.0, kAverage), std::domain_error);
    CHECK_THROWS_AS(ssr_pdf_int(-1.0, IntegerSRParams{0.1, 2, 0.1}), std::domain_error);
    CHECK_THROWS_AS(ssr_cdf_int(-1.0, IntegerSRParams{0.1, 2, 0.1}), std::domain_error);
    CHECK_THROWS_AS(ssr_pdf(1.0, SRParams{0.0, 1.0, 1.0}), std::invalid_argument);
}
