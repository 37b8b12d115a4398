// SPDX-License-Identifier: Apache-2.0
#include "leosim/sr_sampler.hpp"

#include <cmath>

#include "leosim/util.hpp"

namespace leosim {
namespace {

double sample_power_impl(const SRParams& p, Rng& rng) {
    double s = std::sqrt(p.b);
    double re = s * rng.normal();
    double im = s * rng.normal();
    if (p.omega > 0.0) {
        double a = std::sqrt(rng.gamma(p.m, p.omega / p.m));
        double phase = 2.0 * pi * rng.uniform();
        re += a * std::cos(phase);
        im += a * std::sin(phase);
    }
    return re * re + im * im;
}

}  // namespace

double sample_ssr(const SRParams& p, Rng& rng) {
    validate(p);
    return sample_power_impl(p, rng);
}

double sample_sr(const SRParams& p, Rng& rng) {
    validate(p);
    return std::sqrt(sample_power_impl(p, rng));
}

SRSampler::SRSampler(const SRParams& p, std::uint64_t seed) : p_(p), rng_(seed) {
    validate(p_);
}

double SRSampler::sample() { return sample_sr(p_, rng_); }

double SRSampler::sample_power() { return sample_ssr(p_, rng_); }

}  // namespace leosim
