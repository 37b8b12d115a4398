// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "leosim/random.hpp"
#include "leosim/sr_params.hpp"

namespace leosim {

// One draw of the shadowed-Rician envelope |h|: circular Gaussian scatter of
// variance b per axis plus a line-of-sight term whose power is
// Gamma(m, omega/m) with a uniform phase.
double sample_sr(const SRParams& p, Rng& rng);

// One draw of the squared envelope |h|^2; uses the same construction so that
// sample_sr(p, rng)^2 and sample_ssr(p, rng) follow the same law.
double sample_ssr(const SRParams& p, Rng& rng);

// Convenience wrapper owning its stream; deterministic for a given seed.
class SRSampler {
public:
    SRSampler(const SRParams& p, std::uint64_t seed);
    double sample();        // envelope
    double sample_power();  // squared envelope

private:
    SRParams p_;
    Rng rng_;
};

}  // namespace leosim
