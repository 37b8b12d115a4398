// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "leosim/geometry.hpp"
#include "leosim/link_budget.hpp"
#include "leosim/sr_params.hpp"

namespace leosim {

// Deterministic per-user link gains (antenna patterns, path gain and receive
// gain folded in; transmit power and fading are not).
struct GainProfile {
    double desired_gain = 0.0;             // serving beam
    double interference_gain_sum = 0.0;    // all other beams
};

GainProfile gain_profile(const GroundPoint& user, const BeamLayout& layout,
                         const AntennaPattern& ant, const LinkBudget& lb,
                         int serving_beam = 0);

// With a common fading coefficient on all beams, SNR = k * |h|^2 is itself
// shadowed-Rician with linearly scaled parameters; same for INR. The INR law
// does not exist when there is no interference (single beam), hence optional.
SRParams snr_distribution(const GainProfile& prof, const SRParams& channel,
                          const LinkBudget& lb);
std::optional<SRParams> inr_distribution(const GainProfile& prof, const SRParams& channel,
                                         const LinkBudget& lb);

// Fading-free signal-to-interference ratio; nullopt when nothing interferes.
std::optional<double> sir(const GainProfile& prof);

// One realization for a given fading power h^2. `sir` is computed from the
// gain profile alone (the common fading cancels), so it is identical across
// draws for a fixed user.
struct MetricSample {
    double p_desired_w = 0.0;
    double p_interference_w = 0.0;
    double noise_w = 0.0;
    double snr = 0.0;
    double inr = 0.0;
    double sir = 0.0;
    double sinr = 0.0;
};

MetricSample realize_metrics(const GainProfile& prof, const LinkBudget& lb,
                             double h_squared);

// P(SNR <= gamma) in closed form, using the integer-order distribution of the
// scaled channel law. gamma is linear, not dB.
double snr_outage(const GainProfile& prof, const IntegerSRParams& channel,
                  const LinkBudget& lb, double gamma);

}  // namespace leosim
