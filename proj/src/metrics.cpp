// SPDX-License-Identifier: Apache-2.0
#include "leosim/metrics.hpp"

#include <cmath>
#include <limits>

#include "leosim/sr_distributions.hpp"
#include "leosim/util.hpp"

namespace leosim {

GainProfile gain_profile(const GroundPoint& user, const BeamLayout& layout,
                         const AntennaPattern& ant, const LinkBudget& lb,
                         int serving_beam) {
    require(serving_beam >= 0 && serving_beam < layout.n_beams(),
            "gain_profile: serving beam out of range");
    double path = path_gain_linear(slant_distance_m(user, layout), lb);
    double rx = db_to_linear(lb.rx_gain_dbi);
    GainProfile prof;
    for (int beam = 0; beam < layout.n_beams(); ++beam) {
        PlaneAngles a = off_boresight_angles(user, beam, layout);
        double g = combined_gain(a.theta_rad, a.phi_rad, ant) * path * rx;
        if (beam == serving_beam)
            prof.desired_gain = g;
        else
            prof.interference_gain_sum += g;
    }
    return prof;
}

SRParams snr_distribution(const GainProfile& prof, const SRParams& channel,
                          const LinkBudget& lb) {
    require(prof.desired_gain > 0.0, "snr_distribution: desired gain must be positive");
    double k = tx_power_w(lb) * prof.desired_gain / noise_power_w(lb);
    return scale(channel, k);
}

std::optional<SRParams> inr_distribution(const GainProfile& prof, const SRParams& channel,
                                         const LinkBudget& lb) {
    if (prof.interference_gain_sum <= 0.0) return std::nullopt;
    double k = tx_power_w(lb) * prof.interference_gain_sum / noise_power_w(lb);
    return scale(channel, k);
}

std::optional<double> sir(const GainProfile& prof) {
    require(prof.desired_gain > 0.0, "sir: desired gain must be positive");
    if (prof.interference_gain_sum <= 0.0) return std::nullopt;
    return prof.desired_gain / prof.interference_gain_sum;
}

MetricSample realize_metrics(const GainProfile& prof, const LinkBudget& lb,
                             double h_squared) {
    require(prof.desired_gain > 0.0, "realize_metrics: desired gain must be positive");
    require(std::isfinite(h_squared) && h_squared >= 0.0,
            "realize_metrics: fading power must be nonnegative");
    MetricSample s;
    double ptx = tx_power_w(lb);
    s.noise_w = noise_power_w(lb);
    s.p_desired_w = ptx * prof.desired_gain * h_squared;
    s.p_interference_w = ptx * prof.interference_gain_sum * h_squared;
    s.snr = s.p_desired_w / s.noise_w;
    s.inr = s.p_interference_w / s.noise_w;
    s.sir = prof.interference_gain_sum > 0.0
                ? prof.desired_gain / prof.interference_gain_sum
                : std::numeric_limits<double>::infinity();
    s.sinr = s.snr / (1.0 + s.inr);
    return s;
}

double snr_outage(const GainProfile& prof, const IntegerSRParams& channel,
                  const LinkBudget& lb, double gamma) {
    require_domain(std::isfinite(gamma) && gamma >= 0.0,
                   "snr_outage: threshold must be nonnegative");
    if (gamma == 0.0) return 0.0;
    double k = tx_power_w(lb) * prof.desired_gain / noise_power_w(lb);
    require(k > 0.0, "snr_outage: desired gain must be positive");
    // SNR = k h^2 follows the channel law with b and omega scaled by k
    IntegerSRParams scaled{k * channel.b, channel.m, k * channel.omega};
    return ssr_cdf_int(gamma, scaled);
}

}  // namespace leosim
