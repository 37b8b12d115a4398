// SPDX-License-Identifier: Apache-2.0
#include "leosim/link_budget.hpp"

#include <cmath>

#include "leosim/util.hpp"

namespace leosim {

void validate(const LinkBudget& lb) {
    require(std::isfinite(lb.tx_psd_dbw_per_mhz), "link budget: tx PSD must be finite");
    require(std::isfinite(lb.bandwidth_hz) && lb.bandwidth_hz > 0.0,
            "link budget: bandwidth must be positive");
    require(std::isfinite(lb.carrier_hz) && lb.carrier_hz > 0.0,
            "link budget: carrier must be positive");
    require(std::isfinite(lb.noise_psd_dbm_per_hz), "link budget: noise PSD must be finite");
    require(std::isfinite(lb.rx_gain_dbi), "link budget: rx gain must be finite");
    require(std::isfinite(lb.extra_loss_db) && lb.extra_loss_db >= 0.0,
            "link budget: extra loss must be nonnegative");
}

double tx_power_w(const LinkBudget& lb) {
    validate(lb);
    return db_to_linear(lb.tx_psd_dbw_per_mhz) * (lb.bandwidth_hz / 1e6);
}

double noise_power_w(const LinkBudget& lb) {
    validate(lb);
    // dBm -> dBW is -30 dB
    return db_to_linear(lb.noise_psd_dbm_per_hz - 30.0) * lb.bandwidth_hz;
}

double wavelength_m(const LinkBudget& lb) {
    validate(lb);
    return speed_of_light_m_s / lb.carrier_hz;
}

double path_gain_linear(double distance_m, const LinkBudget& lb) {
    validate(lb);
    require(std::isfinite(distance_m) && distance_m > 0.0,
            "path gain: distance must be positive");
    double r = wavelength_m(lb) / (4.0 * pi * distance_m);
    return r * r * db_to_linear(-lb.extra_loss_db);
}

}  // namespace leosim
