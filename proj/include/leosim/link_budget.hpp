// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace leosim {

// Per-beam downlink budget. Transmit power is a flat PSD integrated over the
// bandwidth; noise is a flat PSD at the receiver; extra_loss_db lumps
// atmospheric and implementation margins into the path gain.
struct LinkBudget {
    double tx_psd_dbw_per_mhz = 4.0;
    double bandwidth_hz = 30e6;
    double carrier_hz = 2e9;
    double noise_psd_dbm_per_hz = -167.0;
    double rx_gain_dbi = 0.0;
    double extra_loss_db = 5.3;
};

void validate(const LinkBudget& lb);

double tx_power_w(const LinkBudget& lb);

double noise_power_w(const LinkBudget& lb);

double wavelength_m(const LinkBudget& lb);

// Free-space power gain (lambda / 4 pi d)^2 combined with extra_loss_db.
// Antenna gains are not included here.
double path_gain_linear(double distance_m, const LinkBudget& lb);

}  // namespace leosim
