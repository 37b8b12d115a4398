// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leosim/geometry.hpp"
#include "leosim/link_budget.hpp"
#include "leosim/monte_carlo.hpp"
#include "leosim/sr_params.hpp"

namespace leosim {

inline constexpr const char* kVersion = "0.1.0";

// Flat JSON config, config_version 1. Unknown keys are rejected so typos
// cannot silently fall back to defaults. `shadowing` is either a preset name
// ("none", "light", "average", "heavy") or an inline {"b":..,"m":..,"omega":..}.
struct SimulationConfig {
    int config_version = 1;
    double altitude_m = 500e3;
    std::vector<double> elevations_deg = {90.0, 60.0, 45.0};
    int n_rings = 2;
    double cell_radius_m = 12.6e3;
    double antenna_radius_wavelengths = 10.0;
    double antenna_peak_gain_dbi = 30.0;
    double tx_psd_dbw_per_mhz = 4.0;
    double bandwidth_hz = 30e6;
    double carrier_hz = 2e9;
    double noise_psd_dbm_per_hz = -167.0;
    double rx_gain_dbi = 0.0;
    double extra_loss_db = 5.3;
    std::string shadowing = "none";
    std::optional<SRParams> shadowing_params;  // set when given inline
    long long users = 100000;
    double grid_spacing_m = 1000.0;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string output_dir = "out";
};

SimulationConfig load_config(const std::string& path);
SimulationConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const SimulationConfig& cfg);

AntennaPattern antenna_of(const SimulationConfig& cfg);
LinkBudget budget_of(const SimulationConfig& cfg);

// Resolve a shadowing selector ("none", preset name, or "custom" for the
// inline parameters) against the config.
std::optional<SRParams> resolve_shadowing(const SimulationConfig& cfg,
                                          const std::string& name);

Scenario scenario_of(const SimulationConfig& cfg, double elevation_deg,
                     const std::string& shadowing_name);

}  // namespace leosim
