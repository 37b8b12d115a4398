// SPDX-License-Identifier: Apache-2.0
#include "leosim/config.hpp"

#include <fstream>
#include <set>

#include "leosim/util.hpp"

namespace leosim {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownKeys = {
    "config_version", "altitude_m", "elevations_deg", "n_rings", "cell_radius_m",
    "antenna_radius_wavelengths", "antenna_peak_gain_dbi", "tx_psd_dbw_per_mhz",
    "bandwidth_hz", "carrier_hz", "noise_psd_dbm_per_hz", "rx_gain_dbi",
    "extra_loss_db", "shadowing", "users", "grid_spacing_m", "seed", "threads",
    "output_dir"};

template <typename T>
void read_if(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

SimulationConfig config_from_json(const json& j) {
    require(j.is_object(), "config: top level must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        require(kKnownKeys.count(it.key()) > 0, "config: unknown key \"" + it.key() + "\"");

    SimulationConfig cfg;
    read_if(j, "config_version", cfg.config_version);
    require(cfg.config_version == 1, "config: unsupported config_version");
    read_if(j, "altitude_m", cfg.altitude_m);
    read_if(j, "elevations_deg", cfg.elevations_deg);
    read_if(j, "n_rings", cfg.n_rings);
    read_if(j, "cell_radius_m", cfg.cell_radius_m);
    read_if(j, "antenna_radius_wavelengths", cfg.antenna_radius_wavelengths);
    read_if(j, "antenna_peak_gain_dbi", cfg.antenna_peak_gain_dbi);
    read_if(j, "tx_psd_dbw_per_mhz", cfg.tx_psd_dbw_per_mhz);
    read_if(j, "bandwidth_hz", cfg.bandwidth_hz);
    read_if(j, "carrier_hz", cfg.carrier_hz);
    read_if(j, "noise_psd_dbm_per_hz", cfg.noise_psd_dbm_per_hz);
    read_if(j, "rx_gain_dbi", cfg.rx_gain_dbi);
    read_if(j, "extra_loss_db", cfg.extra_loss_db);
    read_if(j, "users", cfg.users);
    read_if(j, "grid_spacing_m", cfg.grid_spacing_m);
    read_if(j, "seed", cfg.seed);
    read_if(j, "threads", cfg.threads);
    read_if(j, "output_dir", cfg.output_dir);

    if (j.contains("shadowing")) {
        const json& s = j.at("shadowing");
        if (s.is_string()) {
            cfg.shadowing = s.get<std::string>();
            if (cfg.shadowing != "none") shadowing_preset(cfg.shadowing);  // validates
        } else if (s.is_object()) {
            for (auto it = s.begin(); it != s.end(); ++it)
                require(it.key() == "b" || it.key() == "m" || it.key() == "omega",
                        "config: unknown shadowing key \"" + it.key() + "\"");
            SRParams p{s.at("b").get<double>(), s.at("m").get<double>(),
                       s.at("omega").get<double>()};
            validate(p);
            cfg.shadowing = "custom";
            cfg.shadowing_params = p;
        } else {
            require(false, "config: shadowing must be a preset name or {b, m, omega}");
        }
    }

    require(!cfg.elevations_deg.empty(), "config: elevations_deg must not be empty");
    require(cfg.users > 0, "config: users must be positive");
    require(cfg.threads >= 0, "config: threads must be nonnegative");
    require(cfg.grid_spacing_m > 0.0, "config: grid_spacing_m must be positive");
    validate(budget_of(cfg));
    return cfg;
}

SimulationConfig load_config(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config: " + path + ": " + e.what());
    }
    return config_from_json(j);
}

json config_to_json(const SimulationConfig& cfg) {
    json j;
    j["config_version"] = cfg.config_version;
    j["altitude_m"] = cfg.altitude_m;
    j["elevations_deg"] = cfg.elevations_deg;
    j["n_rings"] = cfg.n_rings;
    j["cell_radius_m"] = cfg.cell_radius_m;
    j["antenna_radius_wavelengths"] = cfg.antenna_radius_wavelengths;
    j["antenna_peak_gain_dbi"] = cfg.antenna_peak_gain_dbi;
    j["tx_psd_dbw_per_mhz"] = cfg.tx_psd_dbw_per_mhz;
    j["bandwidth_hz"] = cfg.bandwidth_hz;
    j["carrier_hz"] = cfg.carrier_hz;
    j["noise_psd_dbm_per_hz"] = cfg.noise_psd_dbm_per_hz;
    j["rx_gain_dbi"] = cfg.rx_gain_dbi;
    j["extra_loss_db"] = cfg.extra_loss_db;
    if (cfg.shadowing_params) {
        j["shadowing"] = {{"b", cfg.shadowing_params->b},
                          {"m", cfg.shadowing_params->m},
                          {"omega", cfg.shadowing_params->omega}};
    } else {
        j["shadowing"] = cfg.shadowing;
    }
    j["users"] = cfg.users;
    j["grid_spacing_m"] = cfg.grid_spacing_m;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    j["output_dir"] = cfg.output_dir;
    return j;
}

AntennaPattern antenna_of(const SimulationConfig& cfg) {
    return {cfg.antenna_radius_wavelengths, cfg.antenna_peak_gain_dbi};
}

LinkBudget budget_of(const SimulationConfig& cfg) {
    return {cfg.tx_psd_dbw_per_mhz, cfg.bandwidth_hz,     cfg.carrier_hz,
            cfg.noise_psd_dbm_per_hz, cfg.rx_gain_dbi, cfg.extra_loss_db};
}

std::optional<SRParams> resolve_shadowing(const SimulationConfig& cfg,
                                          const std::string& name) {
    if (name == "none") return std::nullopt;
    if (name == "custom") {
        require(cfg.shadowing_params.has_value(),
                "shadowing \"custom\" needs inline parameters in the config");
        return cfg.shadowing_params;
    }
    return shadowing_preset(name);
}

Scenario scenario_of(const SimulationConfig& cfg, double elevation_deg,
                     const std::string& shadowing_name) {
    Scenario sc;
    sc.altitude_m = cfg.altitude_m;
    sc.elevation_deg = elevation_deg;
    sc.n_rings = cfg.n_rings;
    sc.cell_radius_m = cfg.cell_radius_m;
    sc.pattern = antenna_of(cfg);
    sc.budget = budget_of(cfg);
    sc.shadowing = resolve_shadowing(cfg, shadowing_name);
    sc.shadowing_name = shadowing_name;
    sc.n_users = cfg.users;
    sc.grid_spacing_m = cfg.grid_spacing_m;
    sc.seed = cfg.seed;
    sc.threads = cfg.threads;
    return sc;
}

}  // namespace leosim
