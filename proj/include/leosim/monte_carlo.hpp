// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leosim/geometry.hpp"
#include "leosim/link_budget.hpp"
#include "leosim/random.hpp"
#include "leosim/sr_params.hpp"

namespace leosim {

enum class Metric { snr, sir, inr, sinr };

Metric metric_from_string(std::string_view s);
const char* to_string(Metric m);

// Everything one experiment needs. `shadowing` empty means a deterministic
// unit-power channel (no fading draw at all).
struct Scenario {
    double altitude_m = 500e3;
    double elevation_deg = 90.0;
    int n_rings = 2;
    double cell_radius_m = 12.6e3;
    AntennaPattern pattern{};
    LinkBudget budget{};
    std::optional<SRParams> shadowing{};
    std::string shadowing_name = "none";
    long long n_users = 100000;
    double grid_spacing_m = 1000.0;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
};

void validate(const Scenario& sc);

// Sorted empirical distribution of one metric in dB.
struct EmpiricalCdf {
    std::string metric;
    std::string tag;
    std::vector<double> values_db;  // ascending

    // P(X <= v), right continuous
    double evaluate(double v_db) const;
    // linear interpolation between order statistics (the common "type 7" rule)
    double quantile(double p) const;
};

struct HeatmapGrid {
    double x0_m = 0.0;
    double y0_m = 0.0;
    double spacing_m = 0.0;
    int nx = 0;
    int ny = 0;
    std::vector<double> values_db;  // row-major, index = iy * nx + ix

    double x_at(int ix) const { return x0_m + ix * spacing_m; }
    double y_at(int iy) const { return y0_m + iy * spacing_m; }
};

// Users drop uniformly in the centre cell, served by beam 0, one independent
// channel draw each. The user position always comes out of the per-user
// stream before the fading draw, so placement is identical across shadowing
// choices for a fixed seed.
EmpiricalCdf run_cdf_experiment(const Scenario& sc, Metric metric);

// Regular grid over the footprint (hull of the cell centres padded by one
// cell radius, symmetric about the origin); each pixel is served by its
// nearest beam and gets one independent channel draw keyed by pixel index.
HeatmapGrid run_heatmap(const Scenario& sc, Metric metric);

// (p, quantile) pairs for the requested probabilities.
std::vector<std::pair<double, double>> summarize(const EmpiricalCdf& cdf,
                                                 const std::vector<double>& probs);

// Uniform point in the hexagonal cell with the layout's orientation,
// circumradius R (rejection from the bounding square).
GroundPoint sample_user_in_cell(Rng& rng, double cell_radius_m);

// Chunked fork-join helper; with `threads` resolved to 1 it runs inline.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace leosim
