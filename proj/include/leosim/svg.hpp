// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "leosim/geometry.hpp"
#include "leosim/monte_carlo.hpp"

namespace leosim {

// Minimal self-contained SVG output; enough to eyeball results without
// leaving the terminal workflow.

struct CdfSeries {
    std::string name;
    const std::vector<double>* values_db;  // sorted ascending
};

void write_cdf_svg(const std::filesystem::path& path, const std::string& title,
                   const std::string& x_label, const std::vector<CdfSeries>& series);

void write_heatmap_svg(const std::filesystem::path& path, const std::string& title,
                       const HeatmapGrid& grid, const std::vector<GroundPoint>& centers);

}  // namespace leosim
