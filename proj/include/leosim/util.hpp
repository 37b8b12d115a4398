// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace leosim {

inline constexpr double pi = std::numbers::pi;
inline constexpr double speed_of_light_m_s = 299792458.0;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

inline void require_domain(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error(what);
}

}  // namespace leosim
