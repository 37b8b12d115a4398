// SPDX-License-Identifier: Apache-2.0
#include "leosim/sr_params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "leosim/util.hpp"

namespace leosim {

void validate(const SRParams& p) {
    require(std::isfinite(p.b) && p.b > 0.0, "shadowed-Rician: b must be positive");
    require(std::isfinite(p.m) && p.m > 0.0, "shadowed-Rician: m must be positive");
    require(std::isfinite(p.omega) && p.omega >= 0.0,
            "shadowed-Rician: omega must be nonnegative");
}

void validate(const IntegerSRParams& p) {
    require(std::isfinite(p.b) && p.b > 0.0, "shadowed-Rician: b must be positive");
    require(p.m >= 1, "shadowed-Rician: integer order must be at least 1");
    require(std::isfinite(p.omega) && p.omega >= 0.0,
            "shadowed-Rician: omega must be nonnegative");
}

SRParams shadowing_preset(std::string_view name) {
    if (name == "light") return {0.158, 19.4, 1.29};
    if (name == "average") return {0.126, 10.1, 0.835};
    if (name == "heavy") return {0.063, 0.739, 8.97e-4};
    throw std::invalid_argument("unknown shadowing preset: " + std::string(name));
}

SRParams scale(const SRParams& p, double k) {
    validate(p);
    require(std::isfinite(k) && k > 0.0, "scale: factor must be positive");
    return {k * p.b, p.m, k * p.omega};
}

std::optional<double> linear_relation_check(const SRParams& p, const SRParams& q,
                                            double rel_tol) {
    validate(p);
    validate(q);
    if (std::abs(p.m - q.m) > rel_tol * std::max(std::abs(p.m), std::abs(q.m)))
        return std::nullopt;
    double k = p.b / q.b;
    if (p.omega == 0.0 && q.omega == 0.0) return k;  // Rayleigh pair, b alone decides
    if (p.omega == 0.0 || q.omega == 0.0) return std::nullopt;
    double ko = p.omega / q.omega;
    if (std::abs(k - ko) > rel_tol * std::max(k, ko)) return std::nullopt;
    return k;
}

IntegerSRParams round_fading_order(const SRParams& p) {
    validate(p);
    long long r = std::llround(p.m);  // rounds half away from zero
    r = std::max(1LL, std::min(r, 1000000LL));
    return {p.b, static_cast<int>(r), p.omega};
}

}  // namespace leosim
