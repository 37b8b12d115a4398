// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>

namespace leosim {

// Shadowed-Rician parameter triple: b is half the average scattered power,
// m the Nakagami shadowing order of the line-of-sight amplitude, omega the
// average line-of-sight power. omega = 0 degenerates to Rayleigh.
struct SRParams {
    double b = 0.0;
    double m = 0.0;
    double omega = 0.0;
};

// Variant with the order rounded to an integer, for the closed-form density
// and distribution expressions.
struct IntegerSRParams {
    double b = 0.0;
    int m = 1;
    double omega = 0.0;
};

void validate(const SRParams& p);
void validate(const IntegerSRParams& p);

// Built-in shadowing presets: "light", "average", "heavy".
SRParams shadowing_preset(std::string_view name);

// Parameters of k * Y when Y has squared-envelope law SRParams p.
SRParams scale(const SRParams& p, double k);

// If q is the scaled version of p (same m, matching b and omega ratios),
// returns the scale factor p/q; otherwise nullopt.
std::optional<double> linear_relation_check(const SRParams& p, const SRParams& q,
                                            double rel_tol = 1e-9);

// Round m half away from zero, clamped to at least 1.
IntegerSRParams round_fading_order(const SRParams& p);

inline SRParams to_params(const IntegerSRParams& p) {
    return {p.b, static_cast<double>(p.m), p.omega};
}

}  // namespace leosim
