// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace leosim {

// Bessel function of the first kind, order 1.
double bessel_j1(double x);

// 2*J1(x)/x, continuous through x = 0 where it equals 1. This is the natural
// unit-peak form for a uniformly illuminated circular aperture.
double two_j1_over_x(double x);

}  // namespace leosim
