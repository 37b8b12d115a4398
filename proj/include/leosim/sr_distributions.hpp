// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "leosim/sr_params.hpp"

namespace leosim {

// Density of the shadowed-Rician envelope |h|, x >= 0.
double sr_pdf(double x, const SRParams& p);

// Density of the squared envelope |h|^2, y >= 0.
double ssr_pdf(double y, const SRParams& p);

// CDF of the squared envelope by adaptive quadrature of ssr_pdf (works for any
// admissible parameters, integer order or not).
double ssr_cdf(double y, const SRParams& p, double rel_tol = 1e-10);

// Closed-form density/CDF/mean of the squared envelope for integer order.
double ssr_pdf_int(double y, const IntegerSRParams& p);
double ssr_cdf_int(double y, const IntegerSRParams& p);
double ssr_mean_int(const IntegerSRParams& p);

// sup_y | F(y; p) - F(y; round(p)) | over a grid covering all but ~1e-9 of the
// mass; quantifies what rounding the order to an integer does to the law.
double rounding_cdf_distance(const SRParams& p, int grid_points = 801);

}  // namespace leosim
