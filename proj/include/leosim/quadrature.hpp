// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace leosim {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;      // estimated absolute error
    int evaluations = 0;
    bool converged = false;
};

namespace quad_detail {

// Gauss-Kronrod 7-15 nodes/weights (positive half; node 7 is the midpoint).
inline constexpr double kx[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kw[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double gw[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <typename F>
void gk15(F& f, double a, double b, double& value, double& err, int& evals) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double fc = f(c);
    double resk = kw[7] * fc;
    double resg = gw[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double dx = h * kx[j];
        double f1 = f(c - dx);
        double f2 = f(c + dx);
        resk += kw[j] * (f1 + f2);
        if (j % 2 == 1) resg += gw[(j - 1) / 2] * (f1 + f2);
    }
    evals += 15;
    value = resk * h;
    err = std::abs((resk - resg) * h);
}

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace quad_detail

// Adaptive Gauss-Kronrod on [a, b]: bisect the worst segment until the summed
// error estimate clears max(abs_tol, rel_tol * |integral|) or the segment
// budget runs out (converged=false in that case, value still returned).
template <typename F>
QuadResult integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                     double abs_tol = 0.0, int max_segments = 4096) {
    QuadResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    std::priority_queue<quad_detail::Segment> heap;
    double v, e;
    quad_detail::gk15(f, a, b, v, e, res.evaluations);
    heap.push({a, b, v, e});
    double total_v = v, total_e = e;
    int segments = 1;
    auto tol = [&] { return std::max(abs_tol, rel_tol * std::abs(total_v)); };
    while (total_e > tol() && segments < max_segments) {
        quad_detail::Segment s = heap.top();
        heap.pop();
        total_v -= s.value;
        total_e -= s.error;
        double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) {  // interval exhausted at double precision
            total_v += s.value;
            total_e += s.error;
            break;
        }
        double v1, e1, v2, e2;
        quad_detail::gk15(f, s.a, mid, v1, e1, res.evaluations);
        quad_detail::gk15(f, mid, s.b, v2, e2, res.evaluations);
        heap.push({s.a, mid, v1, e1});
        heap.push({mid, s.b, v2, e2});
        total_v += v1 + v2;
        total_e += e1 + e2;
        ++segments;
    }
    res.value = total_v;
    res.error = total_e;
    res.converged = total_e <= tol();
    return res;
}

// Integral over [a, inf), mapped onto t in [0, 1) via x = a + t/(1-t).
template <typename F>
QuadResult integrate_half_line(F&& f, double a, double rel_tol = 1e-10,
                               double abs_tol = 0.0, int max_segments = 4096) {
    auto g = [&f, a](double t) {
        double one_m = 1.0 - t;
        double x = a + t / one_m;
        double jac = 1.0 / (one_m * one_m);
        double fx = f(x);
        return fx == 0.0 ? 0.0 : fx * jac;  // avoid 0 * inf at the far end
    };
    return integrate(g, 0.0, 1.0, rel_tol, abs_tol, max_segments);
}

}  // namespace leosim
