// SPDX-License-Identifier: Apache-2.0
#include "leosim/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "leosim/metrics.hpp"
#include "leosim/sr_sampler.hpp"
#include "leosim/util.hpp"

namespace leosim {

Metric metric_from_string(std::string_view s) {
    if (s == "snr") return Metric::snr;
    if (s == "sir") return Metric::sir;
    if (s == "inr") return Metric::inr;
    if (s == "sinr") return Metric::sinr;
    throw std::invalid_argument("unknown metric: " + std::string(s));
}

const char* to_string(Metric m) {
    switch (m) {
        case Metric::snr: return "snr";
        case Metric::sir: return "sir";
        case Metric::inr: return "inr";
        case Metric::sinr: return "sinr";
    }
    return "?";
}

void validate(const Scenario& sc) {
    require(sc.n_users > 0, "scenario: user count must be positive");
    require(sc.grid_spacing_m > 0.0, "scenario: grid spacing must be positive");
    require(sc.threads >= 0, "scenario: thread count must be nonnegative");
    if (sc.shadowing) validate(*sc.shadowing);
    validate(sc.budget);
    // the layout parameters get their full check in build_layout
}

double EmpiricalCdf::evaluate(double v_db) const {
    require(!values_db.empty(), "evaluate: empty sample");
    auto it = std::upper_bound(values_db.begin(), values_db.end(), v_db);
    return static_cast<double>(it - values_db.begin()) / values_db.size();
}

double EmpiricalCdf::quantile(double p) const {
    require(!values_db.empty(), "quantile: empty sample");
    require(p >= 0.0 && p <= 1.0, "quantile: probability must be in [0, 1]");
    double h = p * (values_db.size() - 1);
    std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= values_db.size()) return values_db.back();
    double frac = h - lo;
    return values_db[lo] + frac * (values_db[lo + 1] - values_db[lo]);
}

GroundPoint sample_user_in_cell(Rng& rng, double cell_radius_m) {
    require(cell_radius_m > 0.0, "sample_user_in_cell: radius must be positive");
    double spacing = 2.0 * cell_radius_m * std::cos(pi / 6.0);
    for (;;) {
        double x = (2.0 * rng.uniform() - 1.0) * cell_radius_m;
        double y = (2.0 * rng.uniform() - 1.0) * cell_radius_m;
        if (in_cell({x, y}, {0.0, 0.0}, spacing)) return {x, y};
    }
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    require(threads >= 0, "parallel_for: thread count must be nonnegative");
    if (n == 0) return;
    std::size_t t = threads > 0 ? static_cast<std::size_t>(threads)
                                : std::max(1u, std::thread::hardware_concurrency());
    t = std::min(t, n);
    if (t <= 1) {
        body(0, n);
        return;
    }
    std::size_t chunk = (n + t - 1) / t;
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        std::size_t lo = i * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

namespace {

double metric_db(const Scenario& sc, const GainProfile& prof, Metric metric, Rng& rng) {
    if (metric == Metric::sir) {
        auto r = sir(prof);
        return linear_to_db(r ? *r : std::numeric_limits<double>::infinity());
    }
    double h2 = sc.shadowing ? sample_ssr(*sc.shadowing, rng) : 1.0;
    MetricSample s = realize_metrics(prof, sc.budget, h2);
    switch (metric) {
        case Metric::snr: return linear_to_db(s.snr);
        case Metric::inr: return linear_to_db(s.inr);
        case Metric::sinr: return linear_to_db(s.sinr);
        default: return 0.0;  // unreachable
    }
}

}  // namespace

EmpiricalCdf run_cdf_experiment(const Scenario& sc, Metric metric) {
    validate(sc);
    BeamLayout layout =
        build_layout(sc.altitude_m, sc.elevation_deg, sc.n_rings, sc.cell_radius_m);
    if (metric == Metric::sir || metric == Metric::inr)
        require(layout.n_beams() > 1,
                "run_cdf_experiment: interference metrics need more than one beam");

    std::size_t n = static_cast<std::size_t>(sc.n_users);
    std::vector<double> values(n);
    parallel_for(n, sc.threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            Rng rng(derive_seed(sc.seed, i));
            GroundPoint user = sample_user_in_cell(rng, sc.cell_radius_m);
            GainProfile prof = gain_profile(user, layout, sc.pattern, sc.budget, 0);
            values[i] = metric_db(sc, prof, metric, rng);
        }
    });
    std::sort(values.begin(), values.end());

    EmpiricalCdf cdf;
    cdf.metric = to_string(metric);
    cdf.tag = sc.shadowing_name;
    cdf.values_db = std::move(values);
    return cdf;
}

HeatmapGrid run_heatmap(const Scenario& sc, Metric metric) {
    validate(sc);
    BeamLayout layout =
        build_layout(sc.altitude_m, sc.elevation_deg, sc.n_rings, sc.cell_radius_m);
    if (metric == Metric::sir || metric == Metric::inr)
        require(layout.n_beams() > 1,
                "run_heatmap: interference metrics need more than one beam");

    double extent = 0.0;
    for (const GroundPoint& c : layout.cell_centers) {
        extent = std::max(extent, std::abs(c.x_m));
        extent = std::max(extent, std::abs(c.y_m));
    }
    extent += sc.cell_radius_m;
    int half = static_cast<int>(extent / sc.grid_spacing_m);

    HeatmapGrid grid;
    grid.spacing_m = sc.grid_spacing_m;
    grid.nx = 2 * half + 1;
    grid.ny = 2 * half + 1;
    grid.x0_m = -half * sc.grid_spacing_m;
    grid.y0_m = -half * sc.grid_spacing_m;
    grid.values_db.assign(static_cast<std::size_t>(grid.nx) * grid.ny, 0.0);

    parallel_for(grid.values_db.size(), sc.threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            int iy = static_cast<int>(k) / grid.nx;
            int ix = static_cast<int>(k) % grid.nx;
            GroundPoint p{grid.x_at(ix), grid.y_at(iy)};
            int serving = nearest_beam(p, layout);
            GainProfile prof = gain_profile(p, layout, sc.pattern, sc.budget, serving);
            Rng rng(derive_seed(sc.seed, k));
            grid.values_db[k] = metric_db(sc, prof, metric, rng);
        }
    });
    return grid;
}

std::vector<std::pair<double, double>> summarize(const EmpiricalCdf& cdf,
                                                 const std::vector<double>& probs) {
    std::vector<std::pair<double, double>> out;
    out.reserve(probs.size());
    for (double p : probs) out.emplace_back(p, cdf.quantile(p));
    return out;
}

}  // namespace leosim
