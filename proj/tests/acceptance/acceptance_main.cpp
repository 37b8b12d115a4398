// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one self-contained check per release criterion, one line of
// output each. Exit status is nonzero if any criterion fails. argv[1] must be
// the path of the `simulate` binary (used by the reproducibility criterion).

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "leosim/config.hpp"
#include "leosim/geometry.hpp"
#include "leosim/link_budget.hpp"
#include "leosim/metrics.hpp"
#include "leosim/monte_carlo.hpp"
#include "leosim/random.hpp"
#include "leosim/sr_distributions.hpp"
#include "leosim/sr_params.hpp"
#include "leosim/sr_sampler.hpp"
#include "leosim/util.hpp"
#include "support/oracles.hpp"
#include "support/stats.hpp"

using namespace leosim;
namespace fs = std::filesystem;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

std::string g_simulate;  // path of the CLI binary, from argv[1]

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* spec, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, spec);
    std::vsnprintf(buf, sizeof buf, spec, ap);
    va_end(ap);
    return buf;
}

const std::vector<std::pair<const char*, SRParams>> kPresets = {
    {"light", shadowing_preset("light")},
    {"average", shadowing_preset("average")},
    {"heavy", shadowing_preset("heavy")},
};

// --- 1: density normalization, closed forms vs series, CDF derivative -------

Result c1_distribution_correctness() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<SRParams> triples;
    for (const auto& pr : kPresets) triples.push_back(pr.second);
    Rng rng(20260819);
    for (int i = 0; i < 20; ++i)
        triples.push_back({0.02 + 0.5 * rng.uniform(), 0.6 + 24.0 * rng.uniform(),
                           0.01 + 2.5 * rng.uniform()});

    double worst_norm = 0.0, worst_eq = 0.0, worst_deriv = 0.0;
    for (const SRParams& p : triples) {
        QuadResult norm =
            integrate_half_line([&p](double y) { return ssr_pdf(y, p); }, 0.0, 1e-9);
        worst_norm = std::max(worst_norm, std::abs(norm.value - 1.0));

        IntegerSRParams q = round_fading_order(p);
        SRParams qd = to_params(q);
        double mean = ssr_mean_int(q);
        for (double s : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            double y = s * mean;
            double a = ssr_pdf_int(y, q), b = ssr_pdf(y, qd);
            worst_eq = std::max(worst_eq, std::abs(a - b) / std::max(b, 1e-300));
        }
        for (double s : {0.5, 1.0, 2.0}) {
            double y = s * mean, h = 1e-4 * mean;
            double d = (ssr_cdf_int(y + h, q) - ssr_cdf_int(y - h, q)) / (2.0 * h);
            double f = ssr_pdf_int(y, q);
            worst_deriv = std::max(worst_deriv, std::abs(d - f) / f);
        }
    }
    // derivative of the quadrature CDF on the true (non-integer) preset laws
    for (const auto& pr : kPresets) {
        const SRParams& p = pr.second;
        double mean = 2.0 * p.b + p.omega;
        for (double s : {0.7, 1.3}) {
            double y = s * mean, h = 3e-4 * mean;
            double d = (ssr_cdf(y + h, p) - ssr_cdf(y - h, p)) / (2.0 * h);
            double f = ssr_pdf(y, p);
            worst_deriv = std::max(worst_deriv, std::abs(d - f) / f);
        }
    }
    double dt = seconds_since(t0);
    bool pass = worst_norm <= 1e-6 && worst_eq <= 1e-10 && worst_deriv <= 1e-5 &&
                dt < 10.0;
    return {pass, fmt("|norm-1|<=%.2e eq<=%.2e deriv<=%.2e over 23 laws, %.1fs",
                      worst_norm, worst_eq, worst_deriv, dt)};
}

// --- 2: scaling a squared draw matches the linearly scaled law --------------

Result c2_scaling_law() {
    auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = 1000000;
    double worst = 0.0;
    double thr = stats::ks_two_sample_threshold(0.01, n, n);
    int idx = 0;
    for (const auto& pr : kPresets) {
        const SRParams& p = pr.second;
        for (double k : {0.5, 3.0, 10.0}) {
            Rng r1(derive_seed(901, idx)), r2(derive_seed(902, idx));
            ++idx;
            std::vector<double> a(n), b(n);
            SRParams scaled = scale(p, k);
            for (std::size_t i = 0; i < n; ++i) {
                double x = sample_sr(p, r1);
                a[i] = k * x * x;
                b[i] = sample_ssr(scaled, r2);
            }
            worst = std::max(worst, stats::ks_two_sample(std::move(a), std::move(b)));
        }
    }
    double dt = seconds_since(t0);
    bool pass = worst < thr && dt < 30.0;
    return {pass, fmt("max KS %.5f < %.5f over presets x k in {0.5,3,10}, %.1fs",
                      worst, thr, dt)};
}

// --- 3: mean of the squared envelope is 2b + omega --------------------------

Result c3_mean_identity() {
    const std::size_t n = 1000000;
    double worst = 0.0;
    int idx = 0;
    for (const auto& pr : kPresets) {
        IntegerSRParams q = round_fading_order(pr.second);
        SRParams law = to_params(q);
        Rng rng(derive_seed(903, idx++));
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += sample_ssr(law, rng);
        double rel = std::abs(acc / n - ssr_mean_int(q)) / ssr_mean_int(q);
        worst = std::max(worst, rel);
    }
    return {worst < 0.01, fmt("max |mc_mean/(2b+omega) - 1| = %.4f < 0.01", worst)};
}

// --- 4: rounding the order barely moves the distribution --------------------

Result c4_rounding_distance() {
    double d_light = rounding_cdf_distance(kPresets[0].second);
    double d_avg = rounding_cdf_distance(kPresets[1].second);
    double d_heavy = rounding_cdf_distance(kPresets[2].second);
    bool pass = d_light < 0.03 && d_avg < 0.03 && d_heavy < 0.03;
    return {pass, fmt("sup|F-F_rounded| = %.4f / %.4f / %.4f (light/average/heavy) < 0.03",
                      d_light, d_avg, d_heavy)};
}

// --- 5: the fading-free ratio ignores the shadowing choice, bitwise ---------

Result c5_sir_invariance() {
    Scenario sc;
    sc.n_users = 20000;
    sc.seed = 31;
    sc.threads = 0;
    sc.shadowing_name = "none";
    EmpiricalCdf ref = run_cdf_experiment(sc, Metric::sir);
    for (const auto& [name, p] : kPresets) {
        sc.shadowing = p;
        sc.shadowing_name = name;
        EmpiricalCdf cur = run_cdf_experiment(sc, Metric::sir);
        if (cur.values_db.size() != ref.values_db.size() ||
            std::memcmp(cur.values_db.data(), ref.values_db.data(),
                        ref.values_db.size() * sizeof(double)) != 0)
            return {false, fmt("per-user values differ between none and %s", name)};
    }
    return {true, "20000 users bitwise identical across none/light/average/heavy"};
}

// --- 6: interference regimes by shadowing level and elevation ---------------

Result c6_interference_regimes() {
    auto t0 = std::chrono::steady_clock::now();
    auto inr_cdf = [](const char* shadowing, double elev) {
        Scenario sc;
        sc.n_users = 100000;
        sc.seed = 101;
        sc.threads = 0;
        sc.elevation_deg = elev;
        sc.shadowing_name = shadowing;
        if (std::strcmp(shadowing, "none") != 0) sc.shadowing = shadowing_preset(shadowing);
        return run_cdf_experiment(sc, Metric::inr);
    };
    EmpiricalCdf none90 = inr_cdf("none", 90.0);
    EmpiricalCdf heavy90 = inr_cdf("heavy", 90.0);
    EmpiricalCdf light90 = inr_cdf("light", 90.0);
    EmpiricalCdf avg90 = inr_cdf("average", 90.0);
    EmpiricalCdf none60 = inr_cdf("none", 60.0);
    EmpiricalCdf none45 = inr_cdf("none", 45.0);

    double frac_above = 1.0 - none90.evaluate(0.0);
    double frac_below = heavy90.evaluate(0.0);
    double p99_light = light90.quantile(0.99);
    double p99_avg = avg90.quantile(0.99);
    double med90 = none90.quantile(0.5), med60 = none60.quantile(0.5),
           med45 = none45.quantile(0.5);
    double dt = seconds_since(t0);

    bool a = frac_above >= 0.9;
    bool b = frac_below >= 0.9;
    bool c = p99_light <= 10.0 && p99_avg <= 10.0;
    bool d = med60 >= med90 && med45 >= med60;
    bool pass = a && b && c && d && dt < 120.0;
    return {pass,
            fmt("a:%.2f>=0.9 %s, b:%.2f>=0.9 %s, c:p99 %.1f/%.1f<=10 %s, "
                "d:med %.1f/%.1f/%.1f dB %s, %.0fs",
                frac_above, a ? "ok" : "FAIL", frac_below, b ? "ok" : "FAIL",
                p99_light, p99_avg, c ? "ok" : "FAIL", med90, med60, med45,
                d ? "ok" : "FAIL", dt)};
}

// --- 7: snr-to-sinr gap collapses under heavy shadowing ---------------------

Result c7_gap_collapse() {
    auto run = [](const char* shadowing, Metric m) {
        Scenario sc;
        sc.n_users = 100000;
        sc.seed = 202;
        sc.threads = 0;
        sc.shadowing_name = shadowing;
        if (std::strcmp(shadowing, "none") != 0) sc.shadowing = shadowing_preset(shadowing);
        return run_cdf_experiment(sc, m).values_db;
    };
    double d_heavy = stats::ks_two_sample(run("heavy", Metric::snr),
                                          run("heavy", Metric::sinr));
    double d_none = stats::ks_two_sample(run("none", Metric::snr),
                                         run("none", Metric::sinr));
    bool pass = d_heavy < 0.05 && d_none > 0.2;
    return {pass, fmt("heavy sup-dist %.3f (<0.05 %s), none %.3f (>0.2 %s)",
                      d_heavy, d_heavy < 0.05 ? "ok" : "FAIL", d_none,
                      d_none > 0.2 ? "ok" : "FAIL")};
}

// --- 8: closed-form outage tracks Monte Carlo -------------------------------

Result c8_outage() {
    const std::size_t n = 1000000;
    BeamLayout layout = build_layout(500e3, 90.0, 2, 12.6e3);
    LinkBudget lb;
    GainProfile prof = gain_profile({0.0, 0.0}, layout, {}, lb, 0);
    double k = tx_power_w(lb) * prof.desired_gain / noise_power_w(lb);

    double worst = 0.0;
    int idx = 0;
    for (const auto& pr : kPresets) {
        IntegerSRParams q = round_fading_order(pr.second);
        SRParams law = to_params(q);
        for (double target : {0.1, 0.5, 0.9}) {
            // threshold at the closed-form target quantile of the SNR law
            double hi = k * ssr_mean_int(q);
            while (snr_outage(prof, q, lb, hi) < target) hi *= 2.0;
            double gamma = oracles::bisect(
                [&](double g) { return snr_outage(prof, q, lb, g) - target; }, 0.0, hi,
                1e-9 * hi);
            double closed = snr_outage(prof, q, lb, gamma);

            Rng rng(derive_seed(904, idx++));
            std::size_t hits = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (k * sample_ssr(law, rng) <= gamma) ++hits;
            double mc = static_cast<double>(hits) / n;
            double se = std::sqrt(closed * (1.0 - closed) / n);
            worst = std::max(worst, std::abs(closed - mc) / se);
        }
    }
    return {worst < 3.0,
            fmt("max |closed - mc| = %.2f binomial SE (<3) over presets x 3 thresholds",
                worst)};
}

// --- 9: half-power beamwidth projects to the design cell size ---------------

Result c9_beamwidth() {
    AntennaPattern ant;
    double zeta = oracles::bisect(
        [&](double z) { return pattern_gain(z, ant) - 0.5; }, 1e-6, 0.2, 1e-14);
    double ground = std::tan(zeta) * 500e3;
    double rel = std::abs(ground - 12.6e3) / 12.6e3;
    return {rel < 0.05, fmt("half-power ground radius %.1f m vs 12600 m (%.1f%% off)",
                            ground, 100.0 * rel)};
}

// --- 10: rerun and thread-count reproducibility of the CLI outputs ----------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in.good()) return "<missing:" + p.string() + ">";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = "\"" + g_simulate + "\" " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

fs::path fresh_dir(const char* name) {
    fs::path dir = fs::temp_directory_path() / (std::string("leosim_acc_") + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

Result c10_reproducibility() {
    if (g_simulate.empty()) return {false, "simulate binary path not provided"};

    fs::path a = fresh_dir("a"), b = fresh_dir("b");
    std::string cdf_args = "cdf --metric sinr --shadowing average --elevation 90 "
                           "--users 5000 --seed 17 ";
    if (run_cli(cdf_args + "--threads 1 --out " + a.string()) != 0 ||
        run_cli(cdf_args + "--threads 4 --out " + b.string()) != 0)
        return {false, "cdf run failed"};
    if (slurp(a / "cdf_sinr_90_average.csv") != slurp(b / "cdf_sinr_90_average.csv"))
        return {false, "cdf csv differs between 1 and 4 threads"};

    fs::path c = fresh_dir("c"), d = fresh_dir("d");
    std::string hm_args = "heatmap --grid-spacing 3000 --shadowing light "
                          "--elevation 60 --seed 17 ";
    if (run_cli(hm_args + "--threads 1 --out " + c.string()) != 0 ||
        run_cli(hm_args + "--threads 3 --out " + d.string()) != 0)
        return {false, "heatmap run failed"};
    if (slurp(c / "heatmap_sinr_60_light.csv") != slurp(d / "heatmap_sinr_60_light.csv"))
        return {false, "heatmap csv differs between 1 and 3 threads"};
    if (slurp(c / "cell_centers_60.csv") != slurp(d / "cell_centers_60.csv"))
        return {false, "cell centre csv differs"};

    // and a literal rerun of the same invocation
    fs::path e = fresh_dir("e");
    if (run_cli(cdf_args + "--threads 4 --out " + e.string()) != 0)
        return {false, "cdf rerun failed"};
    if (slurp(b / "cdf_sinr_90_average.csv") != slurp(e / "cdf_sinr_90_average.csv"))
        return {false, "cdf csv differs on rerun"};

    return {true, "cdf and heatmap CSVs byte-identical across reruns and thread counts"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_simulate = argv[1];

    struct Entry {
        const char* name;
        std::function<Result()> fn;
    };
    const std::vector<Entry> criteria = {
        {"distribution correctness", c1_distribution_correctness},
        {"squared-draw scaling law", c2_scaling_law},
        {"mean identity 2b+omega", c3_mean_identity},
        {"order-rounding distortion", c4_rounding_distance},
        {"fading-free ratio invariance", c5_sir_invariance},
        {"interference regimes", c6_interference_regimes},
        {"snr/sinr gap collapse", c7_gap_collapse},
        {"outage closed form vs mc", c8_outage},
        {"beamwidth vs cell size", c9_beamwidth},
        {"bitwise reproducibility", c10_reproducibility},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        try {
            r = criteria[i].fn();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %02zu [%s] %s: %s\n", i + 1, r.pass ? "PASS" : "FAIL",
                    criteria[i].name, r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
