// SPDX-License-Identifier: Apache-2.0
//
// simulate: multi-beam LEO downlink study tool.
//   cdf       empirical metric distributions over users in the centre cell
//   heatmap   metric over a ground grid covering the beam footprint
//   distcheck integer-order closed forms vs the exact densities
//   outage    closed-form SNR outage vs Monte Carlo

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leosim/config.hpp"
#include "leosim/csv.hpp"
#include "leosim/metrics.hpp"
#include "leosim/monte_carlo.hpp"
#include "leosim/sr_distributions.hpp"
#include "leosim/sr_sampler.hpp"
#include "leosim/svg.hpp"
#include "leosim/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace leosim;

namespace {

struct Options {
    std::string config;
    std::string out;
    std::string metric;
    std::string shadowing;
    std::string preset = "all";
    double elevation = 90.0;
    double grid_spacing_m = 0.0;
    long long users = 0;
    std::uint64_t seed = 0;
    int threads = 0;
    bool svg = false;
    bool linear = false;
    std::vector<double> gamma_db;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--config", o.config, "JSON config file (defaults apply without it)");
    sub->add_option("--out", o.out, "output directory (overrides config)");
    sub->add_option("--seed", o.seed, "master RNG seed (overrides config)");
    sub->add_option("--threads", o.threads, "worker threads, 0 = all cores");
    sub->add_option("--users", o.users, "Monte Carlo sample count");
    sub->add_option("--elevation", o.elevation, "restrict to one elevation (degrees)");
    sub->add_flag("--svg", o.svg, "also write SVG plots");
}

SimulationConfig make_config(const CLI::App& sub, const Options& o) {
    SimulationConfig cfg =
        sub.count("--config") ? load_config(o.config) : SimulationConfig{};
    if (sub.count("--seed")) cfg.seed = o.seed;
    if (sub.count("--threads")) {
        require(o.threads >= 0, "threads must be nonnegative");
        cfg.threads = o.threads;
    }
    if (sub.count("--users")) {
        require(o.users > 0, "users must be positive");
        cfg.users = o.users;
    }
    if (sub.count("--out")) cfg.output_dir = o.out;
    if (sub.count("--elevation")) cfg.elevations_deg = {o.elevation};
    // only the heatmap subcommand has this option
    const CLI::Option* gs = sub.get_option_no_throw("--grid-spacing");
    if (gs && gs->count()) {
        require(o.grid_spacing_m > 0.0, "grid spacing must be positive");
        cfg.grid_spacing_m = o.grid_spacing_m;
    }
    return cfg;
}

std::string fmt_elev(double deg) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", deg);
    return buf;
}

fs::path prepare_out_dir(const SimulationConfig& cfg) {
    fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    return dir;
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const SimulationConfig& cfg, const std::vector<std::string>& outputs) {
    json m;
    m["command"] = command;
    m["version"] = kVersion;
    m["seed"] = cfg.seed;
    m["config"] = config_to_json(cfg);
    m["outputs"] = outputs;
    std::ofstream out(dir / ("manifest_" + command + ".json"), std::ios::binary);
    require(out.good(), "cannot write manifest");
    out << m.dump(2) << '\n';
}

double out_value(double db, bool linear) { return linear ? db_to_linear(db) : db; }

int run_cdf(const CLI::App& sub, Options& o) {
    SimulationConfig cfg = make_config(sub, o);
    Metric metric = metric_from_string(o.metric);
    std::vector<std::string> shadowings =
        sub.count("--shadowing") ? std::vector<std::string>{o.shadowing}
                                 : std::vector<std::string>{"none", "light", "average", "heavy"};
    for (const std::string& s : shadowings) resolve_shadowing(cfg, s);  // fail early

    fs::path dir = prepare_out_dir(cfg);
    std::vector<std::string> outputs;
    const char* value_col = o.linear ? "value_linear" : "value_db";
    for (double elev : cfg.elevations_deg) {
        std::vector<EmpiricalCdf> cdfs;
        for (const std::string& s : shadowings) {
            Scenario sc = scenario_of(cfg, elev, s);
            EmpiricalCdf cdf = run_cdf_experiment(sc, metric);
            std::string name =
                "cdf_" + std::string(to_string(metric)) + "_" + fmt_elev(elev) + "_" + s + ".csv";
            CsvWriter w(dir / name, {value_col, "cum_prob"});
            std::size_t n = cdf.values_db.size();
            for (std::size_t i = 0; i < n; ++i)
                w.row({out_value(cdf.values_db[i], o.linear),
                       static_cast<double>(i + 1) / static_cast<double>(n)});
            outputs.push_back(name);
            std::printf("wrote %s  median=%.2f dB  p99=%.2f dB\n",
                        (dir / name).string().c_str(), cdf.quantile(0.5),
                        cdf.quantile(0.99));
            cdfs.push_back(std::move(cdf));
        }
        if (o.svg) {
            std::vector<CdfSeries> series;
            for (const EmpiricalCdf& c : cdfs) series.push_back({c.tag, &c.values_db});
            std::string name = "cdf_" + std::string(to_string(metric)) + "_" +
                               fmt_elev(elev) + ".svg";
            write_cdf_svg(dir / name,
                          std::string(to_string(metric)) + " CDF, elevation " +
                              fmt_elev(elev) + " deg",
                          std::string(to_string(metric)) + " (dB)", series);
            outputs.push_back(name);
        }
    }
    write_manifest(dir, "cdf", cfg, outputs);
    return 0;
}

int run_heatmap(const CLI::App& sub, Options& o) {
    SimulationConfig cfg = make_config(sub, o);
    Metric metric = metric_from_string(o.metric);
    std::string sh = sub.count("--shadowing") ? o.shadowing : cfg.shadowing;
    resolve_shadowing(cfg, sh);

    fs::path dir = prepare_out_dir(cfg);
    std::vector<std::string> outputs;
    const char* value_col = o.linear ? "value_linear" : "value_db";
    for (double elev : cfg.elevations_deg) {
        Scenario sc = scenario_of(cfg, elev, sh);
        HeatmapGrid grid = run_heatmap(sc, metric);
        std::string name = "heatmap_" + std::string(to_string(metric)) + "_" +
                           fmt_elev(elev) + "_" + sh + ".csv";
        CsvWriter w(dir / name, {"x_m", "y_m", value_col});
        for (int iy = 0; iy < grid.ny; ++iy)
            for (int ix = 0; ix < grid.nx; ++ix)
                w.row({grid.x_at(ix), grid.y_at(iy),
                       out_value(grid.values_db[static_cast<std::size_t>(iy) * grid.nx + ix],
                                 o.linear)});
        outputs.push_back(name);

        BeamLayout layout = build_layout(cfg.altitude_m, elev, cfg.n_rings, cfg.cell_radius_m);
        std::string centers_name = "cell_centers_" + fmt_elev(elev) + ".csv";
        CsvWriter cw(dir / centers_name, {"beam", "x_m", "y_m"});
        for (int i = 0; i < layout.n_beams(); ++i)
            cw.row({static_cast<double>(i), layout.cell_centers[i].x_m,
                    layout.cell_centers[i].y_m});
        outputs.push_back(centers_name);
        std::printf("wrote %s (%dx%d)\n", (dir / name).string().c_str(), grid.nx, grid.ny);

        if (o.svg) {
            std::string svg_name = "heatmap_" + std::string(to_string(metric)) + "_" +
                                   fmt_elev(elev) + "_" + sh + ".svg";
            write_heatmap_svg(dir / svg_name,
                              std::string(to_string(metric)) + " (dB), elevation " +
                                  fmt_elev(elev) + " deg, shadowing " + sh,
                              grid, layout.cell_centers);
            outputs.push_back(svg_name);
        }
    }
    write_manifest(dir, "heatmap", cfg, outputs);
    return 0;
}

int run_distcheck(const CLI::App& sub, Options& o) {
    SimulationConfig cfg = make_config(sub, o);
    std::vector<std::string> names =
        o.preset == "all" ? std::vector<std::string>{"light", "average", "heavy"}
                          : std::vector<std::string>{o.preset};
    for (const std::string& n : names) shadowing_preset(n);  // fail early

    fs::path dir = prepare_out_dir(cfg);
    std::vector<std::string> outputs;
    for (const std::string& name : names) {
        SRParams p = shadowing_preset(name);
        IntegerSRParams q = round_fading_order(p);
        double dist = rounding_cdf_distance(p);
        std::printf("distcheck %-8s m=%g -> %d   sup|F_exact - F_rounded| = %.3e\n",
                    name.c_str(), p.m, q.m, dist);

        double hi = 2.0 * p.b + p.omega;
        while (ssr_cdf_int(hi, q) < 1.0 - 1e-6) hi *= 2.0;
        std::string fname = "distcheck_" + name + ".csv";
        CsvWriter w(dir / fname, {"y", "pdf_exact", "pdf_integer"});
        const int rows = 513;
        for (int i = 0; i < rows; ++i) {
            double y = hi * i / (rows - 1);
            w.row({y, ssr_pdf(y, p), ssr_pdf_int(y, q)});
        }
        outputs.push_back(fname);
    }
    write_manifest(dir, "distcheck", cfg, outputs);
    return 0;
}

int run_outage(const CLI::App& sub, Options& o) {
    SimulationConfig cfg = make_config(sub, o);
    std::string sh = sub.count("--shadowing") ? o.shadowing : cfg.shadowing;
    if (sh == "none") sh = "average";
    std::optional<SRParams> channel = resolve_shadowing(cfg, sh);
    require(channel.has_value(), "outage needs a shadowing law");
    IntegerSRParams ichannel = round_fading_order(*channel);

    double elev = cfg.elevations_deg.front();
    BeamLayout layout = build_layout(cfg.altitude_m, elev, cfg.n_rings, cfg.cell_radius_m);
    GainProfile prof =
        gain_profile({0.0, 0.0}, layout, antenna_of(cfg), budget_of(cfg), 0);
    std::vector<double> gammas = o.gamma_db.empty()
                                     ? std::vector<double>{0.0, 5.0, 10.0}
                                     : o.gamma_db;

    // Monte Carlo from the rounded law, one stream per sample index
    std::size_t n = static_cast<std::size_t>(cfg.users);
    SRParams mc_law = to_params(ichannel);
    LinkBudget lb = budget_of(cfg);
    double k_snr = tx_power_w(lb) * prof.desired_gain / noise_power_w(lb);
    std::vector<std::atomic<long long>> hits(gammas.size());
    std::vector<double> gamma_lin(gammas.size());
    for (std::size_t g = 0; g < gammas.size(); ++g) gamma_lin[g] = db_to_linear(gammas[g]);
    parallel_for(n, cfg.threads, [&](std::size_t lo, std::size_t hi2) {
        std::vector<long long> local(gamma_lin.size(), 0);
        for (std::size_t i = lo; i < hi2; ++i) {
            Rng rng(derive_seed(cfg.seed, i));
            double snr = k_snr * sample_ssr(mc_law, rng);
            for (std::size_t g = 0; g < gamma_lin.size(); ++g)
                if (snr <= gamma_lin[g]) ++local[g];
        }
        for (std::size_t g = 0; g < gamma_lin.size(); ++g)
            hits[g].fetch_add(local[g], std::memory_order_relaxed);
    });

    fs::path dir = prepare_out_dir(cfg);
    std::string fname = "outage_" + sh + "_" + fmt_elev(elev) + ".csv";
    CsvWriter w(dir / fname, {"gamma_db", "outage_closed", "outage_mc"});
    std::printf("outage, shadowing %s (m=%g -> %d), elevation %s, %zu samples\n",
                sh.c_str(), channel->m, ichannel.m, fmt_elev(elev).c_str(), n);
    for (std::size_t g = 0; g < gammas.size(); ++g) {
        double closed = snr_outage(prof, ichannel, lb, gamma_lin[g]);
        double mc = static_cast<double>(hits[g].load()) / static_cast<double>(n);
        std::printf("  gamma = %6.2f dB   closed = %.6f   mc = %.6f   |diff| = %.2e\n",
                    gammas[g], closed, mc, std::abs(closed - mc));
        w.row({gammas[g], closed, mc});
    }
    write_manifest(dir, "outage", cfg, {fname});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-beam LEO downlink simulator"};
    app.require_subcommand(1);
    Options o;

    CLI::App* cdf = app.add_subcommand("cdf", "empirical metric CDFs over the centre cell");
    add_common(cdf, o);
    cdf->add_option("--metric", o.metric, "snr | sir | inr | sinr (default inr)");
    cdf->add_option("--shadowing", o.shadowing,
                    "none | light | average | heavy | custom (default: all four)");
    cdf->add_flag("--linear", o.linear, "write linear values instead of dB");

    CLI::App* hm = app.add_subcommand("heatmap", "metric over the footprint grid");
    add_common(hm, o);
    hm->add_option("--metric", o.metric, "snr | sir | inr | sinr");
    hm->add_option("--shadowing", o.shadowing, "none | light | average | heavy | custom");
    hm->add_option("--grid-spacing", o.grid_spacing_m, "grid pitch in metres");
    hm->add_flag("--linear", o.linear, "write linear values instead of dB");

    CLI::App* dc = app.add_subcommand("distcheck",
                                      "closed integer forms vs exact densities");
    add_common(dc, o);
    dc->add_option("--preset", o.preset, "light | average | heavy | all");

    CLI::App* og = app.add_subcommand("outage", "closed-form SNR outage vs Monte Carlo");
    add_common(og, o);
    og->add_option("--shadowing", o.shadowing, "light | average | heavy | custom");
    og->add_option("--gamma-db", o.gamma_db, "SNR threshold(s) in dB");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cdf->parsed()) {
            if (!cdf->count("--metric")) o.metric = "inr";
            return run_cdf(*cdf, o);
        }
        if (hm->parsed()) {
            if (!hm->count("--metric")) o.metric = "sinr";
            return run_heatmap(*hm, o);
        }
        if (dc->parsed()) return run_distcheck(*dc, o);
        if (og->parsed()) return run_outage(*og, o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
