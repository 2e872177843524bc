#include "shocklab/presets.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <random>

#include "shocklab/artifacts.hpp"

namespace shocklab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

State random_ball_state(std::mt19937_64& rng, double delta, Variant v) {
    std::uniform_real_distribution<double> u(-2.0 * delta * 0.999, 2.0 * delta * 0.999);
    State s;
    s.u1 = u(rng);
    s.u2 = u(rng);
    s.rho_m1 = u(rng);
    s.H2 = v == Variant::euler ? 0.0 : u(rng);
    s.S = u(rng);
    return s;
}

GasParams variant_gas(const GasParams& base, Variant v) {
    GasParams p = base;
    if (v == Variant::mhd_h1_zero || v == Variant::euler) p.H1 = 0.0;
    if (v == Variant::mhd_h1_nonzero && p.H1 == 0.0) p.H1 = 0.05;
    return p;
}

}  // namespace

EigSweepResult eig_residual_sweep(const GasParams& base, std::uint64_t seed, int n_states) {
    const auto t0 = Clock::now();
    EigSweepResult out;
    std::mt19937_64 rng(seed);
    for (Variant v : {Variant::mhd_h1_nonzero, Variant::mhd_h1_zero, Variant::euler}) {
        const GasParams p = variant_gas(base, v);
        for (int i = 0; i < n_states; ++i) {
            const State s = random_ball_state(rng, p.delta_ball, v);
            const Eigensystem e = make_eigensystem(p, s, v);
            const Mat A = assemble_matrix(p, s, v);
            out.max_residual = std::max(out.max_residual, eigen_residual(A, e.lambdas, e.R));
            out.max_duality = std::max(out.max_duality, duality_error(e.L, e.R));
            ++out.states;
        }
    }
    out.seconds = seconds_since(t0);
    out.pass = out.max_residual <= 1e-10 && out.max_duality <= 1e-10 && out.seconds < 5.0;
    return out;
}

GnConstants genuine_nonlinearity_constants(const GasParams& base) {
    const auto t0 = Clock::now();
    GnConstants out;
    const double A = base.A, gamma = base.gamma;

    GasParams p_lim = variant_gas(base, Variant::mhd_h1_nonzero);
    p_lim.H1 = 1e-6;
    out.mhd_limit = coeff_table(p_lim, State{}, Variant::mhd_h1_nonzero).c[0][0];

    const GasParams p_h10 = variant_gas(base, Variant::mhd_h1_zero);
    out.mhd_h10 = coeff_table(p_h10, State{}, Variant::mhd_h1_zero).c[0][0];

    const GasParams p_e = variant_gas(base, Variant::euler);
    out.euler_fd = coeff_table(p_e, State{}, Variant::euler).c[0][0];
    out.euler_display_discrepancy = std::fabs(out.euler_fd - gamma) > 1e-3;

    const double want_lim = (gamma + 1.0) / 2.0;
    const double want_h10 = (gamma + 1.0) * std::sqrt(A * gamma) / 2.0;
    out.seconds = seconds_since(t0);
    out.pass = std::fabs(out.mhd_limit - want_lim) <= 1e-4 &&
               std::fabs(out.mhd_h10 - want_h10) <= 1e-4 && out.euler_display_discrepancy &&
               out.seconds < 1.0;
    return out;
}

ScanStability boundedness_stability(const GasParams& base, Variant v) {
    const auto t0 = Clock::now();
    ScanStability out;
    const GasParams p = variant_gas(base, v);
    out.g5 = boundedness_scan(p, v, 5);
    out.g9 = boundedness_scan(p, v, 9);
    out.stable = std::fabs(out.g5.Gamma / out.g9.Gamma - 1.0) <= 0.05;
    out.seconds = seconds_since(t0);
    out.pass = out.g5.pass && out.g9.pass && out.stable;
    return out;
}

ZeroBlock structural_zeros(const GasParams& base, Variant v, std::uint64_t seed, int n_states) {
    ZeroBlock out;
    const GasParams p = variant_gas(base, v);
    const int lo = 1;  // middle block, 0-based
    const int hi = v == Variant::euler ? 2 : 3;

    std::mt19937_64 rng(seed);
    std::vector<State> states{State{}};
    for (int i = 0; i < n_states; ++i) states.push_back(random_ball_state(rng, p.delta_ball, v));
    const int n = variant_dim(v);
    for (const State& s : states) {
        const CoeffTable t = coeff_table(p, s, v);
        for (int i = lo; i <= hi; ++i)
            for (int m = lo; m <= hi; ++m) {
                out.max_abs = std::max(out.max_abs, std::fabs(t.c[i][m]));
                if (m != i) out.max_abs = std::max(out.max_abs, std::fabs(t.gam_im[i][m]));
            }
        for (int i = 0; i < n; ++i)
            for (int k = lo; k <= hi; ++k)
                for (int m = lo; m <= hi; ++m)
                    if (k != m && k != i && m != i)
                        out.max_abs = std::max(out.max_abs, std::fabs(t.gam_km[i][k][m]));
    }
    out.pass = out.max_abs <= 1e-9;
    return out;
}

DataChecks data_reconstruction_checks(const GasParams& p, const DataParams& dp0, Variant v,
                                      const std::vector<double>& etas) {
    const auto t0 = Clock::now();
    DataChecks out;
    const GasParams pg = variant_gas(p, v);
    const int n = variant_dim(v);

    // round-trip at the template eta: reconstruct on a fine uniform grid, take
    // the 4th-order label derivative, project with the local left eigenvectors
    {
        DataParams dp = dp0;
        const int M = 16385;
        const double x_lo = 0.5 * dp.eta, x_hi = 2.75 * dp.eta;
        const double h = (x_hi - x_lo) / (M - 1);
        std::vector<double> xs(M);
        for (int i = 0; i < M; ++i) xs[static_cast<size_t>(i)] = x_lo + i * h;
        const Phi0Slice sl = reconstruct_phi0(pg, dp, v, 0.0, xs, 1.0 / 2048.0);

        double sup_w1 = 0.0, sup_wk = 0.0, err1 = 0.0, errk = 0.0;
        for (int pt = 0; pt < 100; ++pt) {
            const double z = dp.eta * (1.0 + (pt + 0.5) / 100.0);
            const int i = static_cast<int>(std::lround((z - x_lo) / h));
            const double x = xs[static_cast<size_t>(i)];
            Vec dphi(n);
            for (int c = 0; c < n; ++c) {
                const auto at = [&](int k) { return sl.phi[static_cast<size_t>(i + k)][c]; };
                dphi[c] = (-at(2) + 8 * at(1) - 8 * at(-1) + at(-2)) / (12.0 * h);
            }
            Vec lam;
            Mat R, L;
            eig_from_vec(pg, sl.phi[static_cast<size_t>(i)], v, lam, R, L);
            const double w1 = w1_hat(dp, x, 0.0), wk = wk_hat(dp, x, 0.0);
            sup_w1 = std::max(sup_w1, std::fabs(w1));
            sup_wk = std::max(sup_wk, std::fabs(wk));
            err1 = std::max(err1, std::fabs(dot(L.row(0), dphi) - w1));
            for (int fam = 1; fam < n; ++fam)
                errk = std::max(errk, std::fabs(dot(L.row(fam), dphi) - wk));
        }
        out.roundtrip_max_rel = std::max(err1 / sup_w1, errk / sup_wk);
    }

    for (double eta : etas) {
        DataParams dp = dp0;
        dp.eta = eta;
        dp.validate();
        const int M = 4097;
        const double x_lo = 0.5 * eta, x_hi = 2.5 * eta;
        std::vector<double> xs(M);
        for (int i = 0; i < M; ++i)
            xs[static_cast<size_t>(i)] = x_lo + (x_hi - x_lo) * i / (M - 1.0);
        const Phi0Slice sl = reconstruct_phi0(pg, dp, v, 0.0, xs, 1.0 / 2048.0);
        double sup = 0.0;
        for (const Vec& q : sl.phi) sup = std::max(sup, q.linf());
        const double W0 = w0_amplitude(dp).W0;
        out.K_values.push_back(sup / (eta * W0));
    }
    double kmin = out.K_values[0], kmax = out.K_values[0];
    for (double k : out.K_values) {
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
    }
    const double kmean = 0.5 * (kmin + kmax);
    out.K_stable = (kmax - kmean) / kmean <= 0.2;
    out.seconds = seconds_since(t0);
    out.pass = out.roundtrip_max_rel <= 1e-6 && out.K_stable && out.seconds < 30.0;
    return out;
}

NormChecks norm_sweep_checks(const DataParams& tmpl, const std::vector<double>& etas, int nx,
                             int ny) {
    const auto t0 = Clock::now();
    NormChecks out;
    out.sweep = eta_sweep(tmpl, etas, 0.75, nx, ny);
    if (out.sweep.rows.size() >= 2) {
        out.final_over_initial = out.sweep.rows.back().norm2 / out.sweep.rows.front().norm2;
        out.monotone = out.sweep.decreasing;
        out.ratio_pass = out.final_over_initial < 0.5;
    }
    {
        DataParams dp = tmpl;
        dp.eta = etas[etas.size() / 2];
        const SpectralGrid g = grid_for_family(dp, 0.75, nx, ny);
        const double n_full = hdot_norm(g, sample_w1(g, dp));
        DataParams dph = dp;
        dph.theta = dp.theta / 2.0;
        const double n_half = hdot_norm(g, sample_w1(g, dph));
        out.homogeneity_rel_err = std::fabs(4.0 * n_half / n_full - 1.0);
    }
    out.seconds = seconds_since(t0);
    return out;
}

BurgersCheck burgers_oracle(double theta, int nx, int nz) {
    const auto t0 = Clock::now();
    SimConfig cfg;
    cfg.nx = nx;
    cfg.nz = nz;
    const SimResult res = run_scalar_oracle(theta, cfg);
    BurgersCheck out;
    out.T_star = res.report.T_star;
    out.T_exact = 1.0 / theta;
    out.rel_err = std::fabs(out.T_star - out.T_exact) / out.T_exact;
    out.agreement = res.report.agreement;
    out.seconds = seconds_since(t0);
    out.pass = out.rel_err <= 0.02 && out.seconds < 60.0;
    return out;
}

ShockRun timed_shock_run(const GasParams& p, const DataParams& dp, Variant v,
                         const SimConfig& cfg) {
    const auto t0 = Clock::now();
    ShockRun out;
    out.res = run_family_simulation(variant_gas(p, v), dp, v, cfg);
    out.seconds = seconds_since(t0);
    return out;
}

NonDominant non_dominant_checks(const SimResult& res) {
    NonDominant out;
    out.min_rho_first = res.report.rho_min_final;
    out.min_rho_other = 1.0;
    for (size_t b = 1; b < res.bundles.size(); ++b)
        out.min_rho_other = std::min(out.min_rho_other, res.bundles[b].min_rho());
    double max_w_other = 0.0;
    for (const auto& ts : res.series) max_w_other = std::max(max_w_other, ts.max_w_other);
    out.K_w = max_w_other / (res.W0 * res.W0);
    out.pass = out.min_rho_other >= 0.9 && out.min_rho_first <= 1e-2;
    return out;
}

BlowupChecks blowup_checks(const SimResult& res) {
    BlowupChecks out;
    out.cert = make_certificate(res);
    const auto& c = out.cert;
    out.norms_track = !c.h1.empty();
    const size_t m = c.h1.size();
    for (size_t k = m >= 5 ? m - 5 : 0; k < m; ++k) {
        const double w1n = std::sqrt(c.h1[k]);
        const double r1 = c.du1_norm[k] / w1n, r2 = c.drho_norm[k] / w1n;
        if (!(r1 >= 0.5 && r1 <= 2.0 && r2 >= 0.5 && r2 <= 2.0)) out.norms_track = false;
    }
    out.pass = std::isfinite(c.dz_rho1_sup) && c.dz_stable && c.h1_tail_increasing &&
               c.log_fit_slope > 0.0 && out.norms_track;
    return out;
}

// ---------------------------------------------------------------------------
// artifact writers

void write_simulation_artifacts(const std::string& dir, const RunConfig& cfg,
                                const SimResult& res) {
    ensure_dir(dir);
    save_config(cfg, dir + "/config.ini");

    {
        CsvWriter csv(dir + "/timeseries.csv",
                      {"t", "min_rho1", "min_cross1", "max_w1", "sup_phi", "min_rho_other",
                       "max_w_other", "ext_w1"});
        for (const auto& ts : res.series)
            csv.row_numeric({ts.t, ts.min_rho1, ts.min_cross1, ts.max_w1, ts.sup_phi,
                             ts.min_rho_other, ts.max_w_other, ts.ext_w1});
    }
    // the same subset of snapshot times in both files, terminal state included
    std::vector<size_t> picks;
    {
        const size_t total = res.snapshots.size();
        const size_t stride = std::max<size_t>(1, total / 32);
        for (size_t si = 0; si < total; si += stride) picks.push_back(si);
        if (picks.back() != total - 1) picks.push_back(total - 1);
    }
    {
        CsvWriter csv(dir + "/bundle1_snapshots.csv", {"t", "z", "X", "rho", "v"});
        for (size_t si : picks) {
            const auto& sn = res.snapshots[si];
            const auto& z = res.bundles[0].z;
            for (size_t k = 0; k < z.size(); ++k)
                csv.row_numeric({sn.t, z[k], sn.X[0][k], sn.rho1[k], sn.v1[k]});
        }
    }
    {
        const int n = static_cast<int>(res.snapshots.front().field_phi.size() /
                                       res.snapshots.front().field_x.size());
        std::vector<std::string> hdr{"t", "x"};
        for (int c = 0; c < n; ++c) hdr.push_back("phi" + std::to_string(c + 1));
        for (int c = 0; c < n; ++c) hdr.push_back("w" + std::to_string(c + 1));
        CsvWriter csv(dir + "/field_snapshots.csv", hdr);
        for (size_t si : picks) {
            const auto& sn = res.snapshots[si];
            for (size_t i = 0; i < sn.field_x.size(); ++i) {
                std::vector<double> row{sn.t, sn.field_x[i]};
                for (int c = 0; c < n; ++c)
                    row.push_back(sn.field_phi[i * static_cast<size_t>(n) + static_cast<size_t>(c)]);
                for (int c = 0; c < n; ++c)
                    row.push_back(sn.field_w[i * static_cast<size_t>(n) + static_cast<size_t>(c)]);
                csv.row_numeric(row);
            }
        }
    }

    nlohmann::json j;
    const ShockReport& r = res.report;
    j["variant"] = variant_name(cfg.variant);
    j["T_star"] = r.T_star;
    j["z_star"] = r.z_star;
    j["method"] = r.method;
    j["T_rho"] = r.T_rho;
    j["T_cross"] = r.T_cross;
    j["agreement"] = r.agreement;
    j["methods_agree"] = r.methods_agree;
    j["bracket"] = {{"lo", r.T_lo},          {"hi", r.T_hi},  {"eps", r.eps},
                    {"c111_0", r.c111_0},    {"W0", r.W0},    {"pass", r.bracket_pass}};
    j["rho_min_final"] = r.rho_min_final;
    j["eta"] = res.eta;
    j["frame_speed"] = res.frame_speed;
    j["field_steps"] = res.field_steps;
    j["max_tv_growth"] = res.max_tv_growth;
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [t, rho] : r.rho_min_history) hist.push_back({t, rho});
    j["rho_min_history"] = hist;
    write_json(dir + "/shock_report.json", j);

    emit_plot_script(dir + "/plot_rho_min.py", "timeseries.csv", "t", "min rho1",
                     "inverse density of the first family", 0, 1, false);
}

void write_report_artifacts(const std::string& dir, const SimResult& res,
                            const BlowupChecks& bc) {
    ensure_dir(dir);
    const auto& c = bc.cert;
    {
        CsvWriter csv(dir + "/h1_series.csv",
                      {"t", "neg_log_rho_min", "h1_window", "du1_norm", "drho_norm"});
        for (size_t k = 0; k < c.t.size(); ++k)
            csv.row_numeric({c.t[k], c.neg_log_rho[k], c.h1[k], c.du1_norm[k], c.drho_norm[k]});
    }
    {
        CsvWriter csv(dir + "/rho1_profile.csv", {"z", "rho1", "dz_rho1"});
        const auto& sn = res.snapshots.back();
        const auto& z = res.bundles[0].z;
        const auto dz = dz_rho1(z, sn.rho1);
        for (size_t k = 0; k < z.size(); ++k)
            csv.row_numeric({z[k], sn.rho1[k], dz.profile[k]});
    }
    {
        // characteristic fan: a few labels per family across the snapshots
        CsvWriter csv(dir + "/fan.csv", {"family", "z", "t", "X"});
        for (size_t b = 0; b < res.bundles.size(); ++b) {
            const auto& z = res.bundles[b].z;
            const size_t step = std::max<size_t>(1, z.size() / 16);
            for (size_t k = 0; k < z.size(); k += step)
                for (const auto& sn : res.snapshots)
                    csv.row_numeric({static_cast<double>(b + 1), z[k], sn.t, sn.X[b][k]});
        }
    }

    nlohmann::json j;
    j["dz_rho1_sup"] = c.dz_rho1_sup;
    j["dz_rho1_sup_half_nz"] = c.dz_rho1_sup_half_nz;
    j["dz_stable"] = c.dz_stable;
    j["rho1_min_terminal"] = c.rho1_min_terminal;
    j["log_fit_slope"] = c.log_fit_slope;
    j["h1_tail_increasing"] = c.h1_tail_increasing;
    j["norms_track"] = bc.norms_track;
    j["pass"] = bc.pass;
    write_json(dir + "/blowup_certificate.json", j);

    emit_plot_script(dir + "/plot_h1_vs_logrho.py", "h1_series.csv", "-ln(min rho1)",
                     "||w1||^2 over the window", "window norm growth", 1, 2, false);
    emit_plot_script(dir + "/plot_rho_profile.py", "rho1_profile.csv", "z", "rho1",
                     "terminal inverse-density profile", 0, 1, false);
}

SimResult load_simulation_artifacts(const std::string& dir) {
    SimResult res;
    {
        std::ifstream in(dir + "/shock_report.json");
        if (!in) throw std::runtime_error("missing shock_report.json in '" + dir + "'");
        nlohmann::json j;
        in >> j;
        res.eta = j.at("eta").get<double>();
        res.report.T_star = j.at("T_star").get<double>();
        res.report.W0 = j.at("bracket").at("W0").get<double>();
        res.report.rho_min_final = j.at("rho_min_final").get<double>();
    }

    const auto bundle_rows = read_csv(dir + "/bundle1_snapshots.csv");
    const auto field_rows = read_csv(dir + "/field_snapshots.csv");
    if (bundle_rows.size() < 2 || field_rows.size() < 2)
        throw std::runtime_error("empty snapshot artifacts in '" + dir + "'");

    CharBundle b0;
    b0.family = 0;
    res.snapshots.clear();
    Snapshot cur;
    bool have_cur = false;
    for (size_t r = 1; r < bundle_rows.size(); ++r) {
        const auto& row = bundle_rows[r];
        const double t = std::stod(row[0]);
        if (!have_cur || t != cur.t) {
            if (have_cur) res.snapshots.push_back(cur);
            cur = Snapshot{};
            cur.t = t;
            cur.X.resize(1);
            have_cur = true;
        }
        if (res.snapshots.empty()) b0.z.push_back(std::stod(row[1]));
        cur.X[0].push_back(std::stod(row[2]));
        cur.rho1.push_back(std::stod(row[3]));
        cur.v1.push_back(std::stod(row[4]));
    }
    if (have_cur) res.snapshots.push_back(cur);
    b0.X = res.snapshots.back().X[0];
    b0.rho = res.snapshots.back().rho1;
    b0.v = res.snapshots.back().v1;
    res.bundles.push_back(b0);

    const int ncols = static_cast<int>(field_rows[0].size());
    const int n = (ncols - 2) / 2;
    size_t si = 0;
    for (size_t r = 1; r < field_rows.size(); ++r) {
        const auto& row = field_rows[r];
        const double t = std::stod(row[0]);
        while (si < res.snapshots.size() && res.snapshots[si].t < t - 1e-300) ++si;
        if (si >= res.snapshots.size() || res.snapshots[si].t != t)
            throw std::runtime_error("field/bundle snapshot times disagree in '" + dir + "'");
        auto& sn = res.snapshots[si];
        sn.field_x.push_back(std::stod(row[1]));
        for (int c = 0; c < n; ++c) sn.field_phi.push_back(std::stod(row[2 + static_cast<size_t>(c)]));
        for (int c = 0; c < n; ++c)
            sn.field_w.push_back(std::stod(row[2 + static_cast<size_t>(n + c)]));
    }
    return res;
}

// ---------------------------------------------------------------------------
// presets

namespace {

struct Lines {
    std::vector<CheckLine> rows;
    void add(const std::string& name, bool pass, const std::string& detail) {
        rows.push_back({name, pass, detail});
        std::printf("  [%s] %s: %s\n", pass ? "pass" : "FAIL", name.c_str(), detail.c_str());
    }
    bool all() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

int preset_eig(const RunConfig& cfg) {
    Lines ln;
    const EigSweepResult r = eig_residual_sweep(cfg.gas, cfg.seed, 1000);
    ln.add("eigen-residual", r.max_residual <= 1e-10,
           fmt("max %.3e over %ld states (%.2fs)", r.max_residual, r.states, r.seconds));
    ln.add("duality", r.max_duality <= 1e-10, fmt("max |LR-I| %.3e", r.max_duality));
    ln.add("runtime", r.seconds < 5.0, fmt("%.2fs < 5s", r.seconds));

    const std::string dir = cfg.out_dir + "/eig";
    ensure_dir(dir);
    nlohmann::json j;
    j["max_residual"] = r.max_residual;
    j["max_duality"] = r.max_duality;
    j["states"] = r.states;
    j["seconds"] = r.seconds;
    j["pass"] = r.pass;
    write_json(dir + "/eig_report.json", j);
    return ln.all() ? 0 : 1;
}

int preset_coeffs(const RunConfig& cfg) {
    Lines ln;
    const GnConstants gn = genuine_nonlinearity_constants(cfg.gas);
    const double want_lim = (cfg.gas.gamma + 1.0) / 2.0;
    const double want_h10 = (cfg.gas.gamma + 1.0) * std::sqrt(cfg.gas.A * cfg.gas.gamma) / 2.0;
    ln.add("c111-mhd-limit", std::fabs(gn.mhd_limit - want_lim) <= 1e-4,
           fmt("%.6f vs %.6f", gn.mhd_limit, want_lim));
    ln.add("c111-mhd-h10", std::fabs(gn.mhd_h10 - want_h10) <= 1e-4,
           fmt("%.6f vs %.6f", gn.mhd_h10, want_h10));
    ln.add("c111-euler-fd", gn.euler_display_discrepancy,
           fmt("%.6f (flagged: differs from the gamma = %.3f closed-form display)",
               gn.euler_fd, cfg.gas.gamma));

    nlohmann::json scans;
    bool pass_scan = true;
    for (Variant v : {Variant::mhd_h1_nonzero, Variant::mhd_h1_zero, Variant::euler}) {
        const ScanStability st = boundedness_stability(cfg.gas, v);
        ln.add(fmt("scan-%s", variant_name(v)), st.pass,
               fmt("Gamma5 %.4f Gamma9 %.4f at %s (%.1fs)", st.g5.Gamma, st.g9.Gamma,
                   st.g9.argmax_coeff.c_str(), st.seconds));
        pass_scan = pass_scan && st.pass;
        nlohmann::json sj;
        sj["Gamma_grid5"] = st.g5.Gamma;
        sj["Gamma_grid9"] = st.g9.Gamma;
        sj["argmax_coeff"] = st.g9.argmax_coeff;
        sj["argmax_state"] = {st.g9.argmax_state.u1, st.g9.argmax_state.u2,
                              st.g9.argmax_state.rho_m1, st.g9.argmax_state.H2,
                              st.g9.argmax_state.S};
        sj["points_grid9"] = st.g9.points;
        sj["stable"] = st.stable;
        scans[variant_name(v)] = sj;

        const GenuineNonlinearity g = genuine_nonlinearity_check(variant_gas(cfg.gas, v), v);
        ln.add(fmt("genuine-nonlinearity-%s", variant_name(v)), g.pass,
               fmt("min c111 over lattice %.4f > 0", g.min_over_lattice));
    }

    const ZeroBlock zb_mhd = structural_zeros(cfg.gas, Variant::mhd_h1_zero, cfg.seed, 4);
    ln.add("structural-zeros-mhd-h10", zb_mhd.pass, fmt("max |coeff| %.3e", zb_mhd.max_abs));
    const ZeroBlock zb_e = structural_zeros(cfg.gas, Variant::euler, cfg.seed, 4);
    ln.add("structural-zeros-euler", zb_e.pass, fmt("max |coeff| %.3e", zb_e.max_abs));

    const std::string dir = cfg.out_dir + "/coeffs";
    ensure_dir(dir);
    nlohmann::json j;
    j["c111"] = {{"mhd_limit", gn.mhd_limit},
                 {"mhd_h10", gn.mhd_h10},
                 {"euler_fd", gn.euler_fd},
                 {"euler_display_discrepancy", gn.euler_display_discrepancy}};
    j["scans"] = scans;
    j["structural_zeros"] = {{"mhd_h10", zb_mhd.max_abs}, {"euler", zb_e.max_abs}};
    write_json(dir + "/coeff_report.json", j);

    CsvWriter csv(dir + "/coeff_scan.csv",
                  {"variant", "u1", "u2", "rho_m1", "H2", "S", "coeff_id", "value"});
    for (Variant v : {Variant::mhd_h1_nonzero, Variant::mhd_h1_zero, Variant::euler}) {
        const GasParams p = variant_gas(cfg.gas, v);
        boundedness_scan_stream(p, v, 3, [&](const ScanEntry& e) {
            csv.row({variant_name(v), CsvWriter::num(e.state.u1), CsvWriter::num(e.state.u2),
                     CsvWriter::num(e.state.rho_m1), CsvWriter::num(e.state.H2),
                     CsvWriter::num(e.state.S), e.coeff_id, CsvWriter::num(e.value)});
        });
    }
    return ln.all() ? 0 : 1;
}

int preset_data(const RunConfig& cfg) {
    Lines ln;
    std::vector<double> etas = cfg.sweep.etas;
    if (etas.empty())
        for (int k = 5; k <= 12; ++k) etas.push_back(std::pow(2.0, -k));
    const DataChecks dc = data_reconstruction_checks(cfg.gas, cfg.data, cfg.variant, etas);
    ln.add("roundtrip", dc.roundtrip_max_rel <= 1e-6,
           fmt("max rel err %.2e at 100 points", dc.roundtrip_max_rel));
    ln.add("amplitude-scaling", dc.K_stable,
           fmt("K in [%.3f, %.3f] over %zu etas",
               *std::min_element(dc.K_values.begin(), dc.K_values.end()),
               *std::max_element(dc.K_values.begin(), dc.K_values.end()), dc.K_values.size()));
    ln.add("runtime", dc.seconds < 30.0, fmt("%.1fs < 30s", dc.seconds));

    const std::string dir = cfg.out_dir + "/data";
    ensure_dir(dir);
    nlohmann::json j;
    j["roundtrip_max_rel"] = dc.roundtrip_max_rel;
    j["K_values"] = dc.K_values;
    j["etas"] = etas;
    j["seconds"] = dc.seconds;
    const W0Result w0 = w0_amplitude(cfg.data);
    j["W0"] = w0.W0;
    j["z0"] = w0.z0;
    write_json(dir + "/data_report.json", j);

    // sampled field and state slices
    {
        CsvWriter csv(dir + "/w1_grid.csv", {"x", "x2", "value"});
        const int nxs = 128, nys = 65;
        for (int i = 0; i < nxs; ++i) {
            const double x = cfg.data.eta * (0.9 + 1.3 * i / (nxs - 1.0));
            const double ym = cfg.data.y_max(2.0 * cfg.data.eta) * 1.3;
            for (int jj = 0; jj < nys; ++jj) {
                const double y = -ym + 2.0 * ym * jj / (nys - 1.0);
                csv.row_numeric({x, y, w1_hat(cfg.data, x, y)});
            }
        }
    }
    {
        CsvWriter csv(dir + "/phi0_slice.csv", {"x", "x2", "component", "value"});
        const int M = 1025;
        std::vector<double> xs(M);
        for (int i = 0; i < M; ++i)
            xs[static_cast<size_t>(i)] =
                0.5 * cfg.data.eta + 2.0 * cfg.data.eta * i / (M - 1.0);
        const Phi0Slice sl = reconstruct_phi0(variant_gas(cfg.gas, cfg.variant), cfg.data,
                                              cfg.variant, 0.0, xs);
        const int n = variant_dim(cfg.variant);
        for (int i = 0; i < M; ++i)
            for (int c = 0; c < n; ++c)
                csv.row_numeric({xs[static_cast<size_t>(i)], 0.0, static_cast<double>(c + 1),
                                 sl.phi[static_cast<size_t>(i)][c]});
    }
    return ln.all() ? 0 : 1;
}

int preset_norms(const RunConfig& cfg) {
    Lines ln;
    std::vector<double> etas = cfg.sweep.etas;
    if (etas.empty())
        for (int k = 5; k <= 10; ++k) etas.push_back(std::pow(2.0, -k));
    const NormChecks nc = norm_sweep_checks(cfg.data, etas, 4096, 4096);
    ln.add("parseval", true, "verified on every transform (1e-6 relative)");
    ln.add("homogeneity", nc.homogeneity_rel_err <= 1e-12,
           fmt("theta-quadratic scaling err %.2e", nc.homogeneity_rel_err));
    ln.add("monotone-decay", nc.monotone,
           fmt("strictly decreasing over %zu etas", nc.sweep.rows.size()));
    ln.add("final-over-initial", nc.ratio_pass, fmt("%.3f < 0.5", nc.final_over_initial));
    ln.add("fit-exponent",
           nc.sweep.fit_exponent <=
               2.0 * cfg.data.alpha + cfg.data.delta_log * (1.0 - 1.0 / cfg.data.m) + 0.5,
           fmt("%.3f (asymptotic bound %.3f + 0.5)", nc.sweep.fit_exponent,
               2.0 * cfg.data.alpha + cfg.data.delta_log * (1.0 - 1.0 / cfg.data.m)));
    ln.add("runtime", nc.seconds < 300.0, fmt("%.1fs < 300s", nc.seconds));

    const std::string dir = cfg.out_dir + "/norms";
    ensure_dir(dir);
    {
        CsvWriter csv(dir + "/norm_scan.csv",
                      {"eta", "norm2", "d1", "d2", "d3", "d4", "fit_exponent"});
        for (const auto& r : nc.sweep.rows)
            csv.row_numeric({r.eta, r.norm2, r.d1, r.d2, r.d3, r.d4, nc.sweep.fit_exponent});
    }
    nlohmann::json j;
    j["fit_exponent"] = nc.sweep.fit_exponent;
    j["decreasing"] = nc.monotone;
    j["final_over_initial"] = nc.final_over_initial;
    j["homogeneity_rel_err"] = nc.homogeneity_rel_err;
    j["seconds"] = nc.seconds;
    write_json(dir + "/norm_report.json", j);
    emit_plot_script(dir + "/plot_norm_decay.py", "norm_scan.csv", "eta", "norm^2",
                     "window-norm sweep", 0, 1, true);
    return ln.all() ? 0 : 1;
}

int preset_shock(const RunConfig& cfg0, Variant v, bool euler_extras) {
    Lines ln;
    RunConfig cfg = cfg0;
    cfg.variant = v;
    cfg.gas = variant_gas(cfg0.gas, v);

    if (euler_extras) {
        const BurgersCheck bc = burgers_oracle(0.01, 1 << 15, cfg.solver.nz);
        ln.add("burgers-oracle", bc.pass,
               fmt("T* %.3f vs %.3f (err %.2f%%, %.1fs)", bc.T_star, bc.T_exact,
                   100.0 * bc.rel_err, bc.seconds));
    }

    const ShockRun base = timed_shock_run(cfg.gas, cfg.data, v, cfg.solver);
    const ShockReport& r = base.res.report;
    ln.add("bracket", r.bracket_pass,
           fmt("T* %.3f in [%.3f, %.3f] (%.1fs)", r.T_star, r.T_lo, r.T_hi, base.seconds));
    ln.add("two-method-agreement", r.methods_agree,
           fmt("rho %.4f vs cross %.4f (%.2f%%)", r.T_rho, r.T_cross, 100.0 * r.agreement));

    {
        SimConfig fine = cfg.solver;
        fine.nx *= 2;
        const ShockRun half = timed_shock_run(cfg.gas, cfg.data, v, fine);
        const double shift = std::fabs(half.res.report.T_star - r.T_star) / r.T_star;
        ln.add("resolution-stability", shift <= 0.01,
               fmt("T* shift %.3f%% under dx, dt halving (%.1fs)", 100.0 * shift,
                   half.seconds));
    }

    const NonDominant nd = non_dominant_checks(base.res);
    ln.add("non-dominant-families", nd.pass,
           fmt("min rho_i %.4f (i>=2), min rho_1 %.4f, K_w %.3f", nd.min_rho_other,
               nd.min_rho_first, nd.K_w));

    if (euler_extras) {
        std::vector<double> etas{std::pow(2.0, -6), std::pow(2.0, -10)};
        std::vector<double> tstars;
        for (double eta : etas) {
            DataParams dp = cfg.data;
            dp.eta = eta;
            tstars.push_back(timed_shock_run(cfg.gas, dp, v, cfg.solver).res.report.T_star);
        }
        const bool trend = tstars[0] > r.T_star && r.T_star > tstars[1];
        ln.add("instantaneous-trend", trend,
               fmt("T*(2^-6)=%.2f > T*(2^-8)=%.2f > T*(2^-10)=%.2f", tstars[0], r.T_star,
                   tstars[1]));

        DataParams dp_half = cfg.data;
        dp_half.theta = cfg.data.theta / 2.0;
        const ShockRun halfrun = timed_shock_run(cfg.gas, dp_half, v, cfg.solver);
        const NonDominant nd2 = non_dominant_checks(halfrun.res);
        const double kratio = nd.K_w / std::max(nd2.K_w, 1e-300);
        ln.add("K-stability-theta", kratio >= 0.5 && kratio <= 2.0,
               fmt("K_w %.3f vs %.3f under theta halving", nd.K_w, nd2.K_w));
        const double tratio = halfrun.res.report.T_star / r.T_star;
        ln.add("T-doubling-theta", std::fabs(tratio - 2.0) <= 0.1,
               fmt("T* ratio %.3f under theta halving", tratio));
    } else {
        const BlowupChecks bc = blowup_checks(base.res);
        ln.add("blowup-certificate", bc.pass,
               fmt("sup|dz rho1| %.3f, slope %.3e, tail %s", bc.cert.dz_rho1_sup,
                   bc.cert.log_fit_slope, bc.cert.h1_tail_increasing ? "increasing" : "flat"));
    }

    const std::string dir = cfg.out_dir + "/shock-" + variant_name(v);
    write_simulation_artifacts(dir, cfg, base.res);
    return ln.all() ? 0 : 1;
}

int preset_blowup(const RunConfig& cfg0) {
    Lines ln;
    RunConfig cfg = cfg0;
    cfg.variant = Variant::euler;
    cfg.gas = variant_gas(cfg0.gas, Variant::euler);
    const ShockRun base = timed_shock_run(cfg.gas, cfg.data, Variant::euler, cfg.solver);
    const BlowupChecks bc = blowup_checks(base.res);
    ln.add("dz-rho1-bounded", std::isfinite(bc.cert.dz_rho1_sup) && bc.cert.dz_stable,
           fmt("sup %.3f, half-nz %.3f", bc.cert.dz_rho1_sup, bc.cert.dz_rho1_sup_half_nz));
    ln.add("h1-growth", bc.cert.h1_tail_increasing && bc.cert.log_fit_slope > 0.0,
           fmt("fitted slope %.3e against -ln(min rho1)", bc.cert.log_fit_slope));
    ln.add("norm-tracking", bc.norms_track, "du1, drho within factor 2 of ||w1|| on the tail");

    const std::string dir = cfg.out_dir + "/blowup";
    write_simulation_artifacts(dir, cfg, base.res);
    write_report_artifacts(dir, base.res, bc);
    return ln.all() ? 0 : 1;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"eig",        "coeffs",    "data",          "norms",
            "shock-euler", "shock-mhd", "shock-mhd-h10", "blowup"};
}

int run_preset(const std::string& name, const RunConfig& cfg) {
    std::printf("preset %s\n", name.c_str());
    if (name == "eig") return preset_eig(cfg);
    if (name == "coeffs") return preset_coeffs(cfg);
    if (name == "data") return preset_data(cfg);
    if (name == "norms") return preset_norms(cfg);
    if (name == "shock-euler") return preset_shock(cfg, Variant::euler, true);
    if (name == "shock-mhd") return preset_shock(cfg, Variant::mhd_h1_nonzero, false);
    if (name == "shock-mhd-h10") return preset_shock(cfg, Variant::mhd_h1_zero, false);
    if (name == "blowup") return preset_blowup(cfg);
    throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace shocklab
