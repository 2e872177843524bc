#include <CLI11.hpp>

#include <cstdio>
#include <exception>

#include "shocklab/artifacts.hpp"
#include "shocklab/presets.hpp"

using namespace shocklab;

namespace {

RunConfig load_or_default(const std::string& config_path, const std::string& out_override,
                          std::uint64_t seed_override, bool seed_set) {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (!out_override.empty()) cfg.out_dir = out_override;
    if (seed_set) cfg.seed = seed_override;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar gas-dynamics wave-decomposition laboratory"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 1;
    app.add_option("--config", config_path, "config file (key = value, with [sections])");
    app.add_option("--out", out_dir, "output directory override");
    app.add_option("--seed", seed, "seed for sampling-based checks")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--threads", threads, "worker threads (runs are serial and deterministic)");

    auto* sc_eig = app.add_subcommand("eig-check", "eigenstructure residual sweeps");
    int eig_states = 1000;
    sc_eig->add_option("--states", eig_states, "random states per variant");

    auto* sc_coeff = app.add_subcommand("coeff-scan", "coefficient boundedness scan");
    std::string scan_variant = "euler";
    int scan_grid = 5;
    sc_coeff->add_option("--variant", scan_variant, "mhd | mhd-h10 | euler");
    sc_coeff->add_option("--grid", scan_grid, "lattice points per axis");

    auto* sc_data = app.add_subcommand("make-data", "sample the data family and rebuild the state");
    auto* sc_norm = app.add_subcommand("norm-scan", "fractional-norm sweep over eta");
    auto* sc_sim = app.add_subcommand("simulate", "field/bundle co-solve to the shock time");
    auto* sc_rep = app.add_subcommand("report", "post-process a simulate output directory");
    std::string report_dir;
    sc_rep->add_option("--in", report_dir, "simulate output directory")->required();

    auto* sc_preset = app.add_subcommand("preset", "run a named experiment pipeline");
    std::string preset;
    sc_preset->add_option("name", preset, "one of: eig coeffs data norms shock-euler shock-mhd shock-mhd-h10 blowup")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = load_or_default(config_path, out_dir, seed, seed_set);

        if (sc_eig->parsed()) {
            const EigSweepResult r = eig_residual_sweep(cfg.gas, cfg.seed, eig_states);
            std::printf("max residual %.3e, max duality %.3e over %ld states (%.2fs): %s\n",
                        r.max_residual, r.max_duality, r.states, r.seconds,
                        r.pass ? "pass" : "FAIL");
            ensure_dir(cfg.out_dir);
            nlohmann::json j;
            j["max_residual"] = r.max_residual;
            j["max_duality"] = r.max_duality;
            j["states"] = r.states;
            j["pass"] = r.pass;
            write_json(cfg.out_dir + "/eig_check.json", j);
            return r.pass ? 0 : 1;
        }
        if (sc_coeff->parsed()) {
            const Variant v = variant_from_name(scan_variant);
            GasParams p = cfg.gas;
            if (v != Variant::mhd_h1_nonzero) p.H1 = 0.0;
            ensure_dir(cfg.out_dir);
            CsvWriter csv(cfg.out_dir + "/coeff_scan.csv",
                          {"variant", "u1", "u2", "rho_m1", "H2", "S", "coeff_id", "value"});
            const ScanReport rep =
                boundedness_scan_stream(p, v, scan_grid, [&](const ScanEntry& e) {
                    csv.row({variant_name(v), CsvWriter::num(e.state.u1),
                             CsvWriter::num(e.state.u2), CsvWriter::num(e.state.rho_m1),
                             CsvWriter::num(e.state.H2), CsvWriter::num(e.state.S), e.coeff_id,
                             CsvWriter::num(e.value)});
                });
            nlohmann::json j;
            j["Gamma"] = rep.Gamma;
            j["argmax_state"] = {rep.argmax_state.u1, rep.argmax_state.u2,
                                 rep.argmax_state.rho_m1, rep.argmax_state.H2,
                                 rep.argmax_state.S};
            j["argmax_coeff"] = rep.argmax_coeff;
            j["points"] = rep.points;
            j["pass"] = rep.pass;
            write_json(cfg.out_dir + "/coeff_scan.json", j);
            std::printf("Gamma %.4f at %s over %ld states: %s\n", rep.Gamma,
                        rep.argmax_coeff.c_str(), rep.points, rep.pass ? "pass" : "FAIL");
            return rep.pass ? 0 : 1;
        }
        if (sc_data->parsed()) return run_preset("data", cfg);
        if (sc_norm->parsed()) return run_preset("norms", cfg);
        if (sc_sim->parsed()) {
            const SimResult res =
                run_family_simulation(cfg.gas, cfg.data, cfg.variant, cfg.solver);
            write_simulation_artifacts(cfg.out_dir + "/simulate", cfg, res);
            std::printf("T* = %.4f (bracket [%.4f, %.4f], %s), artifacts in %s/simulate\n",
                        res.report.T_star, res.report.T_lo, res.report.T_hi,
                        res.report.bracket_pass ? "pass" : "FAIL", cfg.out_dir.c_str());
            return res.report.bracket_pass ? 0 : 1;
        }
        if (sc_rep->parsed()) {
            const SimResult res = load_simulation_artifacts(report_dir);
            const BlowupChecks bc = blowup_checks(res);
            write_report_artifacts(cfg.out_dir + "/report", res, bc);
            std::printf("blowup certificate: %s (slope %.3e, sup|dz rho1| %.3f)\n",
                        bc.pass ? "pass" : "FAIL", bc.cert.log_fit_slope, bc.cert.dz_rho1_sup);
            return bc.pass ? 0 : 1;
        }
        if (sc_preset->parsed()) return run_preset(preset, cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
