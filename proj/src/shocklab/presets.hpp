#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shocklab/config.hpp"
#include "shocklab/diagnostics.hpp"
#include "shocklab/sobolev.hpp"

namespace shocklab {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EigSweepResult {
    double max_residual = 0.0;
    double max_duality = 0.0;
    long states = 0;
    double seconds = 0.0;
    bool pass = false;
};
EigSweepResult eig_residual_sweep(const GasParams& base, std::uint64_t seed, int n_states);

struct GnConstants {
    double mhd_limit = 0.0;   // H1 -> 0 limit of the strictly hyperbolic branch
    double mhd_h10 = 0.0;
    double euler_fd = 0.0;    // finite-difference value, (gamma+1)/2
    bool euler_display_discrepancy = false;  // differs from the gamma constant
    double seconds = 0.0;
    bool pass = false;
};
GnConstants genuine_nonlinearity_constants(const GasParams& base);

struct ScanStability {
    ScanReport g5, g9;
    bool stable = false;  // Gamma within +-5% between the two grids
    double seconds = 0.0;
    bool pass = false;
};
ScanStability boundedness_stability(const GasParams& p, Variant v);

struct ZeroBlock {
    double max_abs = 0.0;  // over the designated middle-block coefficients
    bool pass = false;
};
ZeroBlock structural_zeros(const GasParams& p, Variant v, std::uint64_t seed, int n_states);

struct DataChecks {
    double roundtrip_max_rel = 0.0;  // per family, relative to sup|w_i_hat|
    std::vector<double> K_values;    // sup|Phi0| / (eta W0) per eta
    bool K_stable = false;
    double seconds = 0.0;
    bool pass = false;
};
DataChecks data_reconstruction_checks(const GasParams& p, const DataParams& dp, Variant v,
                                      const std::vector<double>& etas);

struct NormChecks {
    EtaSweep sweep;
    double final_over_initial = 0.0;
    bool monotone = false;
    bool ratio_pass = false;
    double homogeneity_rel_err = 0.0;  // theta -> theta/2 quadratic scaling
    double seconds = 0.0;
};
NormChecks norm_sweep_checks(const DataParams& tmpl, const std::vector<double>& etas, int nx,
                             int ny);

struct BurgersCheck {
    double T_star = 0.0, T_exact = 0.0, rel_err = 0.0, agreement = 0.0;
    double seconds = 0.0;
    bool pass = false;
};
BurgersCheck burgers_oracle(double theta, int nx, int nz);

struct ShockRun {
    SimResult res;
    double seconds = 0.0;
};
ShockRun timed_shock_run(const GasParams& p, const DataParams& dp, Variant v,
                         const SimConfig& cfg);

struct NonDominant {
    double min_rho_other = 0.0;
    double min_rho_first = 0.0;
    double K_w = 0.0;  // sup_strip |w_i| / W0^2, i >= 2
    bool pass = false;
};
NonDominant non_dominant_checks(const SimResult& res);

struct BlowupChecks {
    BlowupCertificate cert;
    bool norms_track = false;  // d_x norms within factor 2 of ||w1|| on the tail
    bool pass = false;
};
BlowupChecks blowup_checks(const SimResult& res);

// Presets: run the pipelines with the given config, write artifacts under
// cfg.out_dir/<name>/, print one line per check. Returns 0 when all pass.
int run_preset(const std::string& name, const RunConfig& cfg);
std::vector<std::string> preset_names();

// artifact writers shared with the CLI subcommands
void write_simulation_artifacts(const std::string& dir, const RunConfig& cfg,
                                const SimResult& res);
void write_report_artifacts(const std::string& dir, const SimResult& res,
                            const BlowupChecks& bc);

// Rebuild the post-processing view of a run from its emitted artifacts
// (snapshots, first-family bundle, report header). Used by `report`.
SimResult load_simulation_artifacts(const std::string& dir);

}  // namespace shocklab
