#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "shocklab/eigensystem.hpp"
#include "shocklab/gas.hpp"

namespace shocklab {

// Decomposition coefficients at one state. c[i][m] are the gradient-times-
// eigenvector factors, gam_im/gam_km the interaction coefficients; entries
// outside the variant dimension are zero.
struct CoeffTable {
    int n = 0;
    double fd_step = 0.0;
    double c[kMaxDim][kMaxDim] = {};
    double gam_im[kMaxDim][kMaxDim] = {};
    double gam_km[kMaxDim][kMaxDim][kMaxDim] = {};

    double max_abs() const;
    // componentwise max |a - b|
    static double max_diff(const CoeffTable& a, const CoeffTable& b);
};

// Central finite-difference gradient of lambda_i, step h per component;
// shrinks h once (x10) for components where s +/- h would leave the ball.
Vec grad_lambda(const GasParams& p, const State& s, Variant v, int i, double h = 1e-6);

CoeffTable coeff_table(const GasParams& p, const State& s, Variant v, double h = 1e-6);

// Table with the step-halving consistency check (h vs h/2, 1e-5 absolute);
// throws if the two disagree.
CoeffTable coeff_table_checked(const GasParams& p, const State& s, Variant v, double h = 1e-6,
                               double tol = 1e-5);

struct ScanEntry {
    State state;
    std::string coeff_id;
    double value = 0.0;
};

struct ScanReport {
    double Gamma = 0.0;
    State argmax_state;
    std::string argmax_coeff;
    bool pass = false;  // every entry finite and below threshold
    long points = 0;
    double threshold = 1e6;
};

// Lattice scan over the 2*delta ball (plus the near-degenerate H2 slice for
// the MHD variants). grid_n >= 1 points per axis.
ScanReport boundedness_scan(const GasParams& p, Variant v, int grid_n);

// Same lattice walk, but streaming every entry to a sink (for CSV emission).
ScanReport boundedness_scan_stream(const GasParams& p, Variant v, int grid_n,
                                   const std::function<void(const ScanEntry&)>& sink);

struct GenuineNonlinearity {
    double c111_at_zero = 0.0;
    double min_over_lattice = 0.0;
    bool pass = false;
};

GenuineNonlinearity genuine_nonlinearity_check(const GasParams& p, Variant v, int grid_n = 5);

// First-order model of the coefficient tables around Phi = 0, for the hot
// bundle ODEs: table(Phi) ~ base + sum_j dgrad[j] * Phi_j. The attained states
// are O(eta W0), so the quadratic remainder is far below solver tolerances.
struct CoeffModel {
    int n = 0;
    Variant variant = Variant::euler;
    CoeffTable base;
    std::array<CoeffTable, kMaxDim> dgrad;

    struct Rows {
        double cim[kMaxDim];
        double gim[kMaxDim];
        double gkm[kMaxDim][kMaxDim];
    };
    void eval_rows(const Vec& phi, int family, Rows& out) const;
    double c111(const Vec& phi) const;
};

CoeffModel make_coeff_model(const GasParams& p, Variant v, double model_step = 1e-3);

}  // namespace shocklab
