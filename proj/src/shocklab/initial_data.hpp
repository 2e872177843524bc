#pragma once

#include <span>
#include <vector>

#include "shocklab/gas.hpp"
#include "shocklab/smallmat.hpp"

namespace shocklab {

// Data-family parameters. The admissibility constraints couple the log
// exponents to the anisotropy exponent m.
struct DataParams {
    double alpha = 1.0;
    double delta_log = 4.0;
    double m = 0.5;
    double theta = 1e-2;
    double eta = 1.0 / 256.0;

    void validate() const;  // throws std::invalid_argument
    // half-width of the x2 support at position x
    double y_max(double x) const;
};

// C-infinity step from 0 at t<=0 to 1 at t>=1, as the normalized integral of
// the bump exp(-1/(1-u^2)); machine-exact 0/1 outside (0, 1).
double smoothstep01(double t);

struct CutoffPair {
    // plateau 1 on [6/5, 9/5], support (1, 2)
    double chi(double x) const;
    // plateau 1 on |y| <= 1/3, support (-2/3, 2/3)
    double psi(double y) const;
};

CutoffPair make_cutoffs();

// First-family datum; exact 0 outside (eta, 2 eta) without evaluating logs.
double w1_hat(const DataParams& dp, double x, double x2);
// Other families' datum (amplitude theta^2, no log factor).
double wk_hat(const DataParams& dp, double x, double x2);

struct W0Result {
    double W0 = 0.0;
    double z0 = 0.0;
};

// Peak initial wave amplitude over all families: dense scan plus
// golden-section refinement of |w1_hat(z, 0)| on [eta, 2 eta].
W0Result w0_amplitude(const DataParams& dp);

struct Phi0Slice {
    std::vector<double> x;
    std::vector<Vec> phi;
};

// Physical initial state on a fixed x2-slice by integrating
// dPhi/dx = sum_i w_i_hat(x, x2) r_i(Phi) upward from x = eta/2 with RK4.
Phi0Slice reconstruct_phi0(const GasParams& p, const DataParams& dp, Variant v, double x2,
                           std::span<const double> xs, double max_step_frac = 1.0 / 2000.0);

}  // namespace shocklab
