#pragma once

#include <utility>
#include <vector>

#include "shocklab/charsolver.hpp"

namespace shocklab {

// x2-thickness weight of the transported disk around the first strip,
// sqrt((z - eta + eps*eta)(2 eta - z + eps*eta)), endpoints fattened by
// eps*eta.
struct OmegaWeight {
    double eta = 0.0;
    double eps = 0.05;
    double operator()(double z) const;
};

// Centered label-derivative of rho1 over the bundle grid.
struct DzRho1 {
    std::vector<double> profile;
    double sup = 0.0;
};
DzRho1 dz_rho1(const std::vector<double>& z, const std::vector<double>& rho);

// ||w1||^2_{L^2(Omega_t)} from bundle variables: trapezoid in z of
// (v^2 / rho) * weight. Throws if rho <= 0 anywhere (past the shock).
double h1_window_norm(const std::vector<double>& z, const std::vector<double>& rho,
                      const std::vector<double>& v, const OmegaWeight& w);

// Same norm from the field side: w1 = l1 . dPhi/dx interpolated at X1(z),
// integrated with dx = rho dz.
double h1_window_norm_field(const Snapshot& snap, const std::vector<double>& z,
                            const OmegaWeight& w, int n_comp);

// (||d_x u1||, ||d_x rho||) over the window, from the field derivative
// recombination, quadrature in z along the first strip.
std::pair<double, double> velocity_density_norms(const Snapshot& snap,
                                                 const std::vector<double>& z,
                                                 const OmegaWeight& w, int n_comp);

struct BlowupCertificate {
    double dz_rho1_sup = 0.0;         // max over stored times
    double dz_rho1_sup_half_nz = 0.0; // same from every other label
    double rho1_min_terminal = 0.0;
    double log_fit_slope = 0.0;       // ||w1||^2 against -ln(min rho1)
    bool h1_tail_increasing = false;  // last 5 samples strictly increasing
    bool dz_stable = false;           // half-resolution within 10%
    std::vector<double> t, h1, rho_min, neg_log_rho;
    std::vector<double> du1_norm, drho_norm;  // at the same times
};

BlowupCertificate make_certificate(const SimResult& res);

}  // namespace shocklab
