#pragma once

#include "shocklab/gas.hpp"
#include "shocklab/smallmat.hpp"

namespace shocklab {

struct Eigensystem {
    Variant variant = Variant::euler;
    int n = 0;
    Vec lambdas;  // descending
    Mat R;        // right eigenvectors as columns
    Mat L;        // left eigenvectors as rows, dual to R
};

Mat assemble_matrix(const GasParams& p, const State& s, Variant v);
Vec eigenvalues(const GasParams& p, const State& s, Variant v);
Mat right_eigenvectors(const GasParams& p, const State& s, Variant v);
Mat left_eigenvectors(const GasParams& p, const State& s, Variant v);
Eigensystem make_eigensystem(const GasParams& p, const State& s, Variant v);

// Hot-path form on a raw state vector; skips the ball check.
void eig_from_vec(const GasParams& p, const Vec& q, Variant v, Vec& lam, Mat& R, Mat& L);
Vec eigenvalues_from_vec(const GasParams& p, const Vec& q, Variant v);
Mat assemble_matrix_from_vec(const GasParams& p, const Vec& q, Variant v);

// (C_f^2 - c^2)/H2^2 by the characteristic-polynomial identity
// (C_f^2 - c^2)(C_f^2 - mu0 H1^2/rho) = mu0 H2^2 C_f^2 / rho,
// which extends the H2-ratios in r1, r5, l1, l5 continuously through H2 = 0.
double cf2_minus_c2_over_h2sq(const GasParams& p, const State& s);

// max_i ||A r_i - lambda_i r_i||_inf / (||A||_mrs * ||r_i||_inf)
double eigen_residual(const Mat& A, const Vec& lam, const Mat& R);
// max |L R - I|
double duality_error(const Mat& L, const Mat& R);

}  // namespace shocklab
