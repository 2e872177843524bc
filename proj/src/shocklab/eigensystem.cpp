#include "shocklab/eigensystem.hpp"

#include <cmath>
#include <stdexcept>

namespace shocklab {

namespace {

// rho^(gamma-1); gamma = 2 is the default and sits on the hot solver path
inline double pow_gm1(double rho, double gamma) {
    return gamma == 2.0 ? rho : std::pow(rho, gamma - 1.0);
}

struct Core {
    double u1, rho, c2, c, cf2, cf, cs2, cs, g;
};

// Shared per-state quantities. g = (C_f^2 - c^2)/H2^2 via the exact identity
// derived from the characteristic polynomial; rho*C_f^2 - mu0*H1^2 stays
// bounded away from zero in the admissible smallness regime.
Core core_mhd(const GasParams& p, const Vec& q) {
    Core k;
    k.u1 = q[0];
    k.rho = 1.0 + q[2];
    if (!(k.rho > 0.0)) throw std::domain_error("non-positive density");
    const double H2 = q[3];
    k.c2 = p.A * p.gamma * std::exp(q[4]) * pow_gm1(k.rho, p.gamma);
    k.c = std::sqrt(k.c2);
    const double hh = p.mu0 / k.rho * (p.H1 * p.H1 + H2 * H2);
    const double T = hh + k.c2;
    double disc = T * T - 4.0 * p.mu0 / k.rho * p.H1 * p.H1 * k.c2;
    if (disc < 0.0) {
        if (disc < -1e-14) throw std::runtime_error("negative magnetosonic discriminant");
        disc = 0.0;
    }
    k.cf2 = 0.5 * (T + std::sqrt(disc));
    k.cf = std::sqrt(k.cf2);
    k.cs2 = p.H1 == 0.0 ? 0.0 : p.mu0 * p.H1 * p.H1 * k.c2 / (k.rho * k.cf2);
    k.cs = std::sqrt(k.cs2);
    k.g = p.mu0 * k.cf2 / (k.rho * k.cf2 - p.mu0 * p.H1 * p.H1);
    return k;
}

void fill_mhd_nonzero(const GasParams& p, const Vec& q, Vec& lam, Mat& R, Mat& L) {
    if (p.H1 == 0.0)
        throw std::domain_error("variant mhd requires H1 != 0 (use mhd-h10 for H1 = 0)");
    const Core k = core_mhd(p, q);
    const double H1 = p.H1, H2 = q[3], mu0 = p.mu0;

    lam = Vec(5);
    lam[0] = k.u1 + k.cf;
    lam[1] = k.u1 + k.cs;
    lam[2] = k.u1;
    lam[3] = k.u1 - k.cs;
    lam[4] = k.u1 - k.cf;

    // q1 = (C_f^2 - c^2)/H2, regularized; dcs = C_s^2 - c^2 needs no care.
    const double q1 = k.g * H2;
    const double dcs = k.cs2 - k.c2;

    R = Mat(5);
    // r1, r5
    R(0, 0) = 1.0;
    R(1, 0) = -q1 * H1 / k.cf2;
    R(2, 0) = k.rho / k.cf;
    R(3, 0) = k.rho * q1 / (mu0 * k.cf);
    R(4, 0) = 0.0;
    R(0, 4) = 1.0;
    R(1, 4) = R(1, 0);
    R(2, 4) = -R(2, 0);
    R(3, 4) = -R(3, 0);
    R(4, 4) = 0.0;
    // r2, r4
    R(0, 1) = H2;
    R(1, 1) = -dcs * H1 / k.cs2;
    R(2, 1) = k.rho * H2 / k.cs;
    R(3, 1) = k.rho * dcs / (mu0 * k.cs);
    R(4, 1) = 0.0;
    R(0, 3) = H2;
    R(1, 3) = R(1, 1);
    R(2, 3) = -R(2, 1);
    R(3, 3) = -R(3, 1);
    R(4, 3) = 0.0;
    // r3
    R(0, 2) = 0.0;
    R(1, 2) = 0.0;
    R(2, 2) = -k.rho / p.gamma;
    R(3, 2) = 0.0;
    R(4, 2) = 1.0;

    L = Mat(5);
    // l1, l5: common denominator divided through by H2^2.
    const double d1 = 2.0 * (k.cf2 * k.cf2 + H1 * H1 * k.g * k.g * H2 * H2);
    L(0, 0) = k.cf2 * k.cf2 / d1;
    L(0, 1) = -k.cf2 * k.g * H1 * H2 / d1;
    L(0, 2) = k.cf * k.cf2 * k.c2 / (k.rho * d1);
    L(0, 3) = k.cf * k.cf2 * k.g * H2 / d1;
    L(0, 4) = k.cf * k.cf2 * k.c2 / (p.gamma * d1);
    L(4, 0) = L(0, 0);
    L(4, 1) = L(0, 1);
    L(4, 2) = -L(0, 2);
    L(4, 3) = -L(0, 3);
    L(4, 4) = -L(0, 4);
    // l2, l4
    const double d2 = 2.0 * (H2 * H2 * k.cs2 * k.cs2 + H1 * H1 * dcs * dcs);
    L(1, 0) = k.cs2 * k.cs2 * H2 / d2;
    L(1, 1) = -k.cs2 * dcs * H1 / d2;
    L(1, 2) = k.cs * k.cs2 * H2 * k.c2 / (k.rho * d2);
    L(1, 3) = k.cs * k.cs2 * dcs / d2;
    L(1, 4) = k.cs * k.cs2 * H2 * k.c2 / (p.gamma * d2);
    L(3, 0) = L(1, 0);
    L(3, 1) = L(1, 1);
    L(3, 2) = -L(1, 2);
    L(3, 3) = -L(1, 3);
    L(3, 4) = -L(1, 4);
    // l3
    L(2, 0) = L(2, 1) = L(2, 2) = L(2, 3) = 0.0;
    L(2, 4) = 1.0;
}

void fill_mhd_zero(const GasParams& p, const Vec& q, Vec& lam, Mat& R, Mat& L) {
    if (p.H1 != 0.0) throw std::domain_error("variant mhd-h10 requires H1 = 0");
    Core k = core_mhd(p, q);
    const double H2 = q[3], mu0 = p.mu0;
    // exact for H1 = 0
    k.cf2 = mu0 * H2 * H2 / k.rho + k.c2;
    k.cf = std::sqrt(k.cf2);

    lam = Vec(5);
    lam[0] = k.u1 + k.cf;
    lam[1] = k.u1;
    lam[2] = k.u1;
    lam[3] = k.u1;
    lam[4] = k.u1 - k.cf;

    R = Mat(5);
    R(0, 0) = k.cf / k.rho;
    R(2, 0) = 1.0;
    R(3, 0) = H2 / k.rho;
    R(1, 1) = 1.0;
    R(2, 2) = 1.0;
    R(4, 2) = -p.gamma / k.rho;
    R(3, 3) = 1.0;
    R(4, 3) = -p.gamma * mu0 * H2 / (k.rho * k.c2);
    R(0, 4) = -k.cf / k.rho;
    R(2, 4) = 1.0;
    R(3, 4) = H2 / k.rho;

    L = Mat(5);
    L(0, 0) = k.rho / (2.0 * k.cf);
    L(0, 2) = k.c2 / (2.0 * k.cf2);
    L(0, 3) = mu0 * H2 / (2.0 * k.cf2);
    L(0, 4) = k.rho * k.c2 / (2.0 * p.gamma * k.cf2);
    L(1, 1) = 1.0;
    L(2, 2) = mu0 * H2 * H2 / (k.rho * k.cf2);
    L(2, 3) = -mu0 * H2 / k.cf2;
    L(2, 4) = -k.rho * k.c2 / (p.gamma * k.cf2);
    L(3, 2) = -k.c2 * H2 / (k.rho * k.cf2);
    L(3, 3) = k.c2 / k.cf2;
    L(3, 4) = -k.c2 * H2 / (p.gamma * k.cf2);
    L(4, 0) = -L(0, 0);
    L(4, 2) = L(0, 2);
    L(4, 3) = L(0, 3);
    L(4, 4) = L(0, 4);
}

void fill_euler(const GasParams& p, const Vec& q, Vec& lam, Mat& R, Mat& L) {
    const double u1 = q[0];
    const double rho = 1.0 + q[2];
    if (!(rho > 0.0)) throw std::domain_error("non-positive density");
    const double c2 = p.A * p.gamma * std::exp(q[3]) * pow_gm1(rho, p.gamma);
    const double c = std::sqrt(c2);

    lam = Vec(4);
    lam[0] = u1 + c;
    lam[1] = u1;
    lam[2] = u1;
    lam[3] = u1 - c;

    R = Mat(4);
    R(0, 0) = 1.0;
    R(2, 0) = rho / c;
    R(1, 1) = 1.0;
    R(2, 2) = 1.0;
    R(3, 2) = -p.gamma / rho;
    R(0, 3) = 1.0;
    R(2, 3) = -rho / c;

    L = Mat(4);
    L(0, 0) = 0.5;
    L(0, 2) = c / (2.0 * rho);
    L(0, 3) = c / (2.0 * p.gamma);
    L(1, 1) = 1.0;
    L(2, 3) = -rho / p.gamma;
    L(3, 0) = 0.5;
    L(3, 2) = -c / (2.0 * rho);
    L(3, 3) = -c / (2.0 * p.gamma);
}

}  // namespace

void eig_from_vec(const GasParams& p, const Vec& q, Variant v, Vec& lam, Mat& R, Mat& L) {
    switch (v) {
        case Variant::mhd_h1_nonzero: fill_mhd_nonzero(p, q, lam, R, L); break;
        case Variant::mhd_h1_zero: fill_mhd_zero(p, q, lam, R, L); break;
        case Variant::euler: fill_euler(p, q, lam, R, L); break;
    }
}

Mat assemble_matrix_from_vec(const GasParams& p, const Vec& q, Variant v) {
    const double u1 = q[0];
    const double rho = 1.0 + q[2];
    if (!(rho > 0.0)) throw std::domain_error("non-positive density");
    if (v == Variant::euler) {
        const double c2 = p.A * p.gamma * std::exp(q[3]) * pow_gm1(rho, p.gamma);
        Mat A(4);
        A(0, 0) = u1;
        A(0, 2) = c2 / rho;
        A(0, 3) = c2 / p.gamma;
        A(1, 1) = u1;
        A(2, 0) = rho;
        A(2, 2) = u1;
        A(3, 3) = u1;
        return A;
    }
    const double H2 = q[3];
    const double c2 = p.A * p.gamma * std::exp(q[4]) * pow_gm1(rho, p.gamma);
    const double H1 = v == Variant::mhd_h1_zero ? 0.0 : p.H1;
    Mat A(5);
    A(0, 0) = u1;
    A(0, 2) = c2 / rho;
    A(0, 3) = p.mu0 * H2 / rho;
    A(0, 4) = c2 / p.gamma;
    A(1, 1) = u1;
    A(1, 3) = -p.mu0 * H1 / rho;
    A(2, 0) = rho;
    A(2, 2) = u1;
    A(3, 0) = H2;
    A(3, 1) = -H1;
    A(3, 3) = u1;
    A(4, 4) = u1;
    return A;
}

Vec eigenvalues_from_vec(const GasParams& p, const Vec& q, Variant v) {
    Vec lam;
    Mat R, L;
    eig_from_vec(p, q, v, lam, R, L);
    return lam;
}

Mat assemble_matrix(const GasParams& p, const State& s, Variant v) {
    return assemble_matrix_from_vec(p, state_to_vec(s, v), v);
}

Vec eigenvalues(const GasParams& p, const State& s, Variant v) {
    return eigenvalues_from_vec(p, state_to_vec(s, v), v);
}

Mat right_eigenvectors(const GasParams& p, const State& s, Variant v) {
    require_in_ball(p, s, v);
    Vec lam;
    Mat R, L;
    eig_from_vec(p, state_to_vec(s, v), v, lam, R, L);
    return R;
}

Mat left_eigenvectors(const GasParams& p, const State& s, Variant v) {
    require_in_ball(p, s, v);
    Vec lam;
    Mat R, L;
    eig_from_vec(p, state_to_vec(s, v), v, lam, R, L);
    return L;
}

Eigensystem make_eigensystem(const GasParams& p, const State& s, Variant v) {
    require_in_ball(p, s, v);
    Eigensystem e;
    e.variant = v;
    e.n = variant_dim(v);
    eig_from_vec(p, state_to_vec(s, v), v, e.lambdas, e.R, e.L);
    return e;
}

double cf2_minus_c2_over_h2sq(const GasParams& p, const State& s) {
    const WaveSpeeds ws = wave_speeds(p, s);
    const double cf2 = ws.cf * ws.cf;
    return p.mu0 * cf2 / (s.rho() * cf2 - p.mu0 * p.H1 * p.H1);
}

double eigen_residual(const Mat& A, const Vec& lam, const Mat& R) {
    const double anorm = A.max_row_sum();
    double worst = 0.0;
    for (int i = 0; i < A.n; ++i) {
        const Vec r = R.col(i);
        const Vec ar = matvec(A, r);
        double err = 0.0;
        for (int j = 0; j < A.n; ++j) err = std::max(err, std::fabs(ar[j] - lam[i] * r[j]));
        worst = std::max(worst, err / (anorm * r.linf()));
    }
    return worst;
}

double duality_error(const Mat& L, const Mat& R) {
    Mat P = matmul(L, R);
    for (int i = 0; i < P.n; ++i) P(i, i) -= 1.0;
    return max_abs(P);
}

}  // namespace shocklab
