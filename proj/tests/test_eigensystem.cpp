#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "shocklab/eigensystem.hpp"

using namespace shocklab;

namespace {

GasParams defaults() { return GasParams{}; }

GasParams h10_params() {
    GasParams p;
    p.H1 = 0.0;
    return p;
}

State random_state(std::mt19937_64& rng, double delta, Variant v) {
    std::uniform_real_distribution<double> u(-2.0 * delta * 0.99, 2.0 * delta * 0.99);
    State s;
    s.u1 = u(rng);
    s.u2 = u(rng);
    s.rho_m1 = u(rng);
    s.H2 = v == Variant::euler ? 0.0 : u(rng);
    s.S = u(rng);
    return s;
}

// dense nonsymmetric eigendecomposition as the independent oracle
std::vector<double> dense_eigenvalues(const Mat& A) {
    Eigen::MatrixXd M(A.n, A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) M(i, j) = A(i, j);
    Eigen::EigenSolver<Eigen::MatrixXd> es(M);
    std::vector<double> ev;
    for (int i = 0; i < A.n; ++i) {
        CHECK(std::fabs(es.eigenvalues()[i].imag()) < 1e-12);
        ev.push_back(es.eigenvalues()[i].real());
    }
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

}  // namespace

TEST_CASE("sound speed closed form") {
    GasParams p = defaults();
    CHECK(sound_speed(p, State{}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    State s2;
    s2.S = std::log(2.0);
    CHECK(sound_speed(p, s2) == doctest::Approx(2.0).epsilon(1e-14));

    // independent check at gamma = 1.4: centered finite difference of the
    // pressure law p(rho) = A e^S rho^gamma
    GasParams p14 = defaults();
    p14.gamma = 1.4;
    State s3;
    s3.rho_m1 = 0.1;
    const double c = sound_speed(p14, s3);
    const double h = 1e-6;
    const auto pressure = [&](double rho) { return p14.A * std::pow(rho, p14.gamma); };
    const double dpdrho = (pressure(1.1 + h) - pressure(1.1 - h)) / (2.0 * h);
    CHECK(c == doctest::Approx(std::sqrt(dpdrho)).epsilon(1e-9));
    CHECK(c == doctest::Approx(1.2059868015677944).epsilon(1e-14));

    State bad;
    bad.rho_m1 = -1.5;
    CHECK_THROWS_AS(sound_speed(p, bad), std::domain_error);
}

TEST_CASE("magnetosonic speeds") {
    GasParams p = defaults();
    p.H1 = 0.1;
    // H2 = 0: the radical collapses, C_f^2 = max(c^2, mu0 H1^2), C_s^2 = min
    const WaveSpeeds ws = wave_speeds(p, State{});
    CHECK(ws.cf == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(ws.cs == doctest::Approx(0.1).epsilon(1e-12));

    // H1 = 0: C_f = sqrt(mu0 H2^2 / rho + c^2), C_s = 0
    GasParams p0 = h10_params();
    State s;
    s.H2 = 0.07;
    const WaveSpeeds w0 = wave_speeds(p0, s);
    CHECK(w0.cf == doctest::Approx(std::sqrt(0.07 * 0.07 + 2.0)).epsilon(1e-14));
    CHECK(w0.cs == 0.0);

    const WaveSpeeds wb = wave_speeds(p0, State{});
    CHECK(wb.cf == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(wb.cs == 0.0);
}

TEST_CASE("eigenvalues per variant") {
    GasParams p = defaults();
    const Vec le = eigenvalues(p, State{}, Variant::euler);
    CHECK(le.n == 4);
    CHECK(le[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(le[1] == 0.0);
    CHECK(le[2] == 0.0);
    CHECK(le[3] == doctest::Approx(-std::sqrt(2.0)));

    const Vec lz = eigenvalues(h10_params(), State{}, Variant::mhd_h1_zero);
    CHECK(lz[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(lz[1] == 0.0);
    CHECK(lz[2] == 0.0);
    CHECK(lz[3] == 0.0);
    CHECK(lz[4] == doctest::Approx(-std::sqrt(2.0)));

    // strict ordering + dense-eigensolver agreement for the H1 != 0 branch
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const State s = random_state(rng, p.delta_ball, Variant::mhd_h1_nonzero);
        const Vec lam = eigenvalues(p, s, Variant::mhd_h1_nonzero);
        for (int k = 0; k + 1 < lam.n; ++k) CHECK(lam[k] > lam[k + 1]);
        const auto ev = dense_eigenvalues(assemble_matrix(p, s, Variant::mhd_h1_nonzero));
        for (int k = 0; k < lam.n; ++k)
            CHECK(lam[k] == doctest::Approx(ev[static_cast<size_t>(k)]).epsilon(1e-9));
    }
}

TEST_CASE("assembled matrix entries") {
    GasParams p = defaults();
    const Mat Ae = assemble_matrix(p, State{}, Variant::euler);
    CHECK(Ae(2, 0) == 1.0);  // row 3 = (rho, 0, u1, 0)
    CHECK(Ae(2, 1) == 0.0);
    CHECK(Ae(2, 2) == 0.0);
    CHECK(Ae(2, 3) == 0.0);

    const Mat Am = assemble_matrix(p, State{}, Variant::mhd_h1_nonzero);
    CHECK(Am(1, 3) == doctest::Approx(-p.mu0 * p.H1).epsilon(1e-15));

    const Mat Az = assemble_matrix(h10_params(), State{}, Variant::mhd_h1_zero);
    for (int j = 0; j < 5; ++j) {
        if (j != 1) CHECK(Az(1, j) == 0.0);
        if (j != 4) CHECK(Az(4, j) == 0.0);
        if (j != 3 && j != 0) CHECK(Az(3, j) == 0.0);
    }
    CHECK(Az(3, 0) == 0.0);  // H2 = 0 at the base state
}

TEST_CASE("right eigenvector closed forms") {
    const Mat Rz = right_eigenvectors(h10_params(), State{}, Variant::mhd_h1_zero);
    CHECK(Rz(0, 0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(Rz(1, 0) == 0.0);
    CHECK(Rz(2, 0) == 1.0);
    CHECK(Rz(3, 0) == 0.0);
    CHECK(Rz(4, 0) == 0.0);

    const Mat Re = right_eigenvectors(defaults(), State{}, Variant::euler);
    CHECK(Re(0, 0) == 1.0);
    CHECK(Re(2, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));

    // r1's second entry vanishes linearly in H2: Richardson-extrapolate the
    // ratio (C_f^2 - c^2)/H2^2 from H2 = 1e-3, 1e-4, 1e-5 as the series oracle
    GasParams p = defaults();
    const auto ratio_direct = [&](double h2) {
        State s;
        s.H2 = h2;
        const WaveSpeeds ws = wave_speeds(p, s);
        const double c = sound_speed(p, s);
        return (ws.cf * ws.cf - c * c) / (h2 * h2);
    };
    const double g3 = ratio_direct(1e-3), g4 = ratio_direct(1e-4), g5 = ratio_direct(1e-5);
    const double g_extrap = g4 + (g5 - g4) * (1.0 / (1.0 - 1e-2));  // leading O(H2^2) removed
    CHECK(std::fabs(g3 - g4) < 1e-5);
    State tiny;
    tiny.H2 = 1e-8;
    const Mat Rm = right_eigenvectors(p, tiny, Variant::mhd_h1_nonzero);
    const double K = std::fabs(g_extrap) * p.H1 / 2.0 + 1.0;
    CHECK(std::fabs(Rm(1, 0)) <= K * 1e-8);

    State outside;
    outside.u1 = 0.3;
    CHECK_THROWS_AS(right_eigenvectors(p, outside, Variant::mhd_h1_nonzero), std::domain_error);
}

TEST_CASE("regularized ratio matches the direct one away from zero") {
    GasParams p = defaults();
    State s;
    s.H2 = 1e-2;
    const WaveSpeeds ws = wave_speeds(p, s);
    const double c = sound_speed(p, s);
    const double direct = (ws.cf * ws.cf - c * c) / (s.H2 * s.H2);
    CHECK(cf2_minus_c2_over_h2sq(p, s) == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("left eigenvectors are dual") {
    const Mat Le = left_eigenvectors(defaults(), State{}, Variant::euler);
    CHECK(Le(2, 0) == 0.0);
    CHECK(Le(2, 1) == 0.0);
    CHECK(Le(2, 2) == 0.0);
    CHECK(Le(2, 3) == doctest::Approx(-0.5));  // -rho/gamma at the base state

    std::mt19937_64 rng(11);
    GasParams p = defaults();
    double worst = 0.0;
    for (int it = 0; it < 100; ++it) {
        const State s = random_state(rng, p.delta_ball, Variant::mhd_h1_nonzero);
        const Eigensystem e = make_eigensystem(p, s, Variant::mhd_h1_nonzero);
        worst = std::max(worst, duality_error(e.L, e.R));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("residuals and duality over the ball, all variants") {
    std::mt19937_64 rng(3);
    for (Variant v : {Variant::mhd_h1_nonzero, Variant::mhd_h1_zero, Variant::euler}) {
        GasParams p = v == Variant::mhd_h1_nonzero ? defaults() : h10_params();
        double wr = 0.0, wd = 0.0;
        for (int it = 0; it < 1000; ++it) {
            const State s = random_state(rng, p.delta_ball, v);
            const Eigensystem e = make_eigensystem(p, s, v);
            wr = std::max(wr, eigen_residual(assemble_matrix(p, s, v), e.lambdas, e.R));
            wd = std::max(wd, duality_error(e.L, e.R));
            for (int k = 0; k + 1 < e.n; ++k) CHECK(e.lambdas[k] >= e.lambdas[k + 1]);
        }
        CHECK(wr <= 1e-10);
        CHECK(wd <= 1e-10);
    }
}

TEST_CASE("continuity of the regularized eigenvectors through H2 = 0") {
    GasParams p = defaults();
    State zero;
    zero.u1 = 0.01;
    zero.S = -0.02;
    const Mat R0 = right_eigenvectors(p, zero, Variant::mhd_h1_nonzero);
    Mat prev;
    for (int k = 2; k <= 8; ++k) {
        State s = zero;
        s.H2 = std::pow(10.0, -k);
        const Mat R = right_eigenvectors(p, s, Variant::mhd_h1_nonzero);
        // columns 1 and 5 carry the regularized ratios; they converge
        // linearly in H2, so the increments shrink tenfold per step and the
        // tail of the sequence is Cauchy within 1e-6
        for (int i = 0; i < 5; ++i) {
            CHECK(std::fabs(R(i, 0) - R0(i, 0)) < 1.0 * s.H2 + 1e-12);
            CHECK(std::fabs(R(i, 4) - R0(i, 4)) < 1.0 * s.H2 + 1e-12);
            if (k > 6) {
                CHECK(std::fabs(R(i, 0) - prev(i, 0)) < 1e-6);
                CHECK(std::fabs(R(i, 4) - prev(i, 4)) < 1e-6);
            }
        }
        prev = R;
    }
    const Eigensystem e = make_eigensystem(p, zero, Variant::mhd_h1_nonzero);
    CHECK(duality_error(e.L, e.R) <= 1e-10);
    CHECK(eigen_residual(assemble_matrix(p, zero, Variant::mhd_h1_nonzero), e.lambdas, e.R) <=
          1e-10);
}

TEST_CASE("planar vorticity rides on the second family alone") {
    // u2-row of R is the second unit row, so d_x u2 = w_2 exactly
    std::mt19937_64 rng(13);
    GasParams p = defaults();
    for (int it = 0; it < 50; ++it) {
        const State s = random_state(rng, p.delta_ball, Variant::euler);
        const Mat R = right_eigenvectors(p, s, Variant::euler);
        for (int k = 0; k < 4; ++k) CHECK(R(1, k) == (k == 1 ? 1.0 : 0.0));
    }
}
