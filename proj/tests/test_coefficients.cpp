#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "shocklab/coefficients.hpp"

using namespace shocklab;

namespace {

GasParams h10() {
    GasParams p;
    p.H1 = 0.0;
    return p;
}

}  // namespace

TEST_CASE("gradient of the first wave speed") {
    GasParams p;
    p.H1 = 1e-6;  // strictly hyperbolic branch near its H1 -> 0 limit
    const Vec g = grad_lambda(p, State{}, Variant::mhd_h1_nonzero, 0);
    CHECK(g[0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(g[1] == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(g[2] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-6));
    CHECK(std::fabs(g[3]) < 1e-6);
    CHECK(g[4] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-6));

    // middle speeds equal u1, so their gradient is the first unit vector
    GasParams pd;
    const Vec gm = grad_lambda(pd, State{}, Variant::mhd_h1_nonzero, 2);
    CHECK(gm[0] == doctest::Approx(1.0).epsilon(1e-10));
    for (int j = 1; j < 5; ++j) CHECK(std::fabs(gm[j]) < 1e-10);

    // Euler: d(lambda_1)/d(rho) = (gamma-1) sqrt(A gamma) / 2 by the
    // finite-difference oracle on the sound speed
    const Vec ge = grad_lambda(GasParams{}, State{}, Variant::euler, 0);
    const double h = 1e-6;
    const auto c_of_rho = [&](double rho) { return std::sqrt(2.0 * rho); };
    const double want = (c_of_rho(1.0 + h) - c_of_rho(1.0 - h)) / (2.0 * h);
    CHECK(ge[2] == doctest::Approx(want).epsilon(1e-8));
    CHECK(ge[2] == doctest::Approx((2.0 - 1.0) * std::sqrt(2.0) / 2.0).epsilon(1e-6));
}

TEST_CASE("genuine nonlinearity constants") {
    GasParams p_lim;
    p_lim.H1 = 1e-6;
    const CoeffTable t_lim = coeff_table(p_lim, State{}, Variant::mhd_h1_nonzero);
    CHECK(t_lim.c[0][0] == doctest::Approx(1.5).epsilon(1e-4));

    const CoeffTable t0 = coeff_table(h10(), State{}, Variant::mhd_h1_zero);
    CHECK(t0.c[0][0] == doctest::Approx(3.0 * std::sqrt(2.0) / 2.0).epsilon(1e-4));

    // c^2_{23} = 0: grad(lambda_2) = e_1 and r_3 has zero first entry
    CHECK(std::fabs(t0.c[1][2]) < 1e-12);

    // the Euler finite-difference value is (gamma+1)/2, not the gamma of the
    // closed-form display; both facts are asserted so the discrepancy stays
    // visible
    const CoeffTable te = coeff_table(GasParams{}, State{}, Variant::euler);
    CHECK(te.c[0][0] == doctest::Approx(1.5).epsilon(1e-4));
    CHECK(std::fabs(te.c[0][0] - 2.0) > 1e-3);
}

TEST_CASE("step-halving consistency") {
    GasParams p;
    State s;
    s.u1 = 0.02;
    s.H2 = 0.01;
    s.S = -0.03;
    const CoeffTable a = coeff_table(p, s, Variant::mhd_h1_nonzero, 1e-6);
    const CoeffTable b = coeff_table(p, s, Variant::mhd_h1_nonzero, 0.5e-6);
    CHECK(CoeffTable::max_diff(a, b) < 1e-5);
    CHECK_NOTHROW(coeff_table_checked(p, s, Variant::mhd_h1_nonzero));

    const CoeffTable e1 = coeff_table(GasParams{}, State{}, Variant::euler, 1e-6);
    const CoeffTable e2 = coeff_table(GasParams{}, State{}, Variant::euler, 0.5e-6);
    CHECK(CoeffTable::max_diff(e1, e2) < 1e-5);
    double mx = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int m = 0; m < 4; ++m) mx = std::max(mx, std::fabs(e1.gam_km[i][k][m]));
    CHECK(std::isfinite(mx));
    CHECK(mx < 1e6);
}

TEST_CASE("structural zeros of the degenerate variants") {
    const CoeffTable tz = coeff_table(h10(), State{}, Variant::mhd_h1_zero);
    for (int i = 1; i <= 3; ++i)
        for (int m = 1; m <= 3; ++m) {
            CHECK(std::fabs(tz.c[i][m]) <= 1e-9);
            if (m != i) CHECK(std::fabs(tz.gam_im[i][m]) <= 1e-9);
        }
    for (int i = 0; i < 5; ++i)
        for (int k = 1; k <= 3; ++k)
            for (int m = 1; m <= 3; ++m)
                if (k != m && k != i && m != i) CHECK(std::fabs(tz.gam_km[i][k][m]) <= 1e-9);

    State s;
    s.u1 = 0.04;
    s.H2 = -0.03;
    s.rho_m1 = 0.05;
    const CoeffTable tz2 = coeff_table(h10(), s, Variant::mhd_h1_zero);
    for (int i = 1; i <= 3; ++i)
        for (int m = 1; m <= 3; ++m) CHECK(std::fabs(tz2.c[i][m]) <= 1e-9);

    const CoeffTable te = coeff_table(GasParams{}, State{}, Variant::euler);
    for (int i = 1; i <= 2; ++i)
        for (int m = 1; m <= 2; ++m) {
            CHECK(std::fabs(te.c[i][m]) <= 1e-9);
            if (m != i) CHECK(std::fabs(te.gam_im[i][m]) <= 1e-9);
        }
}

TEST_CASE("boundedness scan") {
    const ScanReport center = boundedness_scan(GasParams{}, Variant::euler, 1);
    CHECK(center.pass);
    CHECK(center.points == 1);
    const CoeffTable t0 = coeff_table(GasParams{}, State{}, Variant::euler);
    CHECK(center.Gamma == doctest::Approx(t0.max_abs()).epsilon(1e-6));

    const ScanReport g3 = boundedness_scan(GasParams{}, Variant::euler, 3);
    CHECK(g3.pass);
    CHECK(g3.Gamma >= center.Gamma);
    CHECK(g3.Gamma < 1e6);

    // near-degenerate H2 slice stays finite after regularization
    const ScanReport m3 = boundedness_scan(GasParams{}, Variant::mhd_h1_nonzero, 3);
    CHECK(m3.pass);
    CHECK(m3.points == 3 * 3 * 3 * 3 * (3 + 4));  // lattice plus the extra H2 slice values
}

TEST_CASE("genuine nonlinearity over the lattice") {
    const GenuineNonlinearity ge = genuine_nonlinearity_check(GasParams{}, Variant::euler, 3);
    CHECK(ge.pass);
    CHECK(ge.c111_at_zero == doctest::Approx(1.5).epsilon(1e-4));
    CHECK(ge.min_over_lattice > 0.0);

    const GenuineNonlinearity gz = genuine_nonlinearity_check(h10(), Variant::mhd_h1_zero, 3);
    CHECK(gz.pass);
    CHECK(gz.c111_at_zero == doctest::Approx(3.0 * std::sqrt(2.0) / 2.0).epsilon(1e-4));
}

TEST_CASE("linear coefficient model tracks the tables") {
    GasParams p;
    const CoeffModel model = make_coeff_model(p, Variant::mhd_h1_nonzero);
    CHECK(model.base.c[0][0] == doctest::Approx(1.5).epsilon(2e-3));

    State s;
    s.u1 = 1e-3;
    s.rho_m1 = -2e-3;
    s.H2 = 1e-3;
    s.S = 2e-3;
    const CoeffTable exact = coeff_table(p, s, Variant::mhd_h1_nonzero);
    CoeffModel::Rows rows;
    const Vec phi = state_to_vec(s, Variant::mhd_h1_nonzero);
    for (int fam = 0; fam < 5; ++fam) {
        model.eval_rows(phi, fam, rows);
        for (int m = 0; m < 5; ++m) {
            CHECK(rows.cim[m] == doctest::Approx(exact.c[fam][m]).epsilon(1e-4).scale(1.0));
            if (m != fam)
                CHECK(rows.gim[m] ==
                      doctest::Approx(exact.gam_im[fam][m]).epsilon(1e-4).scale(1.0));
        }
    }
    CHECK(model.c111(phi) == doctest::Approx(exact.c[0][0]).epsilon(1e-5));
}

TEST_CASE("finite differences near the ball boundary shrink the step") {
    GasParams p;
    State s;
    s.u1 = 2.0 * p.delta_ball * (1.0 - 1e-3);
    CHECK_NOTHROW(grad_lambda(p, s, Variant::mhd_h1_nonzero, 0));
}
