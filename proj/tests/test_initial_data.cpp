#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "shocklab/eigensystem.hpp"
#include "shocklab/initial_data.hpp"

using namespace shocklab;

TEST_CASE("parameter admissibility") {
    DataParams ok;
    CHECK_NOTHROW(ok.validate());

    DataParams bad = ok;
    bad.delta_log = 1.0;  // 2*1 + 1*(1 - 2) = 1 > 0
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.m = 0.2;
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.theta = 0.2;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("cutoff plateaus and supports are machine exact") {
    const CutoffPair cut = make_cutoffs();
    CHECK(cut.chi(1.5) == 1.0);
    CHECK(cut.chi(1.2) == 1.0);
    CHECK(cut.chi(1.8) == 1.0);
    CHECK(cut.chi(0.99) == 0.0);
    CHECK(cut.chi(1.0) == 0.0);
    CHECK(cut.chi(2.0) == 0.0);
    CHECK(cut.chi(2.01) == 0.0);
    CHECK(cut.chi(1.1) > 0.0);
    CHECK(cut.chi(1.1) < 1.0);

    CHECK(cut.psi(0.0) == 1.0);
    CHECK(cut.psi(1.0 / 3.0) == 1.0);
    CHECK(cut.psi(-0.3) == 1.0);
    CHECK(cut.psi(2.0 / 3.0) == 0.0);
    CHECK(cut.psi(0.7) == 0.0);
    CHECK(cut.psi(0.5) > 0.0);
    CHECK(cut.psi(0.5) < 1.0);

    // monotone decreasing across the falling flank
    double prev = 1.0;
    for (int i = 1; i <= 32; ++i) {
        const double y = 1.0 / 3.0 + (i / 32.0) / 3.0;
        const double v = cut.psi(y);
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("cutoffs are smooth at the sampling resolution") {
    // finite-difference derivatives up to order 4 stay bounded, and their
    // sample-to-sample jumps shrink with the grid (a genuine discontinuity
    // would keep an O(1) jump under refinement)
    const CutoffPair cut = make_cutoffs();
    const auto jump_profile = [&](double h, int order, double& max_val) {
        std::vector<double> f;
        for (double x = 0.9; x <= 2.1; x += h) f.push_back(cut.chi(x));
        for (int o = 0; o < order; ++o) {
            std::vector<double> d(f.size() - 2);
            for (size_t i = 1; i + 1 < f.size(); ++i)
                d[i - 1] = (f[i + 1] - f[i - 1]) / (2.0 * h);
            f.swap(d);
        }
        max_val = 0.0;
        double jump = 0.0;
        for (size_t i = 0; i < f.size(); ++i) {
            max_val = std::max(max_val, std::fabs(f[i]));
            if (i) jump = std::max(jump, std::fabs(f[i] - f[i - 1]));
        }
        return jump;
    };
    double bound = 1e5;  // grows with each derivative of the flank profile
    for (int order = 1; order <= 4; ++order) {
        double mx_h = 0.0, mx_h4 = 0.0;
        const double j_h = jump_profile(1e-3, order, mx_h);
        const double j_h4 = jump_profile(0.25e-3, order, mx_h4);
        CHECK(mx_h < bound);
        CHECK(mx_h4 < 1.3 * bound);
        CHECK(j_h4 < 0.6 * j_h);
        bound *= 1e3;
    }
}

TEST_CASE("first-family datum") {
    DataParams dp;
    dp.eta = 1e-3;
    CHECK(w1_hat(dp, 0.5 * dp.eta, 0.0) == 0.0);
    CHECK(w1_hat(dp, 2.5 * dp.eta, 0.0) == 0.0);
    CHECK(w1_hat(dp, dp.eta, 0.0) == 0.0);

    const double x = 1.5 * dp.eta;
    CHECK(w1_hat(dp, x, 0.0) ==
          doctest::Approx(-dp.theta * std::pow(std::fabs(std::log(x)), dp.alpha)));
    CHECK(w1_hat(dp, x, 10.0 * dp.y_max(x)) == 0.0);

    // never positive, supported in the stated slab
    for (int i = 0; i <= 200; ++i) {
        const double xx = dp.eta * (0.8 + 1.6 * i / 200.0);
        for (int j = -3; j <= 3; ++j) {
            const double yy = j * dp.y_max(2.0 * dp.eta) / 2.0;
            const double v = w1_hat(dp, xx, yy);
            CHECK(v <= 0.0);
            if (v != 0.0) {
                CHECK(xx > dp.eta);
                CHECK(xx < 2.0 * dp.eta);
                CHECK(std::fabs(yy) <= dp.y_max(xx) * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("other-family datum and the amplitude hierarchy") {
    DataParams dp;
    dp.eta = 1e-3;
    const double x = 1.5 * dp.eta;
    CHECK(wk_hat(dp, x, 0.0) == doctest::Approx(-dp.theta * dp.theta));
    CHECK(wk_hat(dp, dp.eta * (1.0 - 1e-9), 0.0) == 0.0);

    const double ratio = std::fabs(wk_hat(dp, x, 0.0) / w1_hat(dp, x, 0.0));
    CHECK(ratio == doctest::Approx(dp.theta / std::pow(std::fabs(std::log(x)), dp.alpha)));
    CHECK(ratio < 1.0);

    // the hierarchy sharpens as eta -> 0
    DataParams dp2 = dp;
    dp2.eta = 1e-5;
    const double r2 = std::fabs(wk_hat(dp2, 1.5e-5, 0.0) / w1_hat(dp2, 1.5e-5, 0.0));
    CHECK(r2 < ratio);
}

TEST_CASE("peak amplitude and its location") {
    DataParams dp;
    dp.eta = 1e-3;
    const W0Result r = w0_amplitude(dp);

    // brute-force oracle on a dense grid
    double best = 0.0, zb = 0.0;
    for (int i = 0; i <= 100000; ++i) {
        const double z = dp.eta + dp.eta * i / 100000.0;
        const double v = -w1_hat(dp, z, 0.0);
        if (v > best) {
            best = v;
            zb = z;
        }
    }
    CHECK(r.W0 == doctest::Approx(best).epsilon(1e-10));
    CHECK(std::fabs(r.z0 - zb) < 2e-5 * dp.eta + 1e-12);

    // plateau lower bound and the near-left-edge maximizer
    CHECK(r.W0 >= dp.theta * std::pow(std::fabs(std::log(1.5 * dp.eta)), dp.alpha));
    CHECK(r.z0 < 1.25 * dp.eta);
    CHECK(r.z0 > 1.1 * dp.eta);
    CHECK(r.W0 == doctest::Approx(dp.theta * std::pow(std::fabs(std::log(1.2 * dp.eta)),
                                                      dp.alpha))
                      .epsilon(2e-2));
}

TEST_CASE("state reconstruction") {
    GasParams p;
    DataParams dp;
    dp.eta = std::pow(2.0, -6);
    dp.theta = 0.02;

    const int M = 2049;
    std::vector<double> xs(M);
    for (int i = 0; i < M; ++i) xs[i] = 0.4 * dp.eta + 2.4 * dp.eta * i / (M - 1.0);

    SUBCASE("zero data gives the zero state") {
        DataParams z = dp;
        z.theta = 1e-300;
        const Phi0Slice sl = reconstruct_phi0(p, z, Variant::euler, 0.0, xs);
        for (const Vec& q : sl.phi) CHECK(q.linf() < 1e-290);
    }

    SUBCASE("support starts at eta and the amplitude scales like eta W0") {
        const Phi0Slice sl = reconstruct_phi0(p, dp, Variant::euler, 0.0, xs);
        double sup = 0.0;
        for (int i = 0; i < M; ++i) {
            if (xs[i] <= dp.eta) CHECK(sl.phi[i].linf() <= 1e-12);
            sup = std::max(sup, sl.phi[i].linf());
        }
        const double W0 = w0_amplitude(dp).W0;
        CHECK(sup <= 1.5 * dp.eta * W0);
        CHECK(sup >= 0.2 * dp.eta * W0);
    }

    SUBCASE("planar within the central x2 plateau") {
        const Phi0Slice a = reconstruct_phi0(p, dp, Variant::euler, 0.0, xs);
        const double y_small = 0.25 * dp.y_max(dp.eta);
        const Phi0Slice b = reconstruct_phi0(p, dp, Variant::euler, y_small, xs);
        for (int i = 0; i < M; ++i)
            for (int c = 0; c < 4; ++c)
                CHECK(a.phi[i][c] == doctest::Approx(b.phi[i][c]).epsilon(1e-12).scale(1e-6));
    }

    SUBCASE("integration step halving leaves the profile unchanged") {
        const Phi0Slice a = reconstruct_phi0(p, dp, Variant::euler, 0.0, xs, 1.0 / 2000.0);
        const Phi0Slice b = reconstruct_phi0(p, dp, Variant::euler, 0.0, xs, 1.0 / 4000.0);
        double diff = 0.0;
        for (int i = 0; i < M; ++i)
            for (int c = 0; c < 4; ++c)
                diff = std::max(diff, std::fabs(a.phi[i][c] - b.phi[i][c]));
        CHECK(diff <= 1e-9);
    }

    SUBCASE("round trip recovers the prescribed data") {
        // denser grid for the derivative stencil
        const int Mf = 8193;
        std::vector<double> xf(Mf);
        const double xlo = 0.5 * dp.eta, xhi = 2.5 * dp.eta;
        for (int i = 0; i < Mf; ++i) xf[i] = xlo + (xhi - xlo) * i / (Mf - 1.0);
        const double h = xf[1] - xf[0];
        const Phi0Slice sl = reconstruct_phi0(p, dp, Variant::euler, 0.0, xf, 1.0 / 4096.0);

        double err = 0.0, sup_w = 0.0;
        for (int pt = 0; pt < 100; ++pt) {
            const int i = 2 + static_cast<int>((Mf - 5) * (pt + 0.5) / 100.0);
            Vec dphi(4);
            for (int c = 0; c < 4; ++c)
                dphi[c] = (-sl.phi[i + 2][c] + 8 * sl.phi[i + 1][c] - 8 * sl.phi[i - 1][c] +
                           sl.phi[i - 2][c]) /
                          (12.0 * h);
            Vec lam;
            Mat R, L;
            eig_from_vec(p, sl.phi[i], Variant::euler, lam, R, L);
            const double w1 = w1_hat(dp, xf[i], 0.0);
            sup_w = std::max(sup_w, std::fabs(w1));
            err = std::max(err, std::fabs(dot(L.row(0), dphi) - w1));
        }
        CHECK(err / sup_w <= 1e-6);
    }
}

TEST_CASE("amplitude constant is stable across the support scale") {
    GasParams p;
    DataParams dp;
    std::vector<double> Ks;
    for (int k = 5; k <= 12; ++k) {
        DataParams d = dp;
        d.eta = std::pow(2.0, -k);
        const int M = 1025;
        std::vector<double> xs(M);
        for (int i = 0; i < M; ++i) xs[i] = 0.5 * d.eta + 2.0 * d.eta * i / (M - 1.0);
        const Phi0Slice sl = reconstruct_phi0(p, d, Variant::euler, 0.0, xs);
        double sup = 0.0;
        for (const Vec& q : sl.phi) sup = std::max(sup, q.linf());
        Ks.push_back(sup / (d.eta * w0_amplitude(d).W0));
    }
    double kmin = Ks[0], kmax = Ks[0];
    for (double k : Ks) {
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
    }
    CHECK(kmax / kmin <= 1.5);  // within +-20% of the midpoint
}
