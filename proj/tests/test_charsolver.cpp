#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "shocklab/charsolver.hpp"
#include "shocklab/diagnostics.hpp"

using namespace shocklab;

namespace {

SimConfig cheap_config() {
    SimConfig cfg;
    cfg.nx = 256;
    cfg.nz = 512;
    cfg.bundle_stride = 16;
    cfg.snapshot_count = 64;
    return cfg;
}

DataParams cheap_family() {
    DataParams dp;
    dp.theta = 0.05;
    dp.eta = std::pow(2.0, -5);
    return dp;
}

}  // namespace

TEST_CASE("constant states are preserved to machine precision") {
    const HyperbolicSystem sys = HyperbolicSystem::gas_system(GasParams{}, Variant::euler);
    FieldState fs;
    fs.nx = 64;
    fs.n = 4;
    fs.x_lo = 0.0;
    fs.x_hi = 1.0;
    fs.phi.resize(64 * 4);
    for (int i = 0; i < 64; ++i) {
        fs.cell(i)[0] = 0.01;
        fs.cell(i)[1] = -0.02;
        fs.cell(i)[2] = 0.03;
        fs.cell(i)[3] = 0.02;
    }
    const std::vector<double> before = fs.phi;
    for (int s = 0; s < 50; ++s) step_field(sys, fs, 1e-3, Limiter::eno2);
    for (size_t i = 0; i < fs.phi.size(); ++i)
        CHECK(std::fabs(fs.phi[i] - before[i]) < 1e-15);
}

TEST_CASE("small pulses translate at the frozen-state speeds") {
    const HyperbolicSystem sys = HyperbolicSystem::gas_system(GasParams{}, Variant::euler);
    const double c0 = std::sqrt(2.0);
    const double amp = 1e-6;  // linear regime
    const int nx = 512;

    for (int family : {0, 3}) {
        FieldState fs;
        fs.nx = nx;
        fs.n = 4;
        fs.x_lo = -1.0;
        fs.x_hi = 1.0;
        fs.phi.assign(static_cast<size_t>(nx) * 4, 0.0);
        Vec lam;
        Mat R, L;
        sys.eig(Vec(4), lam, R, L);
        const auto bump = [](double x) {
            return std::fabs(x) < 0.25 ? std::pow(std::cos(2.0 * M_PI * x), 2) : 0.0;
        };
        for (int i = 0; i < nx; ++i) {
            const double x = fs.cell_center(i);
            for (int c = 0; c < 4; ++c) fs.cell(i)[c] = amp * bump(x + 0.4 * lam[family] / c0) * R(c, family);
        }
        const std::vector<double> init = fs.phi;

        const double T = 0.4 / c0;  // carries the pulse to the origin
        const double dt = 0.4 * fs.dx() / (2.0 * c0);
        double t = 0.0;
        while (t < T) {
            const double step = std::min(dt, T - t);
            step_field(sys, fs, step, Limiter::eno2);
            t += step;
        }
        // compare against the exact translate of the initial pulse
        double err_l1 = 0.0, ref_l1 = 0.0;
        for (int i = 0; i < nx; ++i) {
            const double x = fs.cell_center(i);
            for (int c = 0; c < 4; ++c) {
                const double exact = amp * bump(x + 0.4 * lam[family] / c0 - lam[family] * T) * R(c, family);
                err_l1 += std::fabs(fs.cell(i)[c] - exact);
                ref_l1 += std::fabs(exact);
            }
        }
        CHECK(err_l1 / ref_l1 < 0.01);
    }
}

TEST_CASE("total variation stays controlled on smooth data") {
    const HyperbolicSystem sys = HyperbolicSystem::gas_system(GasParams{}, Variant::euler);
    FieldState fs;
    fs.nx = 512;
    fs.n = 4;
    fs.x_lo = -1.0;
    fs.x_hi = 1.0;
    fs.phi.assign(512 * 4, 0.0);
    for (int i = 0; i < 512; ++i) {
        const double x = fs.cell_center(i);
        fs.cell(i)[0] = 1e-3 * std::exp(-50.0 * x * x);
        fs.cell(i)[2] = 1e-3 * std::exp(-50.0 * x * x);
    }
    const double dt = 0.4 * fs.dx() / (2.0 * std::sqrt(2.0));
    double tv = fs.total_variation();
    for (int s = 0; s < 200; ++s) {
        step_field(sys, fs, dt, Limiter::eno2);
        const double tv2 = fs.total_variation();
        CHECK((tv2 - tv) / tv <= 1e-3);
        tv = tv2;
    }
}

TEST_CASE("zero-data bundles ride the frozen characteristics") {
    const HyperbolicSystem sys = HyperbolicSystem::gas_system(GasParams{}, Variant::euler);
    FieldState fs;
    fs.nx = 128;
    fs.n = 4;
    fs.x_lo = -1.0;
    fs.x_hi = 1.0;
    fs.phi.assign(128 * 4, 0.0);
    FieldSnapshot snap;
    build_snapshot(sys, fs, snap);

    CharBundle cb = make_bundle(0, -0.5, -0.25, 65, [](double) { return 0.0; });
    const double dt = 0.01;
    for (int s = 0; s < 20; ++s) advance_bundle(sys, cb, snap, dt, true);
    const double c0 = std::sqrt(2.0);
    for (size_t k = 0; k < cb.z.size(); ++k) {
        CHECK(cb.X[k] == doctest::Approx(cb.z[k] + c0 * 0.2).epsilon(1e-12));
        CHECK(cb.rho[k] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(cb.v[k] == 0.0);
    }
}

TEST_CASE("scalar convex-flux oracle hits the analytic crossing time") {
    SimConfig cfg;
    cfg.nx = 4096;
    cfg.nz = 1024;
    const double theta = 0.05;
    const SimResult res = run_scalar_oracle(theta, cfg);
    CHECK(res.report.T_star == doctest::Approx(1.0 / theta).epsilon(0.02));
    CHECK(res.report.agreement <= 0.02);
    CHECK(res.report.method == "rho_vanish");

    // the trigger fires just below rho_stop, with |w| amplified accordingly
    CHECK(res.report.rho_min_final <= 1e-2);
    CHECK(res.series.back().max_w1 >= 0.9 * theta / 1e-2);
}

TEST_CASE("family run at desk scale") {
    const GasParams p;
    const DataParams dp = cheap_family();
    const SimConfig cfg = cheap_config();
    const SimResult res = run_family_simulation(p, dp, Variant::euler, cfg);
    const ShockReport& r = res.report;

    SUBCASE("shock time lands in the bracket with both detectors agreeing") {
        CHECK(r.bracket_pass);
        CHECK(r.T_lo <= r.T_star);
        CHECK(r.T_star <= r.T_hi);
        CHECK(r.agreement <= 0.02);
        CHECK(r.method == "rho_vanish");
        CHECK(r.c111_0 == doctest::Approx(1.5).epsilon(1e-3));
        // blow-up label sits near the peak of the datum
        CHECK(r.z_star == doctest::Approx(res.z0).epsilon(0.05));
    }

    SUBCASE("the first family compresses while the others stay near unity") {
        CHECK(r.rho_min_final <= cfg.rho_stop);
        for (size_t b = 1; b < res.bundles.size(); ++b)
            CHECK(res.bundles[b].min_rho() >= 0.9);
        // w1 = v1/rho1 is amplified by the compression
        double max_w1 = 0.0;
        for (const auto& ts : res.series) max_w1 = std::max(max_w1, ts.max_w1);
        CHECK(max_w1 >= 1e2 * res.W0);
    }

    SUBCASE("non-dominant amplitudes and the exterior stay quadratically small") {
        double max_w_other = 0.0, ext = 0.0;
        for (const auto& ts : res.series) {
            max_w_other = std::max(max_w_other, ts.max_w_other);
            ext = std::max(ext, ts.ext_w1);
        }
        CHECK(max_w_other <= 2.0 * res.W0 * res.W0);
        CHECK(ext <= 2.0 * dp.eta * res.W0 * res.W0);
    }

    SUBCASE("state stays small and variation growth is tame") {
        double sup = 0.0;
        for (const auto& ts : res.series) sup = std::max(sup, ts.sup_phi);
        CHECK(sup <= 2.0 * dp.eta * res.W0);
        CHECK(res.max_tv_growth <= 1e-3);
    }

    SUBCASE("characteristic intersections are self-consistent") {
        const auto hit = char_intersection(res, 0, 1.2 * dp.eta, 3, 1.8 * dp.eta);
        REQUIRE(hit.has_value());
        CHECK(hit->second > 0.0);
        CHECK(hit->second < res.report.T_star);
        // both trajectories pass within a cell of the reported crossing
        const auto& snaps = res.snapshots;
        size_t best = 0;
        for (size_t k = 0; k < snaps.size(); ++k)
            if (std::fabs(snaps[k].t - hit->second) < std::fabs(snaps[best].t - hit->second))
                best = k;
        const double dx_cell = (res.snapshots[0].field_x[1] - res.snapshots[0].field_x[0]);
        CHECK(std::fabs(snaps[best].t - hit->second) <=
              (snaps.size() > 1 ? snaps[1].t - snaps[0].t : 1.0) + 1e-12);
        (void)dx_cell;
    }
}

TEST_CASE("halving the amplitude doubles the crossing time") {
    const GasParams p;
    DataParams dp = cheap_family();
    const SimConfig cfg = cheap_config();
    const double T1 = run_family_simulation(p, dp, Variant::euler, cfg).report.T_star;
    dp.theta *= 0.5;
    const double T2 = run_family_simulation(p, dp, Variant::euler, cfg).report.T_star;
    CHECK(T2 / T1 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("strip separation time") {
    GasParams p;
    const double eta = std::pow(2.0, -8);

    SUBCASE("gas-dynamics grouping on the default ball") {
        const double t0 = separation_time(p, Variant::euler, eta, p.delta_ball);
        // sigma ~ c - O(delta): the gap of the grouped {1}, {2,3}, {4} strips
        CHECK(t0 > eta / std::sqrt(2.0));
        CHECK(t0 < 1.6 * eta / (std::sqrt(2.0) - 4.0 * p.delta_ball));
        // linear in the support width
        CHECK(separation_time(p, Variant::euler, eta / 2.0, p.delta_ball) ==
              doctest::Approx(t0 / 2.0).epsilon(1e-12));
    }

    SUBCASE("grouped strips for the degenerate field") {
        GasParams p0 = p;
        p0.H1 = 0.0;
        const double t0 = separation_time(p0, Variant::mhd_h1_zero, eta, p0.delta_ball);
        CHECK(t0 > 0.0);
        CHECK(t0 < 2.0 * eta);
    }

    SUBCASE("strictly hyperbolic branch needs a small ball") {
        // over the full default ball the u1 spread swallows the slow-speed gap
        CHECK_THROWS_AS(separation_time(p, Variant::mhd_h1_nonzero, eta, p.delta_ball),
                        std::domain_error);
        const double t0 = separation_time(p, Variant::mhd_h1_nonzero, eta, 1e-3);
        CHECK(t0 > 0.0);
    }
}

TEST_CASE("intersections of exact linear trajectories") {
    // synthetic record: constant-state characteristics of the 4-component gas
    SimResult res;
    const double c0 = std::sqrt(2.0);
    const double eta = 0.01;
    const double lam[4] = {c0, 0.0, 0.0, -c0};
    res.bundles.resize(4);
    const int nz = 33;
    for (int b = 0; b < 4; ++b) {
        auto& cb = res.bundles[b];
        cb.family = b;
        for (int k = 0; k < nz; ++k) cb.z.push_back(eta + eta * k / (nz - 1.0));
    }
    for (int s = 0; s <= 40; ++s) {
        Snapshot sn;
        sn.t = 0.01 * s;
        sn.X.resize(4);
        for (int b = 0; b < 4; ++b)
            for (int k = 0; k < nz; ++k)
                sn.X[b].push_back(res.bundles[b].z[k] + lam[b] * sn.t);
        res.snapshots.push_back(sn);
    }

    // same label, transversal families: they intersect at the origin
    const auto same = char_intersection(res, 0, 1.5 * eta, 3, 1.5 * eta);
    REQUIRE(same.has_value());
    CHECK(same->second == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(same->first == doctest::Approx(1.5 * eta).epsilon(1e-12));

    // first family from eta meets the backward family from 2 eta at eta/(2c)
    const auto cross = char_intersection(res, 0, eta, 3, 2.0 * eta);
    REQUIRE(cross.has_value());
    CHECK(cross->second == doctest::Approx(eta / (2.0 * c0)).epsilon(1e-9));

    // co-moving labels of the same speed never meet
    CHECK(!char_intersection(res, 1, eta, 2, 2.0 * eta).has_value());
    CHECK_THROWS(char_intersection(res, 1, eta, 1, 2.0 * eta));
}

TEST_CASE("runs outside the regime fail loudly") {
    const GasParams p;
    DataParams dp = cheap_family();
    SimConfig cfg = cheap_config();

    SUBCASE("no trigger before T_max") {
        cfg.t_max_factor = 0.05;
        CHECK_THROWS_WITH_AS(run_family_simulation(p, dp, Variant::euler, cfg),
                             doctest::Contains("no shock"), std::runtime_error);
    }

    SUBCASE("state escaping the admissible ball aborts with a time stamp") {
        GasParams tiny = p;
        tiny.delta_ball = 2e-4;  // the data family overflows this ball
        CHECK_THROWS_WITH_AS(run_family_simulation(tiny, dp, Variant::euler, cfg),
                             doctest::Contains("ball"), std::runtime_error);
    }
}
