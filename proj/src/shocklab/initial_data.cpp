#include "shocklab/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shocklab/eigensystem.hpp"
#include "shocklab/numerics.hpp"

namespace shocklab {

void DataParams::validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("data.alpha must be > 0");
    if (!(delta_log > 0.0)) throw std::invalid_argument("data.delta_log must be > 0");
    if (!(m > 0.25 && m <= 0.5))
        throw std::invalid_argument("data.m must satisfy 1/4 < m <= 1/2");
    if (!(2.0 * alpha + delta_log * (1.0 - 1.0 / m) < 0.0))
        throw std::invalid_argument("data parameters violate 2*alpha + delta*(1 - 1/m) < 0");
    if (!(theta > 0.0 && theta <= 0.05))
        throw std::invalid_argument("data.theta must be in (0, 0.05]");
    if (!(eta > 0.0 && eta < 0.25)) throw std::invalid_argument("data.eta must be in (0, 1/4)");
}

double DataParams::y_max(double x) const {
    const double lx = std::fabs(std::log(x));
    return std::pow(2.0 / 3.0, 1.0 / (2.0 * m)) * std::sqrt(x) * std::pow(lx, -delta_log / (2.0 * m));
}

namespace {

double bump(double u) {
    if (std::fabs(u) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

// fixed 96-node Gauss-Legendre rule; the integrand vanishes to all orders at
// the endpoints, so the rule converges to machine precision
const GaussLegendre& gl96() {
    static const GaussLegendre gl(96);
    return gl;
}

double bump_integral_upto(double upper) {
    const auto& gl = gl96();
    const double half = 0.5 * (upper + 1.0);
    double s = 0.0;
    for (size_t i = 0; i < gl.x.size(); ++i)
        s += gl.w[i] * bump(-1.0 + half * (gl.x[i] + 1.0));
    return half * s;
}

double bump_total() {
    static const double total = bump_integral_upto(1.0);
    return total;
}

}  // namespace

double smoothstep01(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return bump_integral_upto(2.0 * t - 1.0) / bump_total();
}

double CutoffPair::chi(double x) const {
    if (x <= 1.0 || x >= 2.0) return 0.0;
    if (x >= 1.2 && x <= 1.8) return 1.0;
    if (x < 1.2) return smoothstep01((x - 1.0) / 0.2);
    return smoothstep01((2.0 - x) / 0.2);
}

double CutoffPair::psi(double y) const {
    const double ay = std::fabs(y);
    if (ay <= 1.0 / 3.0) return 1.0;
    if (ay >= 2.0 / 3.0) return 0.0;
    return smoothstep01((2.0 / 3.0 - ay) * 3.0);
}

CutoffPair make_cutoffs() { return CutoffPair{}; }

double w1_hat(const DataParams& dp, double x, double x2) {
    if (x <= dp.eta || x >= 2.0 * dp.eta) return 0.0;
    static const CutoffPair cut;
    const double cx = cut.chi(x / dp.eta);
    if (cx == 0.0) return 0.0;
    const double lx = std::fabs(std::log(x));
    const double arg = std::pow(lx, dp.delta_log) * std::pow(std::fabs(x2), 2.0 * dp.m) /
                       std::pow(x, dp.m);
    const double ps = cut.psi(arg);
    if (ps == 0.0) return 0.0;
    return -dp.theta * std::pow(lx, dp.alpha) * cx * ps;
}

double wk_hat(const DataParams& dp, double x, double x2) {
    if (x <= dp.eta || x >= 2.0 * dp.eta) return 0.0;
    static const CutoffPair cut;
    const double cx = cut.chi(x / dp.eta);
    if (cx == 0.0) return 0.0;
    const double lx = std::fabs(std::log(x));
    const double arg = std::pow(lx, dp.delta_log) * std::pow(std::fabs(x2), 2.0 * dp.m) /
                       std::pow(x, dp.m);
    const double ps = cut.psi(arg);
    if (ps == 0.0) return 0.0;
    return -dp.theta * dp.theta * cx * ps;
}

W0Result w0_amplitude(const DataParams& dp) {
    const auto f = [&](double z) { return -w1_hat(dp, z, 0.0); };
    const int n_scan = 100000;
    double best = 0.0, zbest = dp.eta;
    for (int i = 0; i <= n_scan; ++i) {
        const double z = dp.eta + (dp.eta * i) / n_scan;
        const double v = f(z);
        if (v > best) {
            best = v;
            zbest = z;
        }
    }
    const double dz = dp.eta / n_scan;
    const auto [zr, vr] = golden_max(f, std::max(dp.eta, zbest - 2 * dz),
                                     std::min(2.0 * dp.eta, zbest + 2 * dz));
    W0Result out;
    if (vr > best) {
        out.W0 = vr;
        out.z0 = zr;
    } else {
        out.W0 = best;
        out.z0 = zbest;
    }
    return out;
}

Phi0Slice reconstruct_phi0(const GasParams& p, const DataParams& dp, Variant v, double x2,
                           std::span<const double> xs, double max_step_frac) {
    const int n = variant_dim(v);
    const double h_max = dp.eta * max_step_frac;

    const auto rhs = [&](double x, const Vec& phi) {
        Vec lam;
        Mat R, L;
        eig_from_vec(p, phi, v, lam, R, L);
        const double w1 = w1_hat(dp, x, x2);
        const double wk = wk_hat(dp, x, x2);
        Vec d(n);
        for (int a = 0; a < n; ++a) {
            double s = w1 * R(a, 0);
            for (int k = 1; k < n; ++k) s += wk * R(a, k);
            d[a] = s;
        }
        return d;
    };

    std::vector<size_t> order(xs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return xs[a] < xs[b]; });

    Phi0Slice out;
    out.x.assign(xs.begin(), xs.end());
    out.phi.assign(xs.size(), Vec(n));

    double x = 0.5 * dp.eta;
    Vec phi(n);
    for (size_t oi = 0; oi < order.size(); ++oi) {
        const double target = xs[order[oi]];
        if (target <= x) {
            out.phi[order[oi]] = phi;  // left of the support start: zero state
            continue;
        }
        while (x < target) {
            const double h = std::min(h_max, target - x);
            const Vec k1 = rhs(x, phi);
            const Vec k2 = rhs(x + 0.5 * h, phi + (0.5 * h) * k1);
            const Vec k3 = rhs(x + 0.5 * h, phi + (0.5 * h) * k2);
            const Vec k4 = rhs(x + h, phi + h * k3);
            phi = phi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            x += h;
        }
        if (phi.linf() >= 2.0 * p.delta_ball)
            throw std::domain_error(
                "reconstructed state left the admissible ball; data parameters too large");
        out.phi[order[oi]] = phi;
    }
    return out;
}

}  // namespace shocklab
