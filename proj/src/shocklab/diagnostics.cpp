#include "shocklab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shocklab {

double OmegaWeight::operator()(double z) const {
    const double a = z - eta + eps * eta;
    const double b = 2.0 * eta - z + eps * eta;
    if (a <= 0.0 || b <= 0.0) return 0.0;
    return std::sqrt(a * b);
}

DzRho1 dz_rho1(const std::vector<double>& z, const std::vector<double>& rho) {
    const size_t m = z.size();
    if (m < 257) throw std::invalid_argument("dz_rho1 needs at least 257 labels");
    DzRho1 out;
    out.profile.assign(m, 0.0);
    for (size_t k = 1; k + 1 < m; ++k)
        out.profile[k] = (rho[k + 1] - rho[k - 1]) / (z[k + 1] - z[k - 1]);
    out.profile[0] = (rho[1] - rho[0]) / (z[1] - z[0]);
    out.profile[m - 1] = (rho[m - 1] - rho[m - 2]) / (z[m - 1] - z[m - 2]);
    for (double d : out.profile) out.sup = std::max(out.sup, std::fabs(d));
    return out;
}

namespace {

// trapezoid in z
template <typename F>
double quad_z(const std::vector<double>& z, F&& integrand) {
    double s = 0.0;
    for (size_t k = 0; k + 1 < z.size(); ++k)
        s += 0.5 * (integrand(k) + integrand(k + 1)) * (z[k + 1] - z[k]);
    return s;
}

double interp_linear(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    size_t lo = 0, hi = xs.size() - 1;
    while (hi - lo > 1) {
        const size_t mid = (lo + hi) / 2;
        (xs[mid] <= x ? lo : hi) = mid;
    }
    const double w = (x - xs[lo]) / (xs[lo + 1] - xs[lo]);
    return (1.0 - w) * ys[lo] + w * ys[lo + 1];
}

}  // namespace

double h1_window_norm(const std::vector<double>& z, const std::vector<double>& rho,
                      const std::vector<double>& v, const OmegaWeight& w) {
    for (double r : rho)
        if (r <= 0.0) throw std::runtime_error("h1_window_norm evaluated past the shock");
    return quad_z(z, [&](size_t k) { return v[k] * v[k] / rho[k] * w(z[k]); });
}

double h1_window_norm_field(const Snapshot& snap, const std::vector<double>& z,
                            const OmegaWeight& w, int n_comp) {
    const auto& X = snap.X[0];
    const auto& rho = snap.rho1;
    // |w1(X(z))|^2 * weight(z) * rho dz  (dx = rho dz along the strip)
    std::vector<double> col(snap.field_x.size());
    for (size_t i = 0; i < col.size(); ++i)
        col[i] = snap.field_w[i * static_cast<size_t>(n_comp)];
    return quad_z(z, [&](size_t k) {
        const double w1 = interp_linear(snap.field_x, col, X[k]);
        return w1 * w1 * w(z[k]) * rho[k];
    });
}

std::pair<double, double> velocity_density_norms(const Snapshot& snap,
                                                 const std::vector<double>& z,
                                                 const OmegaWeight& w, int n_comp) {
    const auto& X = snap.X[0];
    const auto& rho = snap.rho1;
    const size_t nxs = snap.field_x.size();
    // d_x Phi components 0 (u1) and 2 (rho) by central differences
    std::vector<double> du(nxs, 0.0), dr(nxs, 0.0);
    const double dx = snap.field_x[1] - snap.field_x[0];
    for (size_t i = 1; i + 1 < nxs; ++i) {
        du[i] = (snap.field_phi[(i + 1) * static_cast<size_t>(n_comp)] -
                 snap.field_phi[(i - 1) * static_cast<size_t>(n_comp)]) /
                (2.0 * dx);
        dr[i] = (snap.field_phi[(i + 1) * static_cast<size_t>(n_comp) + 2] -
                 snap.field_phi[(i - 1) * static_cast<size_t>(n_comp) + 2]) /
                (2.0 * dx);
    }
    const double nu = quad_z(z, [&](size_t k) {
        const double d = interp_linear(snap.field_x, du, X[k]);
        return d * d * w(z[k]) * rho[k];
    });
    const double nr = quad_z(z, [&](size_t k) {
        const double d = interp_linear(snap.field_x, dr, X[k]);
        return d * d * w(z[k]) * rho[k];
    });
    return {std::sqrt(nu), std::sqrt(nr)};
}

BlowupCertificate make_certificate(const SimResult& res) {
    BlowupCertificate cert;
    const OmegaWeight w{res.eta, 0.05};
    const int n_comp = res.snapshots.empty()
                           ? 0
                           : static_cast<int>(res.snapshots.front().field_phi.size() /
                                              res.snapshots.front().field_x.size());
    const auto& z = res.bundles[0].z;

    for (const auto& snap : res.snapshots) {
        double rmin = snap.rho1[0];
        for (double r : snap.rho1) rmin = std::min(rmin, r);
        if (rmin <= 0.0) continue;
        const auto dz = dz_rho1(z, snap.rho1);
        cert.dz_rho1_sup = std::max(cert.dz_rho1_sup, dz.sup);
        // decimated grid for the resolution-stability check
        std::vector<double> z2, r2;
        for (size_t k = 0; k < z.size(); k += 2) {
            z2.push_back(z[k]);
            r2.push_back(snap.rho1[k]);
        }
        cert.dz_rho1_sup_half_nz = std::max(cert.dz_rho1_sup_half_nz, dz_rho1(z2, r2).sup);

        cert.t.push_back(snap.t);
        cert.rho_min.push_back(rmin);
        cert.neg_log_rho.push_back(-std::log(rmin));
        cert.h1.push_back(h1_window_norm(z, snap.rho1, snap.v1, w));
        const auto [du, dr] = velocity_density_norms(snap, z, w, n_comp);
        cert.du1_norm.push_back(du);
        cert.drho_norm.push_back(dr);
    }
    cert.rho1_min_terminal = cert.rho_min.empty() ? 0.0 : cert.rho_min.back();

    const size_t m = cert.h1.size();
    if (m >= 5) {
        cert.h1_tail_increasing = true;
        for (size_t k = m - 4; k < m; ++k)
            if (!(cert.h1[k] > cert.h1[k - 1])) cert.h1_tail_increasing = false;
        // fit over the approach (last half of the samples)
        const size_t k0 = m / 2;
        std::vector<double> xs(cert.neg_log_rho.begin() + static_cast<long>(k0),
                               cert.neg_log_rho.end());
        std::vector<double> ys(cert.h1.begin() + static_cast<long>(k0), cert.h1.end());
        cert.log_fit_slope = linear_fit(xs, ys).slope;
    }
    const double rel = std::fabs(cert.dz_rho1_sup - cert.dz_rho1_sup_half_nz) /
                       std::max(cert.dz_rho1_sup, 1e-300);
    cert.dz_stable = rel <= 0.10;
    return cert;
}

}  // namespace shocklab
