#include "shocklab/sobolev.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>

#include "shocklab/numerics.hpp"

namespace shocklab {

namespace {

struct FftwDeleter {
    void operator()(void* p) const { fftw_free(p); }
};

// r2c spectrum |F|^2 with the continuous-transform scaling (dx*dy factors).
// Calls back with (xi1, xi2, |F|^2, multiplicity).
template <typename Fn>
void for_each_bin(const SpectralGrid& g, std::span<const double> f, Fn&& fn) {
    const int nx = g.nx, ny = g.ny;
    const int nyh = ny / 2 + 1;
    std::unique_ptr<double, FftwDeleter> in(
        static_cast<double*>(fftw_malloc(sizeof(double) * static_cast<size_t>(nx) * ny)));
    std::unique_ptr<fftw_complex, FftwDeleter> out(static_cast<fftw_complex*>(
        fftw_malloc(sizeof(fftw_complex) * static_cast<size_t>(nx) * nyh)));
    std::copy(f.begin(), f.end(), in.get());
    fftw_plan plan = fftw_plan_dft_r2c_2d(nx, ny, in.get(), out.get(), FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    const double scale = g.dx() * g.dy();
    for (int i = 0; i < nx; ++i) {
        const double xi1 = (i <= nx / 2 ? i : i - nx) / g.Lx;
        const fftw_complex* row = out.get() + static_cast<size_t>(i) * nyh;
        for (int j = 0; j < nyh; ++j) {
            const double xi2 = j / g.Ly;
            const double re = row[j][0] * scale, im = row[j][1] * scale;
            const double mag2 = re * re + im * im;
            const double mult = (j == 0 || (ny % 2 == 0 && j == ny / 2)) ? 1.0 : 2.0;
            fn(xi1, xi2, mag2, mult);
        }
    }
}

void check_leakage(const SpectralGrid& g, std::span<const double> f) {
    const int nx = g.nx, ny = g.ny;
    double edge = 0.0, inner = 0.0;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const double v = std::fabs(f[static_cast<size_t>(i) * ny + j]);
            if (i == 0 || j == 0 || i == nx - 1 || j == ny - 1)
                edge = std::max(edge, v);
            else
                inner = std::max(inner, v);
        }
    if (edge > 1e-300 && edge > 1e-12 * inner)
        throw std::runtime_error("field support touches the box boundary (spectral leakage)");
}

// blocked pairwise accumulation: deterministic and low-error without holding
// every bin in memory
struct Accum {
    std::vector<double> parts;
    double cur = 0.0;
    int cnt = 0;
    void add(double v) {
        cur += v;
        if (++cnt == 2048) {
            parts.push_back(cur);
            cur = 0.0;
            cnt = 0;
        }
    }
    double sum() const {
        double s = pairwise_sum(parts);
        return s + cur;
    }
};

}  // namespace

SpectralGrid grid_for_family(const DataParams& dp, double s, int nx, int ny, double pad) {
    SpectralGrid g;
    g.nx = nx;
    g.ny = ny;
    g.s = s;
    g.Lx = pad * dp.eta;
    g.x0 = 1.5 * dp.eta - 0.5 * g.Lx;
    const double ysup = dp.y_max(2.0 * dp.eta);
    g.Ly = pad * 2.0 * ysup;
    g.y0 = -0.5 * g.Ly;
    // Nyquist must resolve the finest x2 feature, the support half-width at
    // the left edge of the support.
    const double feature = dp.y_max(dp.eta);
    const double nyquist = ny / (2.0 * g.Ly);
    if (nyquist < 32.0 / feature)
        throw std::runtime_error("spectral grid under-resolved: raise ny or shrink the sweep");
    return g;
}

std::vector<double> sample_field(const SpectralGrid& g,
                                 const std::function<double(double, double)>& f) {
    std::vector<double> out(static_cast<size_t>(g.nx) * g.ny);
    for (int i = 0; i < g.nx; ++i) {
        const double x = g.x0 + (i + 0.5) * g.dx();
        for (int j = 0; j < g.ny; ++j) {
            const double y = g.y0 + (j + 0.5) * g.dy();
            out[static_cast<size_t>(i) * g.ny + j] = f(x, y);
        }
    }
    return out;
}

std::vector<double> sample_w1(const SpectralGrid& g, const DataParams& dp) {
    std::vector<double> out(static_cast<size_t>(g.nx) * g.ny);
    for (int i = 0; i < g.nx; ++i) {
        const double x = g.x0 + (i + 0.5) * g.dx();
        if (x <= dp.eta || x >= 2.0 * dp.eta) continue;
        for (int j = 0; j < g.ny; ++j) {
            const double y = g.y0 + (j + 0.5) * g.dy();
            out[static_cast<size_t>(i) * g.ny + j] = w1_hat(dp, x, y);
        }
    }
    return out;
}

double hdot_norm(const SpectralGrid& g, std::span<const double> f) {
    check_leakage(g, f);
    const double dxi = 1.0 / (g.Lx * g.Ly);
    Accum weighted, plain;
    for_each_bin(g, f, [&](double xi1, double xi2, double mag2, double mult) {
        const double xi_sq = xi1 * xi1 + xi2 * xi2;
        const double w = xi_sq > 0.0 ? std::pow(xi_sq, g.s) : (g.s == 0.0 ? 1.0 : 0.0);
        weighted.add(w * mag2 * mult * dxi);
        plain.add(mag2 * mult * dxi);
    });
    // Parseval at s = 0: quadrature bookkeeping against the spatial sum
    std::vector<double> sq(f.size());
    for (size_t i = 0; i < f.size(); ++i) sq[i] = f[i] * f[i];
    const double l2_spatial = pairwise_sum(sq) * g.dx() * g.dy();
    const double l2_freq = plain.sum();
    if (l2_spatial > 0.0 && std::fabs(l2_freq - l2_spatial) > 1e-6 * l2_spatial)
        throw std::runtime_error("Parseval check failed in hdot_norm");
    return weighted.sum();
}

RegionBreakdown region_breakdown(const SpectralGrid& g, std::span<const double> f,
                                 const DataParams& dp) {
    const double t1 = 1.0 / dp.eta;
    const double t2 =
        std::pow(std::fabs(std::log(dp.eta)), dp.delta_log) / std::sqrt(dp.eta);
    const double dxi = 1.0 / (g.Lx * g.Ly);
    Accum a1, a2, a3, a4;
    for_each_bin(g, f, [&](double xi1, double xi2, double mag2, double mult) {
        const double xi_sq = xi1 * xi1 + xi2 * xi2;
        const double w = xi_sq > 0.0 ? std::pow(xi_sq, g.s) : 0.0;
        const double v = w * mag2 * mult * dxi;
        const bool big1 = std::fabs(xi1) > t1, big2 = std::fabs(xi2) > t2;
        if (!big1 && !big2)
            a1.add(v);
        else if (big1 && !big2)
            a2.add(v);
        else if (!big1 && big2)
            a3.add(v);
        else
            a4.add(v);
    });
    RegionBreakdown rb;
    rb.d1 = a1.sum();
    rb.d2 = a2.sum();
    rb.d3 = a3.sum();
    rb.d4 = a4.sum();
    rb.total = rb.d1 + rb.d2 + rb.d3 + rb.d4;
    return rb;
}

EtaSweep eta_sweep(const DataParams& tmpl, std::span<const double> etas, double s, int nx,
                   int ny) {
    EtaSweep sweep;
    for (double eta : etas) {
        DataParams dp = tmpl;
        dp.eta = eta;
        dp.validate();
        SpectralGrid g;
        try {
            g = grid_for_family(dp, s, nx, ny);
        } catch (const std::runtime_error&) {
            sweep.truncated = true;  // resolution rule unsatisfiable; stop here
            break;
        }
        const auto f = sample_w1(g, dp);
        const auto rb = region_breakdown(g, f, dp);
        const double norm2 = hdot_norm(g, f);
        EtaSweepRow row;
        row.eta = eta;
        row.norm2 = norm2;
        row.d1 = rb.d1;
        row.d2 = rb.d2;
        row.d3 = rb.d3;
        row.d4 = rb.d4;
        sweep.rows.push_back(row);
    }

    if (sweep.rows.size() >= 2) {
        std::vector<double> xs, ys;
        for (const auto& r : sweep.rows) {
            xs.push_back(std::log(std::fabs(std::log(r.eta))));
            ys.push_back(std::log(r.norm2));
        }
        sweep.fit_exponent = linear_fit(xs, ys).slope;
        sweep.decreasing = true;
        for (size_t i = 1; i < sweep.rows.size(); ++i)
            if (!(sweep.rows[i].norm2 < sweep.rows[i - 1].norm2)) sweep.decreasing = false;
        const double bound =
            2.0 * tmpl.alpha + tmpl.delta_log * (1.0 - 1.0 / tmpl.m) + 0.5;
        sweep.pass = sweep.decreasing && sweep.fit_exponent <= bound;
    }
    return sweep;
}

}  // namespace shocklab
