#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace shocklab {

// Pairwise summation for deterministic, low-error accumulation.
inline double pairwise_sum(std::span<const double> xs) {
    const size_t n = xs.size();
    if (n <= 32) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const size_t half = n / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

// Golden-section maximizer on [a, b] for a unimodal function.
inline std::pair<double, double> golden_max(const std::function<double(double)>& f, double a,
                                            double b, double tol = 1e-12, int max_iter = 200) {
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > tol * (std::fabs(a) + std::fabs(b)); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n.
struct GaussLegendre {
    std::vector<double> x, w;

    explicit GaussLegendre(int n) : x(static_cast<size_t>(n)), w(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) {
            double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = xi;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                double dx = p1 / pp;
                xi -= dx;
                if (std::fabs(dx) < 1e-15) break;
            }
            x[static_cast<size_t>(i)] = xi;
            w[static_cast<size_t>(i)] = 2.0 / ((1.0 - xi * xi) * pp * pp);
        }
    }
};

// Least-squares slope and intercept of y against x.
struct LinFit {
    double slope = 0.0, intercept = 0.0;
};

inline LinFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
    const size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double d = n * sxx - sx * sx;
    LinFit f;
    f.slope = (n * sxy - sx * sy) / d;
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

inline double minmod(double a, double b) {
    if (a * b <= 0.0) return 0.0;
    return std::fabs(a) < std::fabs(b) ? a : b;
}

// Monotone cubic interpolant (Fritsch-Carlson) on a uniform grid.
class MonotoneCubic {
  public:
    MonotoneCubic() = default;

    // y sampled at x0 + i*h, i = 0..m-1
    void build(double x0, double h, std::span<const double> y) {
        x0_ = x0;
        h_ = h;
        y_.assign(y.begin(), y.end());
        const size_t m = y_.size();
        d_.assign(m, 0.0);
        if (m < 2) return;
        std::vector<double> delta(m - 1);
        for (size_t i = 0; i + 1 < m; ++i) delta[i] = (y_[i + 1] - y_[i]) / h_;
        d_[0] = delta[0];
        d_[m - 1] = delta[m - 2];
        for (size_t i = 1; i + 1 < m; ++i) {
            if (delta[i - 1] * delta[i] <= 0.0)
                d_[i] = 0.0;
            else
                d_[i] = 2.0 * delta[i - 1] * delta[i] / (delta[i - 1] + delta[i]);
        }
    }

    double operator()(double x) const {
        const size_t m = y_.size();
        double u = (x - x0_) / h_;
        if (u <= 0.0) return y_.front();
        if (u >= static_cast<double>(m - 1)) return y_.back();
        size_t i = static_cast<size_t>(u);
        double t = u - static_cast<double>(i);
        const double y0 = y_[i], y1 = y_[i + 1];
        const double m0 = d_[i] * h_, m1 = d_[i + 1] * h_;
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * y1 +
               (t3 - t2) * m1;
    }

    bool empty() const { return y_.empty(); }

  private:
    double x0_ = 0.0, h_ = 1.0;
    std::vector<double> y_, d_;
};

}  // namespace shocklab
