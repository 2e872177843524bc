#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>

namespace shocklab {

inline constexpr int kMaxDim = 5;

// Fixed-capacity vector/matrix for the 4- and 5-component planar states.
// Value types, no allocation; `n` is the active dimension.
struct Vec {
    int n = 0;
    std::array<double, kMaxDim> a{};

    Vec() = default;
    explicit Vec(int dim) : n(dim) {}

    double& operator[](int i) { return a[static_cast<size_t>(i)]; }
    double operator[](int i) const { return a[static_cast<size_t>(i)]; }

    double linf() const {
        double m = 0.0;
        for (int i = 0; i < n; ++i) m = std::max(m, std::fabs(a[static_cast<size_t>(i)]));
        return m;
    }
};

inline Vec operator+(Vec x, const Vec& y) {
    for (int i = 0; i < x.n; ++i) x[i] += y[i];
    return x;
}

inline Vec operator-(Vec x, const Vec& y) {
    for (int i = 0; i < x.n; ++i) x[i] -= y[i];
    return x;
}

inline Vec operator*(double c, Vec x) {
    for (int i = 0; i < x.n; ++i) x[i] *= c;
    return x;
}

inline double dot(const Vec& x, const Vec& y) {
    double s = 0.0;
    for (int i = 0; i < x.n; ++i) s += x[i] * y[i];
    return s;
}

// Row-major n x n matrix.
struct Mat {
    int n = 0;
    std::array<double, kMaxDim * kMaxDim> a{};

    Mat() = default;
    explicit Mat(int dim) : n(dim) {}

    double& operator()(int i, int j) { return a[static_cast<size_t>(i * n + j)]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i * n + j)]; }

    Vec col(int j) const {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Vec row(int i) const {
        Vec v(n);
        for (int j = 0; j < n; ++j) v[j] = (*this)(i, j);
        return v;
    }
    void set_col(int j, const Vec& v) {
        for (int i = 0; i < n; ++i) (*this)(i, j) = v[i];
    }
    void set_row(int i, const Vec& v) {
        for (int j = 0; j < n; ++j) (*this)(i, j) = v[j];
    }

    static Mat identity(int dim) {
        Mat m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    // max-row-sum norm (scale-invariant residual reference)
    double max_row_sum() const {
        double m = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += std::fabs((*this)(i, j));
            m = std::max(m, s);
        }
        return m;
    }
};

inline Vec matvec(const Mat& m, const Vec& x) {
    Vec y(m.n);
    for (int i = 0; i < m.n; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.n; ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline Mat matmul(const Mat& a, const Mat& b) {
    Mat c(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            double s = 0.0;
            for (int k = 0; k < a.n; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

inline double max_abs(const Mat& m) {
    double v = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) v = std::max(v, std::fabs(m(i, j)));
    return v;
}

}  // namespace shocklab
