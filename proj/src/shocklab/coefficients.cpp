#include "shocklab/coefficients.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace shocklab {

namespace {

// per-component FD step that keeps s +/- h inside the ball; one shrink allowed
double fd_step_for(const GasParams& p, const Vec& q, int j, double h) {
    const double lim = 2.0 * p.delta_ball;
    if (std::fabs(q[j]) + h < lim) return h;
    if (std::fabs(q[j]) + h / 10.0 < lim) return h / 10.0;
    throw std::domain_error("finite-difference stencil leaves the admissible region");
}

Vec grad_lambda_vec(const GasParams& p, const Vec& q, Variant v, int i, double h) {
    const int n = variant_dim(v);
    Vec g(n);
    for (int j = 0; j < n; ++j) {
        const double hj = fd_step_for(p, q, j, h);
        Vec qp = q, qm = q;
        qp[j] += hj;
        qm[j] -= hj;
        g[j] = (eigenvalues_from_vec(p, qp, v)[i] - eigenvalues_from_vec(p, qm, v)[i]) /
               (2.0 * hj);
    }
    return g;
}

void table_at(const GasParams& p, const Vec& q, Variant v, double h, CoeffTable& t) {
    const int n = variant_dim(v);
    t.n = n;
    t.fd_step = h;

    Vec lam;
    Mat R, L;
    eig_from_vec(p, q, v, lam, R, L);

    // Jacobians dR/dPhi_j by central differences of the closed forms.
    Mat J[kMaxDim];
    for (int j = 0; j < n; ++j) {
        const double hj = fd_step_for(p, q, j, h);
        Vec qp = q, qm = q;
        qp[j] += hj;
        qm[j] -= hj;
        Vec lp, lm;
        Mat Rp, Lp, Rm, Lm;
        eig_from_vec(p, qp, v, lp, Rp, Lp);
        eig_from_vec(p, qm, v, lm, Rm, Lm);
        J[j] = Mat(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) J[j](a, b) = (Rp(a, b) - Rm(a, b)) / (2.0 * hj);
    }

    // directional derivatives D[k][m] = (grad r_k) r_m
    Vec D[kMaxDim][kMaxDim];
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
            Vec d(n);
            for (int a = 0; a < n; ++a) {
                double s = 0.0;
                for (int j = 0; j < n; ++j) s += J[j](a, k) * R(j, m);
                d[a] = s;
            }
            D[k][m] = d;
        }

    for (int i = 0; i < n; ++i) {
        const Vec gl = grad_lambda_vec(p, q, v, i, h);
        for (int m = 0; m < n; ++m) t.c[i][m] = dot(gl, R.col(m));
    }
    for (int i = 0; i < n; ++i) {
        const Vec li = L.row(i);
        for (int m = 0; m < n; ++m) {
            if (m == i) continue;
            t.gam_im[i][m] = -(lam[i] - lam[m]) * dot(li, D[i][m] - D[m][i]);
            for (int k = 0; k < n; ++k) {
                if (k == i || k == m) continue;
                t.gam_km[i][k][m] = -(lam[k] - lam[m]) * dot(li, D[k][m]);
            }
        }
    }
}

std::vector<double> axis_points(double lim, int grid_n) {
    std::vector<double> xs;
    if (grid_n <= 1) {
        xs.push_back(0.0);
        return xs;
    }
    for (int i = 0; i < grid_n; ++i)
        xs.push_back(lim * (2.0 * i / (grid_n - 1) - 1.0));
    return xs;
}

}  // namespace

double CoeffTable::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m = std::max(m, std::fabs(c[i][j]));
            m = std::max(m, std::fabs(gam_im[i][j]));
            for (int k = 0; k < n; ++k) m = std::max(m, std::fabs(gam_km[i][j][k]));
        }
    return m;
}

double CoeffTable::max_diff(const CoeffTable& a, const CoeffTable& b) {
    double m = 0.0;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            m = std::max(m, std::fabs(a.c[i][j] - b.c[i][j]));
            m = std::max(m, std::fabs(a.gam_im[i][j] - b.gam_im[i][j]));
            for (int k = 0; k < a.n; ++k)
                m = std::max(m, std::fabs(a.gam_km[i][j][k] - b.gam_km[i][j][k]));
        }
    return m;
}

Vec grad_lambda(const GasParams& p, const State& s, Variant v, int i, double h) {
    require_in_ball(p, s, v);
    Vec g1 = grad_lambda_vec(p, state_to_vec(s, v), v, i, h);
    Vec g2 = grad_lambda_vec(p, state_to_vec(s, v), v, i, h / 2.0);
    for (int j = 0; j < g1.n; ++j) {
        const double scale = std::max(1.0, std::fabs(g1[j]));
        if (std::fabs(g1[j] - g2[j]) > 1e-6 * scale)
            throw std::runtime_error("grad_lambda failed the step-halving consistency check");
    }
    return g2;
}

CoeffTable coeff_table(const GasParams& p, const State& s, Variant v, double h) {
    require_in_ball(p, s, v);
    CoeffTable t;
    table_at(p, state_to_vec(s, v), v, h, t);
    return t;
}

CoeffTable coeff_table_checked(const GasParams& p, const State& s, Variant v, double h,
                               double tol) {
    require_in_ball(p, s, v);
    CoeffTable t1, t2;
    table_at(p, state_to_vec(s, v), v, h, t1);
    table_at(p, state_to_vec(s, v), v, h / 2.0, t2);
    if (CoeffTable::max_diff(t1, t2) > tol)
        throw std::runtime_error("coefficient table failed the step-halving consistency check");
    return t2;
}

ScanReport boundedness_scan_stream(const GasParams& p, Variant v, int grid_n,
                                   const std::function<void(const ScanEntry&)>& sink) {
    const int n = variant_dim(v);
    const double lim = 2.0 * p.delta_ball * (1.0 - 1e-3);
    const auto pts = axis_points(lim, grid_n);
    std::vector<double> h2_pts;
    if (v != Variant::euler) {
        h2_pts = pts;
        for (double extra : {0.0, 1e-6, -1e-6, 1e-3, -1e-3}) {
            bool found = false;
            for (double x : h2_pts)
                if (x == extra) found = true;
            if (!found) h2_pts.push_back(extra);
        }
    } else {
        h2_pts = {0.0};
    }

    ScanReport rep;
    rep.pass = true;
    char idbuf[32];
    const auto consider = [&](const State& st, const char* kind, int i, int k, int m,
                              double val) {
        if (sink) {
            if (k < 0)
                std::snprintf(idbuf, sizeof idbuf, "%s_%d%d", kind, i + 1, m + 1);
            else
                std::snprintf(idbuf, sizeof idbuf, "%s_%d_%d%d", kind, i + 1, k + 1, m + 1);
            sink(ScanEntry{st, idbuf, val});
        }
        if (!std::isfinite(val) || std::fabs(val) >= rep.threshold) rep.pass = false;
        if (std::fabs(val) > rep.Gamma) {
            rep.Gamma = std::fabs(val);
            rep.argmax_state = st;
            if (k < 0)
                std::snprintf(idbuf, sizeof idbuf, "%s_%d%d", kind, i + 1, m + 1);
            else
                std::snprintf(idbuf, sizeof idbuf, "%s_%d_%d%d", kind, i + 1, k + 1, m + 1);
            rep.argmax_coeff = idbuf;
        }
    };

    for (double u1 : pts)
        for (double u2 : pts)
            for (double rm : pts)
                for (double h2 : h2_pts)
                    for (double S : pts) {
                        State st;
                        st.u1 = u1;
                        st.u2 = u2;
                        st.rho_m1 = rm;
                        st.H2 = h2;
                        st.S = S;
                        CoeffTable t = coeff_table_checked(p, st, v);
                        ++rep.points;
                        for (int i = 0; i < n; ++i)
                            for (int m = 0; m < n; ++m) {
                                consider(st, "c", i, -1, m, t.c[i][m]);
                                if (m != i) consider(st, "g", i, -1, m, t.gam_im[i][m]);
                                for (int k = 0; k < n; ++k)
                                    if (k != i && m != i && k != m)
                                        consider(st, "g", i, k, m, t.gam_km[i][k][m]);
                            }
                    }
    return rep;
}

ScanReport boundedness_scan(const GasParams& p, Variant v, int grid_n) {
    return boundedness_scan_stream(p, v, grid_n, nullptr);
}

GenuineNonlinearity genuine_nonlinearity_check(const GasParams& p, Variant v, int grid_n) {
    const double lim = 2.0 * p.delta_ball * (1.0 - 1e-3);
    const auto pts = axis_points(lim, grid_n);
    std::vector<double> h2_pts = v == Variant::euler ? std::vector<double>{0.0} : pts;

    GenuineNonlinearity out;
    out.c111_at_zero = coeff_table(p, State{}, v).c[0][0];
    out.min_over_lattice = out.c111_at_zero;
    for (double u1 : pts)
        for (double u2 : pts)
            for (double rm : pts)
                for (double h2 : h2_pts)
                    for (double S : pts) {
                        State st{u1, u2, rm, h2, S};
                        out.min_over_lattice =
                            std::min(out.min_over_lattice, coeff_table(p, st, v).c[0][0]);
                    }
    out.pass = out.min_over_lattice > 0.0;
    return out;
}

void CoeffModel::eval_rows(const Vec& phi, int family, Rows& out) const {
    const int i = family;
    for (int m = 0; m < n; ++m) {
        double cv = base.c[i][m];
        double gv = base.gam_im[i][m];
        for (int j = 0; j < n; ++j) {
            cv += dgrad[static_cast<size_t>(j)].c[i][m] * phi[j];
            gv += dgrad[static_cast<size_t>(j)].gam_im[i][m] * phi[j];
        }
        out.cim[m] = cv;
        out.gim[m] = gv;
        for (int k = 0; k < n; ++k) {
            double gk = base.gam_km[i][k][m];
            for (int j = 0; j < n; ++j)
                gk += dgrad[static_cast<size_t>(j)].gam_km[i][k][m] * phi[j];
            out.gkm[k][m] = gk;
        }
    }
}

double CoeffModel::c111(const Vec& phi) const {
    double cv = base.c[0][0];
    for (int j = 0; j < n; ++j) cv += dgrad[static_cast<size_t>(j)].c[0][0] * phi[j];
    return cv;
}

CoeffModel make_coeff_model(const GasParams& p, Variant v, double model_step) {
    CoeffModel m;
    m.n = variant_dim(v);
    m.variant = v;
    m.base = coeff_table_checked(p, State{}, v);
    for (int j = 0; j < m.n; ++j) {
        Vec qp(m.n), qm(m.n);
        qp[j] = model_step;
        qm[j] = -model_step;
        CoeffTable tp = coeff_table(p, state_from_vec(qp, v), v);
        CoeffTable tm = coeff_table(p, state_from_vec(qm, v), v);
        CoeffTable& g = m.dgrad[static_cast<size_t>(j)];
        g.n = m.n;
        for (int a = 0; a < m.n; ++a)
            for (int b = 0; b < m.n; ++b) {
                g.c[a][b] = (tp.c[a][b] - tm.c[a][b]) / (2.0 * model_step);
                g.gam_im[a][b] = (tp.gam_im[a][b] - tm.gam_im[a][b]) / (2.0 * model_step);
                for (int k = 0; k < m.n; ++k)
                    g.gam_km[a][b][k] =
                        (tp.gam_km[a][b][k] - tm.gam_km[a][b][k]) / (2.0 * model_step);
            }
    }
    return m;
}

}  // namespace shocklab
