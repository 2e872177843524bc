#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shocklab/coefficients.hpp"
#include "shocklab/gas.hpp"
#include "shocklab/initial_data.hpp"
#include "shocklab/numerics.hpp"

namespace shocklab {

// The planar quasilinear systems the solver can evolve: the gas variants, or
// the scalar convex-flux equation used as an analytic oracle.
class HyperbolicSystem {
  public:
    enum class Kind { gas, scalar_convex };

    static HyperbolicSystem gas_system(const GasParams& p, Variant v);
    static HyperbolicSystem scalar_convex();

    int dim() const { return n_; }
    Kind kind() const { return kind_; }
    Variant variant() const { return variant_; }
    const GasParams& gas() const { return gas_; }

    void eig(const Vec& phi, Vec& lam, Mat& R, Mat& L) const;
    double lambda_family(const Vec& phi, int family) const;
    double max_frame_speed_at(const Vec& phi, double frame) const;
    void coeff_rows(const Vec& phi, int family, CoeffModel::Rows& out) const;
    double c111_at_zero() const;

  private:
    Kind kind_ = Kind::scalar_convex;
    int n_ = 1;
    Variant variant_ = Variant::euler;
    GasParams gas_;
    std::optional<CoeffModel> model_;
};

enum class Limiter { none, eno2 };
Limiter limiter_from_name(const std::string& name);

struct FieldState {
    int nx = 0;
    int n = 0;
    double x_lo = 0.0, x_hi = 0.0;
    double frame_speed = 0.0;
    double t = 0.0;
    double cfl = 0.4;
    bool periodic = false;
    std::vector<double> phi;  // [cell*n + comp]

    double dx() const { return (x_hi - x_lo) / nx; }
    double cell_center(int i) const { return x_lo + (i + 0.5) * dx(); }
    double* cell(int i) { return phi.data() + static_cast<size_t>(i) * n; }
    const double* cell(int i) const { return phi.data() + static_cast<size_t>(i) * n; }
    double sup_abs() const;
    double total_variation() const;
};

// One Heun step of the characteristic upwind scheme: per cell, decompose the
// slope into waves with the local left eigenvectors, bias each wave's stencil
// by sign(lambda_k - frame_speed) (ENO-2 stencil choice when limited), and
// recombine. Returns the max in-frame wave speed seen on the grid.
double step_field(const HyperbolicSystem& sys, FieldState& fs, double dt, Limiter lim);

double max_frame_speed(const HyperbolicSystem& sys, const FieldState& fs);

// Frozen-field interpolants for the bundle ODEs (state and wave amplitudes,
// monotone cubic in x).
struct FieldSnapshot {
    double t = 0.0;
    int n = 0;
    double x_lo = 0.0, x_hi = 0.0, dx = 0.0;
    double frame_speed = 0.0;
    std::array<MonotoneCubic, kMaxDim> phi_c;
    std::array<MonotoneCubic, kMaxDim> w_c;
    std::vector<double> w_grid;  // [cell*n + comp], central-difference waves

    void phi_at(double x, Vec& out) const;
    void w_at(double x, Vec& out) const;
};

void build_snapshot(const HyperbolicSystem& sys, const FieldState& fs, FieldSnapshot& snap);

// Characteristic bundle of one family: label grid z, positions X, inverse
// densities rho, Riccati variables v (w = v / rho).
struct CharBundle {
    int family = 0;
    bool frozen = false;        // fully outside the window; carried at a constant speed
    double frozen_speed = 0.0;
    std::vector<double> z, X, rho, v;

    double min_rho() const;
    // min over adjacent labels of (X_{k+1} - X_k)/(z_{k+1} - z_k)
    double min_cross() const;
    double max_abs_w() const;
};

CharBundle make_bundle(int family, double z_lo, double z_hi, int nz,
                       const std::function<double(double)>& v0);

// Joint RK4 step of (X, rho, v) against a frozen field snapshot.
// strict_interior: abort if any label leaves the interpolable window
// (otherwise evaluation clamps to the boundary state).
void advance_bundle(const HyperbolicSystem& sys, CharBundle& cb, const FieldSnapshot& snap,
                    double dt, bool strict_interior);

struct ShockReport {
    double T_star = 0.0;
    double z_star = 0.0;
    std::string method;  // trigger: rho_vanish | char_cross
    double T_rho = 0.0, T_cross = 0.0;
    double agreement = 0.0;  // |T_rho - T_cross| / T_rho
    double T_lo = 0.0, T_hi = 0.0;
    double c111_0 = 0.0, W0 = 0.0, eps = 0.05;
    double rho_min_final = 0.0;
    bool bracket_pass = false;
    bool methods_agree = false;
    std::vector<std::pair<double, double>> rho_min_history;
};

struct TimeSample {
    double t = 0.0;
    double min_rho1 = 0.0, min_cross1 = 0.0, max_w1 = 0.0;
    double sup_phi = 0.0;
    double min_rho_other = 0.0, max_w_other = 0.0;
    double ext_w1 = 0.0;  // sup |w1| outside the first strip
};

struct Snapshot {
    double t = 0.0;
    std::vector<std::vector<double>> X;  // per family
    std::vector<double> rho1, v1;
    std::vector<double> field_x, field_phi, field_w;
};

struct SimConfig {
    int nx = 512;
    int nz = 2048;
    double cfl = 0.4;
    double rho_stop = 1e-2;
    double t_max_factor = 3.0;
    double window_halfwidth_etas = 6.0;
    int bundle_stride = 128;
    Limiter limiter = Limiter::eno2;
    int snapshot_count = 160;
};

struct SimResult {
    ShockReport report;
    std::vector<TimeSample> series;
    std::vector<Snapshot> snapshots;
    std::vector<CharBundle> bundles;  // final state
    double W0 = 0.0, z0 = 0.0, c111_0 = 0.0;
    double eta = 0.0;
    double frame_speed = 0.0;
    double max_tv_growth = 0.0;  // per-step, while min rho1 > 0.2
    long field_steps = 0;
};

// Full co-solve of the data-family problem for one gas variant.
SimResult run_family_simulation(const GasParams& p, const DataParams& dp, Variant v,
                                const SimConfig& cfg);

// Scalar convex-flux oracle: u0 = -theta sin x on [0, 2pi), periodic.
SimResult run_scalar_oracle(double theta, const SimConfig& cfg);

// t0 = eta / sigma with sigma the smallest inter-group speed gap over the
// ball of radius `ball` (families with coinciding speeds at 0 are grouped).
double separation_time(const GasParams& p, Variant v, double eta, double ball);

// Intersection of characteristics (i, z_i) and (j, z_j) from stored
// trajectory snapshots; nullopt when the two never meet in the record.
std::optional<std::pair<double, double>> char_intersection(const SimResult& res, int i,
                                                           double z_i, int j, double z_j);

}  // namespace shocklab
