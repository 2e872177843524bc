#include "shocklab/gas.hpp"

#include <cmath>
#include <stdexcept>

namespace shocklab {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::mhd_h1_nonzero: return "mhd";
        case Variant::mhd_h1_zero: return "mhd-h10";
        case Variant::euler: return "euler";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "mhd") return Variant::mhd_h1_nonzero;
    if (name == "mhd-h10") return Variant::mhd_h1_zero;
    if (name == "euler") return Variant::euler;
    throw std::invalid_argument("unknown variant '" + name + "' (expected mhd, mhd-h10 or euler)");
}

int variant_dim(Variant v) { return v == Variant::euler ? 4 : 5; }

void GasParams::validate() const {
    if (!(A > 0.0)) throw std::invalid_argument("gas.A must be > 0");
    if (!(gamma > 1.0)) throw std::invalid_argument("gas.gamma must be > 1");
    if (!(mu0 > 0.0)) throw std::invalid_argument("gas.mu0 must be > 0");
    if (!(delta_ball > 0.0)) throw std::invalid_argument("gas.delta_ball must be > 0");
    const double cap = 1e-2 * std::min(A * gamma / mu0, 1.0);
    if (!(H1 * H1 < cap))
        throw std::invalid_argument("gas.H1 too large: H1^2 must be < 1e-2*min(A*gamma/mu0, 1)");
}

Vec state_to_vec(const State& s, Variant v) {
    Vec q(variant_dim(v));
    q[0] = s.u1;
    q[1] = s.u2;
    q[2] = s.rho_m1;
    if (v == Variant::euler) {
        q[3] = s.S;
    } else {
        q[3] = s.H2;
        q[4] = s.S;
    }
    return q;
}

State state_from_vec(const Vec& q, Variant v) {
    State s;
    s.u1 = q[0];
    s.u2 = q[1];
    s.rho_m1 = q[2];
    if (v == Variant::euler) {
        s.S = q[3];
    } else {
        s.H2 = q[3];
        s.S = q[4];
    }
    return s;
}

bool in_ball(const State& s, double delta, Variant v) {
    const Vec q = state_to_vec(s, v);
    return q.linf() < 2.0 * delta && s.rho() > 0.0;
}

void require_in_ball(const GasParams& p, const State& s, Variant v) {
    if (!in_ball(s, p.delta_ball, v))
        throw std::domain_error("state outside the admissible 2*delta ball");
}

double sound_speed(const GasParams& p, const State& s) {
    const double rho = s.rho();
    if (!(rho > 0.0)) throw std::domain_error("non-positive density");
    const double c2 = p.A * p.gamma * std::exp(s.S) * std::pow(rho, p.gamma - 1.0);
    return std::sqrt(c2);
}

WaveSpeeds wave_speeds(const GasParams& p, const State& s) {
    const double rho = s.rho();
    if (!(rho > 0.0)) throw std::domain_error("non-positive density");
    const double c2 = p.A * p.gamma * std::exp(s.S) * std::pow(rho, p.gamma - 1.0);
    const double hh = p.mu0 / rho * (p.H1 * p.H1 + s.H2 * s.H2);
    const double T = hh + c2;
    double disc = T * T - 4.0 * p.mu0 / rho * p.H1 * p.H1 * c2;
    if (disc < 0.0) {
        if (disc < -1e-14) throw std::runtime_error("negative magnetosonic discriminant");
        disc = 0.0;
    }
    WaveSpeeds ws;
    const double cf2 = 0.5 * (T + std::sqrt(disc));
    ws.cf = std::sqrt(cf2);
    // C_s^2 from the Vieta product C_f^2 C_s^2 = mu0 H1^2 c^2 / rho; avoids the
    // cancellation in (T - sqrt(disc))/2 at small H2.
    ws.cs = p.H1 == 0.0 ? 0.0 : std::sqrt(p.mu0 * p.H1 * p.H1 * c2 / (rho * cf2));
    return ws;
}

}  // namespace shocklab
