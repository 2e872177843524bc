#pragma once

#include <string>

#include "shocklab/smallmat.hpp"

namespace shocklab {

enum class Variant { mhd_h1_nonzero, mhd_h1_zero, euler };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);
int variant_dim(Variant v);

// Physical constants and the admissible state-ball radius.
struct GasParams {
    double A = 1.0;
    double gamma = 2.0;
    double mu0 = 1.0;
    double H1 = 0.05;
    double delta_ball = 0.05;

    void validate() const;  // throws std::invalid_argument
};

// Planar state (u1, u2, rho-1, H2, S); H2 unused for the euler variant.
struct State {
    double u1 = 0.0;
    double u2 = 0.0;
    double rho_m1 = 0.0;
    double H2 = 0.0;
    double S = 0.0;

    double rho() const { return 1.0 + rho_m1; }
};

Vec state_to_vec(const State& s, Variant v);
State state_from_vec(const Vec& q, Variant v);

// Max-norm ball membership |Phi| < 2*delta.
bool in_ball(const State& s, double delta, Variant v);
void require_in_ball(const GasParams& p, const State& s, Variant v);

double sound_speed(const GasParams& p, const State& s);

struct WaveSpeeds {
    double cf = 0.0;
    double cs = 0.0;
};

// Fast/slow magnetosonic speeds; the discriminant is clamped at zero when it
// falls in [-1e-14, 0) from round-off, below that it is a numerical-domain error.
WaveSpeeds wave_speeds(const GasParams& p, const State& s);

}  // namespace shocklab
