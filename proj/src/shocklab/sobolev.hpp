#pragma once

#include <functional>
#include <span>
#include <vector>

#include "shocklab/initial_data.hpp"

namespace shocklab {

// Sampling box and Sobolev exponent for the 2-D spectral quadrature.
// nx, ny are powers of two, the box encloses the support with zero padding.
struct SpectralGrid {
    int nx = 0, ny = 0;
    double x0 = 0.0, y0 = 0.0;  // lower-left corner
    double Lx = 0.0, Ly = 0.0;
    double s = 0.75;

    double dx() const { return Lx / nx; }
    double dy() const { return Ly / ny; }
};

// Box for the data family: pad x support width by pad_x, pad 2*y_max(2 eta)
// by pad_y, and check the Nyquist rule against the finest x2 feature.
SpectralGrid grid_for_family(const DataParams& dp, double s, int nx, int ny, double pad = 8.0);

// Row-major nx*ny samples of f at cell centers.
std::vector<double> sample_field(const SpectralGrid& g,
                                 const std::function<double(double, double)>& f);
std::vector<double> sample_w1(const SpectralGrid& g, const DataParams& dp);

// Homogeneous-Sobolev norm squared by midpoint quadrature over DFT bins.
// The zero bin is weighted 0 for s > 0. Every call verifies Parseval at
// s = 0 against the spatial sum (1e-6 relative) and rejects fields whose
// support touches the box boundary.
double hdot_norm(const SpectralGrid& g, std::span<const double> f);

struct RegionBreakdown {
    double total = 0.0;
    double d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0;
};

// Same quadrature partitioned by the thresholds |xi1| <> 1/eta and
// |xi2| <> |ln eta|^delta / sqrt(eta).
RegionBreakdown region_breakdown(const SpectralGrid& g, std::span<const double> f,
                                 const DataParams& dp);

struct EtaSweepRow {
    double eta = 0.0;
    double norm2 = 0.0;
    double d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0;
};

struct EtaSweep {
    std::vector<EtaSweepRow> rows;
    double fit_exponent = 0.0;  // slope of log norm2 against log|ln eta|
    bool decreasing = false;
    bool pass = false;
    bool truncated = false;
};

EtaSweep eta_sweep(const DataParams& tmpl, std::span<const double> etas, double s, int nx,
                   int ny);

}  // namespace shocklab
