// Copyright 2026 The geoecon developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEOECON_ENTROPY_GEOMETRY_HPP
#define GEOECON_ENTROPY_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "geoecon/qubit_evolution.hpp"

namespace geoecon {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Christoffel3 = std::array<Mat3, 3>;

/// Metric evaluations clamp their domain at this Bloch-ball radius; the
/// entropy Hessian diverges on the boundary.
inline constexpr double kDefaultRMax = 0.999;

namespace radial {

// Radial profile functions of x = |r|, shared by the scalar path and the
// SIMD field kernels. Each switches to its Taylor series near the origin
// where the closed form loses digits to cancellation.

/// artanh(x)/x, continued to 1 at x = 0.
double artanh_over_x(double x);

/// (1/(1-x^2) - artanh(x)/x) / x^2, continued to 2/3 at x = 0.
double bracket_over_x2(double x);

/// d/dx of bracket_over_x2, continued to 0 at x = 0.
double bracket_over_x2_deriv(double x);

inline constexpr double kSeriesThreshold = 0.05;

}  // namespace radial

/// Von Neumann entropy of the state with Bloch vector r: the eigenvalues of
/// rho are (1 +- |r|)/2. Natural logarithm; 0 log 0 reads as 0.
double entropy(const BlochState& r);

/// chi_j = r^j artanh|r| / |r| = -dS/dr^j; diverges as |r| -> 1.
std::array<double, 3> dual_coords(const BlochState& r);

/// Legendre transform F = S + r.chi of the entropy.
double legendre_transform(const BlochState& r);

struct MetricAtPoint {
    Mat3 g_cov;
    Mat3 g_contra;
    BlochState at;
};

/// Covariant metric -d^2 S (and its closed-form inverse) at r.
/// Throws if |r| exceeds r_max.
MetricAtPoint metric(const BlochState& r, double r_max = kDefaultRMax);

/// Fully symmetric covariant Christoffel symbols -1/2 d^3 S.
Christoffel3 christoffel(const BlochState& r, double r_max = kDefaultRMax);

struct GeodesicResidual {
    std::array<double, 3> residual;
    double unsustainability;  // Euclidean norm of the residual
};

/// Left-hand side of the geodesic equation evaluated on an arbitrary
/// trajectory point: residual^j = a^j + g^{jk} Gamma_klm v^l v^m. Its norm
/// is the unsustainability estimate A.
GeodesicResidual geodesic_residual(const BlochState& r, const std::array<double, 3>& velocity,
                                   const std::array<double, 3>& acceleration,
                                   double r_max = kDefaultRMax);

struct GeodesicPath {
    std::vector<double> times;
    std::vector<BlochState> points;
    std::vector<std::array<double, 3>> velocities;
    bool domain_exit = false;  // true if |r| reached r_max before `duration`
};

/// RK4 integration of the geodesic equation from (r0, v0). Stops early with
/// domain_exit set if the path reaches the r_max sphere.
GeodesicPath integrate_geodesic(const BlochState& r0, const std::array<double, 3>& v0,
                                double duration, double step, double r_max = kDefaultRMax);

/// Unsustainability A over a square grid of initial mixings (r1(0), r2(0))
/// in [-1, 1]^2 at a fixed evaluation time, r3(0) held fixed. Cells are
/// masked (value NaN) where the initial point is not strictly inside the
/// Bloch ball or the trajectory point at eval_time leaves the metric domain.
struct SustainabilityField {
    double delta = 0.0;
    double eval_time = 0.0;
    double grid_step = 0.0;
    double r3_0 = 0.0;
    TrajectorySource source = TrajectorySource::paper;
    std::size_t points = 0;               // per axis
    std::vector<double> values;           // row-major: [i1 * points + i2]
    std::vector<std::uint8_t> masked;

    double coordinate(std::size_t index) const {
        return -1.0 + grid_step * static_cast<double>(index);
    }
    double value(std::size_t i1, std::size_t i2) const { return values[i1 * points + i2]; }
    bool is_masked(std::size_t i1, std::size_t i2) const {
        return masked[i1 * points + i2] != 0;
    }
};

struct GridOptions {
    double grid_step = 0.01;
    double r3_0 = 0.0;
    TrajectorySource source = TrajectorySource::paper;
    int workers = 1;
    int kernel = 0;  // kernels::Choice; kept as int to avoid a header cycle
    double r_max = kDefaultRMax;
};

SustainabilityField sustainability_grid(double delta, double eval_time,
                                        const GridOptions& options = {});

/// Fraction of admissible initial mixings (cells strictly inside the unit
/// disc) whose unsustainability falls below the threshold.
double shaded_fraction(const SustainabilityField& field, double threshold);

}  // namespace geoecon

#endif
