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

#ifndef GEOECON_OPEN_SYSTEM_HPP
#define GEOECON_OPEN_SYSTEM_HPP

#include <functional>
#include <vector>

#include "geoecon/expr.hpp"

namespace geoecon {

using RealVector = std::vector<double>;

/// Small dense real square matrix for forcing-space metrics.
class SquareMatrix {
  public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size);
    static SquareMatrix identity(std::size_t size);

    std::size_t size() const { return size_; }
    double& operator()(std::size_t row, std::size_t col) { return a_[row * size_ + col]; }
    double operator()(std::size_t row, std::size_t col) const { return a_[row * size_ + col]; }

    /// Gauss-Jordan inverse with partial pivoting; reports an infinity-norm
    /// condition estimate through `condition` when given.
    SquareMatrix inverse(double* condition = nullptr) const;

    double max_abs_diff(const SquareMatrix& other) const;

  private:
    std::size_t size_ = 0;
    std::vector<double> a_;
};

/// Wealth-loss rate model: beta and the rate omega-dot as a function of the
/// forcing coefficients and their velocities. Quasi-static means the rate
/// vanishes at zero velocity.
struct RateModel {
    double beta = 1.0;
    std::function<double(const RealVector& lambda, const RealVector& velocity)> rate;
};

/// Dissipation metric on forcing space: callable g(lambda), symmetric PSD.
struct MetricProvider {
    enum class Kind { analytic, from_rate };

    std::size_t alpha = 0;
    Kind kind = Kind::analytic;
    std::function<SquareMatrix(const RealVector& lambda)> evaluate;

    static MetricProvider constant(SquareMatrix g);
    static MetricProvider analytic(std::size_t alpha,
                                   std::function<SquareMatrix(const RealVector&)> fn);
    /// 1-D g(lambda) = 1/lambda^2, the worked analytic example.
    static MetricProvider inverse_square_1d();
    /// Entries from expressions in l1..l_alpha: either alpha*alpha entries
    /// (row-major) or a single expression used as an isotropic diagonal.
    static MetricProvider from_exprs(std::size_t alpha, const std::vector<Expr>& entries);
    static MetricProvider from_rate(RateModel model, double fd_step = 1e-4);
};

/// beta/2 times the velocity Hessian of the rate at zero velocity, by central
/// second differences with per-component step fd_step * (|lambda_j| + 1).
/// The normalization reproduces g exactly for rate = sum v g v.
SquareMatrix metric_from_rate(const RateModel& model, const RealVector& lambda, double fd_step);

/// Gamma^j_kl flattened as [j][k][l] with k,l symmetric.
struct OpenChristoffel {
    std::size_t alpha = 0;
    std::vector<double> values;

    double at(std::size_t j, std::size_t k, std::size_t l) const {
        return values[(j * alpha + k) * alpha + l];
    }
    double& at(std::size_t j, std::size_t k, std::size_t l) {
        return values[(j * alpha + k) * alpha + l];
    }
};

/// Levi-Civita connection of the provider's metric by central finite
/// differences of g, step fd_step * (|lambda_j| + 1) per direction.
/// Throws if the metric is singular (condition estimate above 1e8).
OpenChristoffel christoffel_fd(const MetricProvider& provider, const RealVector& lambda,
                               double fd_step = 1e-4);

/// Time-sampled forcing trajectory with uniform step.
struct ControlPath {
    std::vector<double> times;
    std::vector<RealVector> samples;
    bool truncated = false;  // the integrator hit a singular metric
};

ControlPath integrate_geodesic_open(const MetricProvider& provider, const RealVector& lambda0,
                                    const RealVector& v0, double duration, double step,
                                    double fd_step = 1e-4);

/// Trapezoidal integral of v g(lambda) v along the path with
/// central-difference velocities (one-sided at the endpoints).
double dissipation_integral(const MetricProvider& provider, const ControlPath& path);

}  // namespace geoecon

#endif
