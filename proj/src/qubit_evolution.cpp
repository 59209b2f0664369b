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

#include "geoecon/qubit_evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "geoecon/pauli.hpp"

namespace geoecon {

namespace {

using Vec4 = std::array<double, 4>;

// dq/dt = M(t) q with the antisymmetric generator of (h1, h2, h3).
Vec4 generator_apply(const std::array<double, 4>& h, const Vec4& q) {
    const double h1 = h[1];
    const double h2 = h[2];
    const double h3 = h[3];
    if (!std::isfinite(h1) || !std::isfinite(h2) || !std::isfinite(h3)) {
        throw std::domain_error("integrate_q: non-finite Hamiltonian coefficients");
    }
    return Vec4{h1 * q[1] + h2 * q[2] + h3 * q[3],
                -h1 * q[0] - h3 * q[2] + h2 * q[3],
                -h2 * q[0] + h3 * q[1] - h1 * q[3],
                -h3 * q[0] - h2 * q[1] + h1 * q[2]};
}

Vec4 axpy(const Vec4& q, double a, const Vec4& d) {
    return Vec4{q[0] + a * d[0], q[1] + a * d[1], q[2] + a * d[2], q[3] + a * d[3]};
}

}  // namespace

double EvolutionQuaternion::norm() const {
    return std::sqrt(u * u + v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

WealthSpectrum::WealthSpectrum(double alive_value, double dead_value)
    : alive(alive_value), dead(dead_value) {
    if (!(alive > dead)) {
        throw std::invalid_argument("WealthSpectrum: requires E_a > E_d");
    }
}

HamiltonianCoeffs WealthSpectrum::coeffs() const {
    const double em = mean();
    const double delta = half_range();
    return HamiltonianCoeffs{[em, delta](double) {
        return std::array<double, 4>{em, 0.0, 0.0, delta};
    }};
}

double BlochState::norm() const {
    return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
}

EvolutionQuaternion integrate_q(const HamiltonianCoeffs& h, double t0, double t, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("integrate_q: step must be > 0");
    }
    if (t < t0) {
        throw std::invalid_argument("integrate_q: requires t >= t0");
    }
    Vec4 q{1.0, 0.0, 0.0, 0.0};
    double time = t0;
    while (time < t) {
        const double dt = std::min(step, t - time);
        const Vec4 k1 = generator_apply(h.h(time), q);
        const Vec4 k2 = generator_apply(h.h(time + 0.5 * dt), axpy(q, 0.5 * dt, k1));
        const Vec4 k3 = generator_apply(h.h(time + 0.5 * dt), axpy(q, 0.5 * dt, k2));
        const Vec4 k4 = generator_apply(h.h(time + dt), axpy(q, dt, k3));
        for (int i = 0; i < 4; ++i) {
            q[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        time += dt;
    }
    return EvolutionQuaternion{q[0], {q[1], q[2], q[3]}};
}

EvolutionQuaternion closed_form_q(const WealthSpectrum& spec, double t0, double t) {
    const double angle = (t - t0) * spec.half_range();
    return EvolutionQuaternion{std::cos(angle), {0.0, 0.0, -std::sin(angle)}};
}

double phase_integral(const HamiltonianCoeffs& h, double t0, double t, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("phase_integral: step must be > 0");
    }
    if (t == t0) {
        return 0.0;
    }
    const double h0 = [&](double tau) {
        const double value = h.h(tau)[0];
        if (!std::isfinite(value)) {
            throw std::domain_error("phase_integral: non-finite h_0");
        }
        return value;
    }(t0);
    // Composite Simpson over an even number of subintervals covering [t0, t].
    const auto n_raw = static_cast<std::size_t>(std::ceil((t - t0) / step));
    const std::size_t n = n_raw + (n_raw % 2 == 0 ? 0 : 1);
    const double dt = (t - t0) / static_cast<double>(n);
    double sum = h0 + h.h(t)[0];
    for (std::size_t i = 1; i < n; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * h.h(t0 + dt * static_cast<double>(i))[0];
    }
    return sum * dt / 3.0;
}

ComplexMatrix build_unitary(const EvolutionQuaternion& q, double phase) {
    if (std::abs(q.norm() - 1.0) > 1e-6) {
        throw std::invalid_argument("build_unitary: q is not normalized");
    }
    ComplexMatrix u(2);
    u += Complex{q.u, 0.0} * sigma(0);
    for (int k = 0; k < 3; ++k) {
        u += Complex{0.0, q.v[static_cast<std::size_t>(k)]} * sigma(k + 1);
    }
    return std::exp(Complex{0.0, -phase}) * u;
}

BlochState evolve_density(const BlochState& r0, const ComplexMatrix& u) {
    if (u.dim() != 2 || !u.is_unitary(1e-8)) {
        throw std::invalid_argument("evolve_density: U must be a 2x2 unitary");
    }
    ComplexMatrix rho(2);
    rho += Complex{0.5, 0.0} * sigma(0);
    for (int k = 0; k < 3; ++k) {
        rho += Complex{0.5 * r0.r[static_cast<std::size_t>(k)], 0.0} * sigma(k + 1);
    }
    const ComplexMatrix evolved = u * rho * u.adjoint();
    BlochState out;
    for (int k = 0; k < 3; ++k) {
        out.r[static_cast<std::size_t>(k)] = (evolved * sigma(k + 1)).trace().real();
    }
    return out;
}

BlochState paper_trajectory(const BlochState& r0, double delta, double t) {
    const double angle = 2.0 * t * delta;
    return BlochState{{r0.r[0] * std::cos(angle) + r0.r[1] * std::sin(angle), r0.r[1], r0.r[2]}};
}

BlochState exact_trajectory(const BlochState& r0, double delta, double t) {
    const double angle = 2.0 * t * delta;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return BlochState{{r0.r[0] * c + r0.r[1] * s, -r0.r[0] * s + r0.r[1] * c, r0.r[2]}};
}

BlochState trajectory_point(const BlochState& r0, double delta, double t,
                            TrajectorySource source) {
    return source == TrajectorySource::paper ? paper_trajectory(r0, delta, t)
                                             : exact_trajectory(r0, delta, t);
}

TrajectoryDerivatives trajectory_derivatives(const BlochState& r0, double delta, double t,
                                             TrajectorySource source) {
    const double angle = 2.0 * t * delta;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double w = 2.0 * delta;
    TrajectoryDerivatives out;
    const double r1t = r0.r[0] * c + r0.r[1] * s;
    const double d_r1 = w * (-r0.r[0] * s + r0.r[1] * c);
    out.velocity[0] = d_r1;
    out.acceleration[0] = -w * w * r1t;
    if (source == TrajectorySource::exact) {
        const double r2t = -r0.r[0] * s + r0.r[1] * c;
        out.velocity[1] = -w * r1t;
        out.acceleration[1] = -w * w * r2t;
    }
    return out;
}

}  // namespace geoecon
