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

#ifndef GEOECON_QUBIT_EVOLUTION_HPP
#define GEOECON_QUBIT_EVOLUTION_HPP

#include <array>
#include <functional>

#include "geoecon/complex_matrix.hpp"

namespace geoecon {

/// Time-dependent real coefficients (h_0, h_1, h_2, h_3) of a single-qubit
/// Hamiltonian h_0 sigma_0 + h_1 sigma_1 + h_2 sigma_2 + h_3 sigma_3 (hbar = 1).
struct HamiltonianCoeffs {
    std::function<std::array<double, 4>(double)> h;
};

/// Real 4-vector q = (u, v1, v2, v3) generating the single-qubit evolution
/// operator u sigma_0 + i sum_k v_k sigma_k. The generator is antisymmetric,
/// so u^2 + |v|^2 stays 1 along the flow.
struct EvolutionQuaternion {
    double u = 1.0;
    std::array<double, 3> v{0.0, 0.0, 0.0};

    double norm() const;
};

/// Two-valued wealth spectrum E_a > E_d with the derived mean and half range.
struct WealthSpectrum {
    WealthSpectrum(double alive, double dead);

    double alive;
    double dead;

    double mean() const { return 0.5 * (alive + dead); }
    double half_range() const { return 0.5 * (alive - dead); }

    /// Constant coefficients (E_m, 0, 0, Delta) of the fixed-spectrum case.
    HamiltonianCoeffs coeffs() const;
};

/// Bloch 3-vector of a qubit density matrix rho = (sigma_0 + r.sigma)/2.
struct BlochState {
    std::array<double, 3> r{0.0, 0.0, 0.0};

    double norm() const;
};

/// RK4 solution of dq/dt = M(t) q with the antisymmetric generator built from
/// (h_1, h_2, h_3), starting from q(t0) = (1, 0, 0, 0). Fixed step; the final
/// partial step is shortened to land exactly on t.
EvolutionQuaternion integrate_q(const HamiltonianCoeffs& h, double t0, double t,
                                double step = 1e-3);

/// Fixed-spectrum closed form (cos[(t-t0) Delta], 0, 0, -sin[(t-t0) Delta]).
EvolutionQuaternion closed_form_q(const WealthSpectrum& spec, double t0, double t);

/// Integral of h_0 over [t0, t] by composite Simpson on the same step grid;
/// contributes only a global phase to the evolution operator.
double phase_integral(const HamiltonianCoeffs& h, double t0, double t, double step = 1e-3);

/// e^{-i phase} [u sigma_0 + i (v1 sigma_1 + v2 sigma_2 + v3 sigma_3)].
/// Requires |q| = 1 within 1e-6.
ComplexMatrix build_unitary(const EvolutionQuaternion& q, double phase);

/// Conjugates rho(0) = (sigma_0 + r.sigma)/2 by U and reads the Bloch vector
/// back off the result. Norm-preserving up to round-off.
BlochState evolve_density(const BlochState& r0, const ComplexMatrix& u);

/// Which closed-form trajectory to evaluate: the literal displayed formula
/// (r1 rotates into the r2 component's place but r2 itself stays fixed; not
/// norm-preserving) or exact conjugation by the fixed-spectrum evolution
/// operator (a joint rotation of (r1, r2)).
enum class TrajectorySource { paper, exact };

BlochState paper_trajectory(const BlochState& r0, double delta, double t);
BlochState exact_trajectory(const BlochState& r0, double delta, double t);
BlochState trajectory_point(const BlochState& r0, double delta, double t,
                            TrajectorySource source);

struct TrajectoryDerivatives {
    std::array<double, 3> velocity{0.0, 0.0, 0.0};
    std::array<double, 3> acceleration{0.0, 0.0, 0.0};
};

/// Analytic first and second time derivatives of the selected trajectory.
TrajectoryDerivatives trajectory_derivatives(const BlochState& r0, double delta, double t,
                                             TrajectorySource source);

}  // namespace geoecon

#endif
