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

#ifndef GEOECON_KERNELS_FIELD_KERNEL_HPP
#define GEOECON_KERNELS_FIELD_KERNEL_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "geoecon/qubit_evolution.hpp"

namespace geoecon::kernels {

/// Parameters shared by every point of one unsustainability-field sweep.
struct FieldParams {
    double delta = 0.0;
    double eval_time = 0.0;
    double r3_0 = 0.0;
    double r_max = 0.999;
    TrajectorySource source = TrajectorySource::paper;
};

/// Batch kernel: for `count` initial mixings (r1[i], r2[i], params.r3_0),
/// writes the unsustainability A at params.eval_time into a_out[i] and the
/// domain mask into mask_out[i] (1 = masked, a_out[i] = NaN).
using FieldKernelFn = void (*)(const FieldParams& params, const double* r1, const double* r2,
                               std::size_t count, double* a_out, std::uint8_t* mask_out);

enum class Choice { automatic, scalar, avx2 };

/// Scalar reference kernel, composed from the trajectory and geometry
/// modules point by point.
void eval_scalar(const FieldParams& params, const double* r1, const double* r2,
                 std::size_t count, double* a_out, std::uint8_t* mask_out);

#if defined(__x86_64__) || defined(__i386__)
/// Four-wide AVX2 variant of eval_scalar; equivalence-tested against it.
void eval_avx2(const FieldParams& params, const double* r1, const double* r2, std::size_t count,
               double* a_out, std::uint8_t* mask_out);
#endif

bool avx2_supported();

/// Resolves a kernel choice against the host CPU. `automatic` prefers AVX2;
/// asking for AVX2 on a CPU without it throws.
FieldKernelFn select(Choice choice);

/// Name of the kernel `automatic` resolves to on this host.
const char* resolved_name(Choice choice);

Choice parse_choice(const std::string& name);

}  // namespace geoecon::kernels

#endif
