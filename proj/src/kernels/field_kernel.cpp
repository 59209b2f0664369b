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

#include "geoecon/kernels/field_kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "geoecon/entropy_geometry.hpp"

namespace geoecon::kernels {

void eval_scalar(const FieldParams& params, const double* r1, const double* r2,
                 std::size_t count, double* a_out, std::uint8_t* mask_out) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < count; ++i) {
        const double p1 = r1[i];
        const double p2 = r2[i];
        const double p3 = params.r3_0;
        // Same association order as the SIMD variant so the domain masks
        // agree bit for bit.
        const double norm0_sq = (p1 * p1 + p2 * p2) + p3 * p3;
        if (!(norm0_sq < 1.0)) {
            a_out[i] = nan;
            mask_out[i] = 1;
            continue;
        }
        const BlochState start{{p1, p2, p3}};
        const BlochState at = trajectory_point(start, params.delta, params.eval_time,
                                               params.source);
        if (!(at.norm() <= params.r_max)) {
            a_out[i] = nan;
            mask_out[i] = 1;
            continue;
        }
        const TrajectoryDerivatives d =
            trajectory_derivatives(start, params.delta, params.eval_time, params.source);
        const GeodesicResidual res =
            geodesic_residual(at, d.velocity, d.acceleration, params.r_max);
        a_out[i] = res.unsustainability;
        mask_out[i] = 0;
    }
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

FieldKernelFn select(Choice choice) {
    switch (choice) {
        case Choice::scalar:
            return &eval_scalar;
        case Choice::avx2:
#if defined(__x86_64__) || defined(__i386__)
            if (avx2_supported()) {
                return &eval_avx2;
            }
#endif
            throw std::runtime_error("field kernel: AVX2 requested but not supported here");
        case Choice::automatic:
        default:
#if defined(__x86_64__) || defined(__i386__)
            if (avx2_supported()) {
                return &eval_avx2;
            }
#endif
            return &eval_scalar;
    }
}

const char* resolved_name(Choice choice) {
    switch (choice) {
        case Choice::scalar: return "scalar";
        case Choice::avx2: return "avx2";
        case Choice::automatic:
        default: return avx2_supported() ? "avx2" : "scalar";
    }
}

Choice parse_choice(const std::string& name) {
    if (name == "auto" || name == "automatic") {
        return Choice::automatic;
    }
    if (name == "scalar") {
        return Choice::scalar;
    }
    if (name == "avx2") {
        return Choice::avx2;
    }
    throw std::invalid_argument("field kernel: unknown kernel '" + name + "'");
}

}  // namespace geoecon::kernels
