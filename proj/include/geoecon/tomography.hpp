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

#ifndef GEOECON_TOMOGRAPHY_HPP
#define GEOECON_TOMOGRAPHY_HPP

#include <array>
#include <cstdint>

#include "geoecon/qubit_evolution.hpp"

namespace geoecon {

/// Projective-measurement counts along the three Bloch axes: alive/dead
/// outcomes per axis. Each axis needs at least one shot.
struct CountTriplet {
    std::array<long long, 3> alive{0, 0, 0};
    std::array<long long, 3> dead{0, 0, 0};

    long long total(std::size_t axis) const { return alive[axis] + dead[axis]; }
};

struct TomographyResult {
    BlochState state;
    /// False when sampling noise pushed the estimate outside the Bloch ball;
    /// the estimate is reported as-is, never projected back.
    bool physical;
};

/// Direct inversion r^j = (N_a - N_d) / N per axis.
TomographyResult direct_inversion(const CountTriplet& counts);

/// Convenience entry for exact alive-probabilities; r^j = 2 p_j - 1.
TomographyResult from_probabilities(const std::array<double, 3>& p_alive);

/// Binomial sampling of the three axis measurements of a known state.
CountTriplet sample_counts(const BlochState& r, long long shots_per_axis, std::uint64_t seed);

}  // namespace geoecon

#endif
