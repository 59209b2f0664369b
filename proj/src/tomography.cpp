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

#include "geoecon/tomography.hpp"

#include <random>
#include <stdexcept>

namespace geoecon {

TomographyResult direct_inversion(const CountTriplet& counts) {
    TomographyResult out;
    for (std::size_t j = 0; j < 3; ++j) {
        if (counts.alive[j] < 0 || counts.dead[j] < 0) {
            throw std::invalid_argument("direct_inversion: counts must be non-negative");
        }
        const long long total = counts.total(j);
        if (total < 1) {
            throw std::invalid_argument("direct_inversion: zero total on an axis");
        }
        out.state.r[j] = static_cast<double>(counts.alive[j] - counts.dead[j]) /
                         static_cast<double>(total);
    }
    out.physical = out.state.norm() <= 1.0;
    return out;
}

TomographyResult from_probabilities(const std::array<double, 3>& p_alive) {
    TomographyResult out;
    for (std::size_t j = 0; j < 3; ++j) {
        if (!(p_alive[j] >= 0.0 && p_alive[j] <= 1.0)) {
            throw std::invalid_argument("from_probabilities: probabilities must be in [0, 1]");
        }
        out.state.r[j] = 2.0 * p_alive[j] - 1.0;
    }
    out.physical = out.state.norm() <= 1.0;
    return out;
}

CountTriplet sample_counts(const BlochState& r, long long shots_per_axis, std::uint64_t seed) {
    if (shots_per_axis < 1) {
        throw std::invalid_argument("sample_counts: need at least one shot per axis");
    }
    if (r.norm() > 1.0 + 1e-12) {
        throw std::invalid_argument("sample_counts: state outside the Bloch ball");
    }
    std::mt19937_64 rng(seed);
    CountTriplet counts;
    for (std::size_t j = 0; j < 3; ++j) {
        const double p = 0.5 * (1.0 + r.r[j]);
        std::binomial_distribution<long long> dist(shots_per_axis, std::min(1.0, std::max(0.0, p)));
        counts.alive[j] = dist(rng);
        counts.dead[j] = shots_per_axis - counts.alive[j];
    }
    return counts;
}

}  // namespace geoecon
