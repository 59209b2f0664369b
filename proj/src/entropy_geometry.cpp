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

#include "geoecon/entropy_geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "geoecon/kernels/field_kernel.hpp"

namespace geoecon {

namespace radial {

double artanh_over_x(double x) {
    // Series: sum x^{2k} / (2k+1). Only needed very close to 0; two terms
    // already reach full precision below 1e-4.
    if (x < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 3.0 + x2 * x2 / 5.0;
    }
    return std::atanh(x) / x;
}

double bracket_over_x2(double x) {
    const double x2 = x * x;
    if (x < kSeriesThreshold) {
        // sum_{k>=1} (2k/(2k+1)) x^{2k-2}
        double sum = 0.0;
        double pow = 1.0;
        for (int k = 1; k <= 12; ++k) {
            sum += (2.0 * k / (2.0 * k + 1.0)) * pow;
            pow *= x2;
        }
        return sum;
    }
    return (1.0 / (1.0 - x2) - artanh_over_x(x)) / x2;
}

double bracket_over_x2_deriv(double x) {
    const double x2 = x * x;
    if (x < kSeriesThreshold) {
        // term-wise derivative: sum_{k>=2} (2k/(2k+1)) (2k-2) x^{2k-3}
        double sum = 0.0;
        double pow = x;
        for (int k = 2; k <= 13; ++k) {
            sum += (2.0 * k / (2.0 * k + 1.0)) * (2.0 * k - 2.0) * pow;
            pow *= x2;
        }
        return sum;
    }
    const double one_minus = 1.0 - x2;
    const double x3 = x2 * x;
    return -3.0 / (x3 * one_minus) + 2.0 / (x * one_minus * one_minus) +
           3.0 * std::atanh(x) / (x3 * x);
}

}  // namespace radial

namespace {

void require_in_ball(double x) {
    if (x > 1.0 + 1e-12) {
        throw std::domain_error("entropy geometry: |r| exceeds 1");
    }
}

void require_in_domain(double x, double r_max) {
    if (!(x <= r_max)) {
        throw std::domain_error("entropy geometry: |r| exceeds the metric domain");
    }
}

}  // namespace

double entropy(const BlochState& r) {
    const double x = r.norm();
    require_in_ball(x);
    const double xc = std::min(x, 1.0);
    const double xi1 = 0.5 * (1.0 + xc);
    const double xi2 = 0.5 * (1.0 - xc);
    double s = 0.0;
    if (xi1 > 0.0) {
        s -= xi1 * std::log(xi1);
    }
    if (xi2 > 0.0) {
        s -= xi2 * std::log(xi2);
    }
    return s;
}

std::array<double, 3> dual_coords(const BlochState& r) {
    const double x = r.norm();
    if (x >= 1.0) {
        throw std::domain_error("dual_coords: diverges for |r| >= 1");
    }
    const double a = radial::artanh_over_x(x);
    return {r.r[0] * a, r.r[1] * a, r.r[2] * a};
}

double legendre_transform(const BlochState& r) {
    const double x = r.norm();
    if (x >= 1.0) {
        throw std::domain_error("legendre_transform: diverges for |r| >= 1");
    }
    // S + r.chi = S + x^2 * artanh(x)/x
    return entropy(r) + x * x * radial::artanh_over_x(x);
}

MetricAtPoint metric(const BlochState& r, double r_max) {
    const double x = r.norm();
    require_in_domain(x, r_max);
    const double a = radial::artanh_over_x(x);
    const double b = radial::bracket_over_x2(x);
    const double x2 = x * x;
    MetricAtPoint out;
    out.at = r;
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            const double rr = r.r[static_cast<std::size_t>(j)] * r.r[static_cast<std::size_t>(k)];
            const double radial_cov = rr * b;
            // Contravariant closed form, written so the x -> 0 limit is exact:
            // (1-x^2) rr/x^2 + (1/a)(delta - rr/x^2)
            double radial_contra = 0.0;
            if (x2 > 0.0) {
                radial_contra = (rr / x2) * ((1.0 - x2) - 1.0 / a);
            }
            const double delta = (j == k) ? 1.0 : 0.0;
            out.g_cov[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                radial_cov + delta * a;
            out.g_contra[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                radial_contra + delta / a;
        }
    }
    return out;
}

Christoffel3 christoffel(const BlochState& r, double r_max) {
    const double x = r.norm();
    require_in_domain(x, r_max);
    const double b = radial::bracket_over_x2(x);
    // Gamma_jkl = (r^j d_kl + r^k d_jl + r^l d_jk)/2 * b
    //           + r^j r^k r^l * c / (2x),  with c = d/dx bracket_over_x2.
    // c/x is finite at the origin (c is odd and O(x)); guard the 0/0.
    const double c_over_x = (x > 0.0) ? radial::bracket_over_x2_deriv(x) / x : 0.0;
    Christoffel3 out;
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t l = 0; l < 3; ++l) {
                const double sym = r.r[j] * (k == l ? 1.0 : 0.0) + r.r[k] * (j == l ? 1.0 : 0.0) +
                                   r.r[l] * (j == k ? 1.0 : 0.0);
                out[j][k][l] = 0.5 * sym * b + 0.5 * r.r[j] * r.r[k] * r.r[l] * c_over_x;
            }
        }
    }
    return out;
}

GeodesicResidual geodesic_residual(const BlochState& r, const std::array<double, 3>& velocity,
                                   const std::array<double, 3>& acceleration, double r_max) {
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(velocity[static_cast<std::size_t>(i)]) ||
            !std::isfinite(acceleration[static_cast<std::size_t>(i)])) {
            throw std::domain_error("geodesic_residual: non-finite derivatives");
        }
    }
    const MetricAtPoint m = metric(r, r_max);
    const Christoffel3 gamma = christoffel(r, r_max);
    GeodesicResidual out;
    // lower-index contraction first: w_k = Gamma_klm v^l v^m
    std::array<double, 3> w{};
    for (std::size_t k = 0; k < 3; ++k) {
        double acc = 0.0;
        for (std::size_t l = 0; l < 3; ++l) {
            for (std::size_t mm = 0; mm < 3; ++mm) {
                acc += gamma[k][l][mm] * velocity[l] * velocity[mm];
            }
        }
        w[k] = acc;
    }
    double norm2 = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        double value = acceleration[j];
        for (std::size_t k = 0; k < 3; ++k) {
            value += m.g_contra[j][k] * w[k];
        }
        out.residual[j] = value;
        norm2 += value * value;
    }
    out.unsustainability = std::sqrt(norm2);
    return out;
}

namespace {

std::array<double, 3> geodesic_rhs(const BlochState& r, const std::array<double, 3>& v,
                                   double r_max) {
    const MetricAtPoint m = metric(r, r_max);
    const Christoffel3 gamma = christoffel(r, r_max);
    std::array<double, 3> w{};
    for (std::size_t k = 0; k < 3; ++k) {
        double acc = 0.0;
        for (std::size_t l = 0; l < 3; ++l) {
            for (std::size_t mm = 0; mm < 3; ++mm) {
                acc += gamma[k][l][mm] * v[l] * v[mm];
            }
        }
        w[k] = acc;
    }
    std::array<double, 3> out{};
    for (std::size_t j = 0; j < 3; ++j) {
        double value = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
            value += m.g_contra[j][k] * w[k];
        }
        out[j] = -value;
    }
    return out;
}

}  // namespace

GeodesicPath integrate_geodesic(const BlochState& r0, const std::array<double, 3>& v0,
                                double duration, double step, double r_max) {
    if (!(step > 0.0) || !(duration >= 0.0)) {
        throw std::invalid_argument("integrate_geodesic: step and duration must be positive");
    }
    if (!(r0.norm() < r_max)) {
        throw std::domain_error("integrate_geodesic: initial point outside the metric domain");
    }
    GeodesicPath path;
    BlochState r = r0;
    std::array<double, 3> v = v0;
    double t = 0.0;
    path.times.push_back(t);
    path.points.push_back(r);
    path.velocities.push_back(v);
    while (t < duration) {
        const double dt = std::min(step, duration - t);
        BlochState r_next;
        std::array<double, 3> v_next{};
        try {
            const auto a1 = geodesic_rhs(r, v, r_max);
            BlochState r2;
            std::array<double, 3> v2{};
            for (std::size_t i = 0; i < 3; ++i) {
                r2.r[i] = r.r[i] + 0.5 * dt * v[i];
                v2[i] = v[i] + 0.5 * dt * a1[i];
            }
            const auto a2 = geodesic_rhs(r2, v2, r_max);
            BlochState r3;
            std::array<double, 3> v3{};
            for (std::size_t i = 0; i < 3; ++i) {
                r3.r[i] = r.r[i] + 0.5 * dt * v2[i];
                v3[i] = v[i] + 0.5 * dt * a2[i];
            }
            const auto a3 = geodesic_rhs(r3, v3, r_max);
            BlochState r4;
            std::array<double, 3> v4{};
            for (std::size_t i = 0; i < 3; ++i) {
                r4.r[i] = r.r[i] + dt * v3[i];
                v4[i] = v[i] + dt * a3[i];
            }
            const auto a4 = geodesic_rhs(r4, v4, r_max);
            for (std::size_t i = 0; i < 3; ++i) {
                r_next.r[i] = r.r[i] + dt / 6.0 * (v[i] + 2.0 * v2[i] + 2.0 * v3[i] + v4[i]);
                v_next[i] = v[i] + dt / 6.0 * (a1[i] + 2.0 * a2[i] + 2.0 * a3[i] + a4[i]);
            }
        } catch (const std::domain_error&) {
            path.domain_exit = true;
            break;
        }
        if (!(r_next.norm() < r_max)) {
            path.domain_exit = true;
            break;
        }
        r = r_next;
        v = v_next;
        t += dt;
        path.times.push_back(t);
        path.points.push_back(r);
        path.velocities.push_back(v);
    }
    return path;
}

SustainabilityField sustainability_grid(double delta, double eval_time,
                                        const GridOptions& options) {
    if (!(options.grid_step > 0.0) || options.grid_step > 2.0) {
        throw std::invalid_argument("sustainability_grid: grid_step out of range");
    }
    SustainabilityField field;
    field.delta = delta;
    field.eval_time = eval_time;
    field.grid_step = options.grid_step;
    field.r3_0 = options.r3_0;
    field.source = options.source;
    field.points = static_cast<std::size_t>(std::llround(2.0 / options.grid_step)) + 1;
    field.values.assign(field.points * field.points, 0.0);
    field.masked.assign(field.points * field.points, 0);

    const kernels::FieldKernelFn kernel =
        kernels::select(static_cast<kernels::Choice>(options.kernel));
    kernels::FieldParams params;
    params.delta = delta;
    params.eval_time = eval_time;
    params.r3_0 = options.r3_0;
    params.r_max = options.r_max;
    params.source = options.source;

    std::vector<double> coords(field.points);
    for (std::size_t i = 0; i < field.points; ++i) {
        coords[i] = field.coordinate(i);
    }

    // Rows are independent; a static partition keeps the output identical
    // for every worker count.
    const int workers = std::max(1, options.workers);
    const auto run_rows = [&](std::size_t begin, std::size_t end) {
        std::vector<double> row_r1(field.points);
        for (std::size_t i1 = begin; i1 < end; ++i1) {
            std::fill(row_r1.begin(), row_r1.end(), coords[i1]);
            kernel(params, row_r1.data(), coords.data(), field.points,
                   field.values.data() + i1 * field.points,
                   field.masked.data() + i1 * field.points);
        }
    };
    if (workers == 1) {
        run_rows(0, field.points);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const std::size_t chunk = (field.points + static_cast<std::size_t>(workers) - 1) /
                                  static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(field.points, chunk * static_cast<std::size_t>(w));
            const std::size_t end = std::min(field.points, begin + chunk);
            if (begin < end) {
                pool.emplace_back(run_rows, begin, end);
            }
        }
        for (auto& thread : pool) {
            thread.join();
        }
    }
    return field;
}

double shaded_fraction(const SustainabilityField& field, double threshold) {
    std::size_t admissible = 0;
    std::size_t shaded = 0;
    for (std::size_t i1 = 0; i1 < field.points; ++i1) {
        const double r1 = field.coordinate(i1);
        for (std::size_t i2 = 0; i2 < field.points; ++i2) {
            const double r2 = field.coordinate(i2);
            const double norm2 = r1 * r1 + r2 * r2 + field.r3_0 * field.r3_0;
            if (norm2 >= 1.0) {
                continue;
            }
            ++admissible;
            if (!field.is_masked(i1, i2) && field.value(i1, i2) < threshold) {
                ++shaded;
            }
        }
    }
    if (admissible == 0) {
        return 0.0;
    }
    return static_cast<double>(shaded) / static_cast<double>(admissible);
}

}  // namespace geoecon
