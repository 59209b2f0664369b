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

// Four-wide AVX2 unsustainability-field kernel. The per-point math mirrors
// the scalar reference (trajectory -> metric -> Christoffel -> residual)
// with the 3x3(x3) contractions unrolled against the in-plane velocity.
// Domain masks use the same non-fused expressions as eval_scalar so the two
// kernels mask bit-identically; A values agree to ~1e-12 relative.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "geoecon/entropy_geometry.hpp"
#include "geoecon/kernels/field_kernel.hpp"

namespace geoecon::kernels {

namespace {

inline __m256d splat(double v) {
    return _mm256_set1_pd(v);
}

// log for strictly positive finite lanes: x = 2^e m with m in [1, sqrt 2),
// log m = 2 artanh((m-1)/(m+1)) by a 12-term odd polynomial.
inline __m256d log_positive(__m256d x) {
    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i e_biased =
        _mm256_sub_epi64(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(1023));
    __m256d m = _mm256_castsi256_pd(
        _mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

    // lanes of e_biased fit in int32; pack and convert
    const __m256i pack_idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
    __m256d e = _mm256_cvtepi32_pd(
        _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(e_biased, pack_idx)));

    const __m256d gt = _mm256_cmp_pd(m, splat(1.4142135623730951), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, splat(0.5)), gt);
    e = _mm256_add_pd(e, _mm256_and_pd(gt, splat(1.0)));

    const __m256d z =
        _mm256_div_pd(_mm256_sub_pd(m, splat(1.0)), _mm256_add_pd(m, splat(1.0)));
    const __m256d z2 = _mm256_mul_pd(z, z);
    __m256d p = splat(1.0 / 23.0);
    p = _mm256_fmadd_pd(p, z2, splat(1.0 / 21.0));
    p = _mm256_fmadd_pd(p, z2, splat(1.0 / 19.0));
    p = _mm256_fmadd_pd(p, z2, splat(1.0 / 17.0));
    p = _mm256_fmadd_pd(p, z2, splat(1.0 / 15.0));
    p = _mm256_fmadd_pd(p, z2, splat(1.0 / 13.0));
    p = _mm256_fmadd_pd(p, z2, splat(1.0 / 11.0));
    p = _mm256_fmadd_pd(p, z2, splat(1.0 / 9.0));
    p = _mm256_fmadd_pd(p, z2, splat(1.0 / 7.0));
    p = _mm256_fmadd_pd(p, z2, splat(1.0 / 5.0));
    p = _mm256_fmadd_pd(p, z2, splat(1.0 / 3.0));
    p = _mm256_fmadd_pd(p, z2, splat(1.0));
    const __m256d log_m = _mm256_mul_pd(_mm256_add_pd(z, z), p);
    return _mm256_fmadd_pd(e, splat(0.6931471805599453), log_m);
}

// sum_{k=1..12} (2k/(2k+1)) y^{k-1}, y = x^2 — series of bracket_over_x2
inline __m256d bracket_series(__m256d y) {
    __m256d p = splat(24.0 / 25.0);
    p = _mm256_fmadd_pd(p, y, splat(22.0 / 23.0));
    p = _mm256_fmadd_pd(p, y, splat(20.0 / 21.0));
    p = _mm256_fmadd_pd(p, y, splat(18.0 / 19.0));
    p = _mm256_fmadd_pd(p, y, splat(16.0 / 17.0));
    p = _mm256_fmadd_pd(p, y, splat(14.0 / 15.0));
    p = _mm256_fmadd_pd(p, y, splat(12.0 / 13.0));
    p = _mm256_fmadd_pd(p, y, splat(10.0 / 11.0));
    p = _mm256_fmadd_pd(p, y, splat(8.0 / 9.0));
    p = _mm256_fmadd_pd(p, y, splat(6.0 / 7.0));
    p = _mm256_fmadd_pd(p, y, splat(4.0 / 5.0));
    p = _mm256_fmadd_pd(p, y, splat(2.0 / 3.0));
    return p;
}

// sum_{k=2..13} (2k/(2k+1))(2k-2) y^{k-2} — series of bracket_over_x2' / x
inline __m256d bracket_deriv_over_x_series(__m256d y) {
    __m256d p = splat(624.0 / 27.0);
    p = _mm256_fmadd_pd(p, y, splat(528.0 / 25.0));
    p = _mm256_fmadd_pd(p, y, splat(440.0 / 23.0));
    p = _mm256_fmadd_pd(p, y, splat(360.0 / 21.0));
    p = _mm256_fmadd_pd(p, y, splat(288.0 / 19.0));
    p = _mm256_fmadd_pd(p, y, splat(224.0 / 17.0));
    p = _mm256_fmadd_pd(p, y, splat(168.0 / 15.0));
    p = _mm256_fmadd_pd(p, y, splat(120.0 / 13.0));
    p = _mm256_fmadd_pd(p, y, splat(80.0 / 11.0));
    p = _mm256_fmadd_pd(p, y, splat(48.0 / 9.0));
    p = _mm256_fmadd_pd(p, y, splat(24.0 / 7.0));
    p = _mm256_fmadd_pd(p, y, splat(8.0 / 5.0));
    return p;
}

}  // namespace

void eval_avx2(const FieldParams& params, const double* r1, const double* r2, std::size_t count,
               double* a_out, std::uint8_t* mask_out) {
    const bool exact = params.source == TrajectorySource::exact;
    const double angle = 2.0 * params.eval_time * params.delta;
    const double cos_a = std::cos(angle);
    const double sin_a = std::sin(angle);
    const double omega = 2.0 * params.delta;

    const __m256d c = splat(cos_a);
    const __m256d s = splat(sin_a);
    const __m256d w = splat(omega);
    const __m256d w2 = splat(omega * omega);
    const __m256d p3 = splat(params.r3_0);
    const __m256d one = splat(1.0);
    const __m256d half = splat(0.5);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d r_max = splat(params.r_max);
    const __m256d nan = splat(std::numeric_limits<double>::quiet_NaN());
    const __m256d series_edge = splat(radial::kSeriesThreshold);

    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d p1 = _mm256_loadu_pd(r1 + i);
        const __m256d p2 = _mm256_loadu_pd(r2 + i);

        // initial-point mask; plain mul/add to match eval_scalar exactly
        const __m256d n0 = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(p1, p1), _mm256_mul_pd(p2, p2)), _mm256_mul_pd(p3, p3));
        const __m256d mask0 = _mm256_cmp_pd(n0, one, _CMP_NLT_UQ);

        // trajectory point at eval_time
        const __m256d r1t = _mm256_add_pd(_mm256_mul_pd(p1, c), _mm256_mul_pd(p2, s));
        const __m256d r2t =
            exact ? _mm256_sub_pd(_mm256_mul_pd(p2, c), _mm256_mul_pd(p1, s)) : p2;
        const __m256d x2 = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(r1t, r1t), _mm256_mul_pd(r2t, r2t)),
            _mm256_mul_pd(p3, p3));
        const __m256d x = _mm256_sqrt_pd(x2);
        const __m256d mask1 = _mm256_cmp_pd(x, r_max, _CMP_NLE_UQ);
        const __m256d masked = _mm256_or_pd(mask0, mask1);

        // clamp masked lanes into the domain so their math stays finite
        const __m256d xc = _mm256_min_pd(x, r_max);
        const __m256d xc2 = _mm256_mul_pd(xc, xc);
        const __m256d one_minus = _mm256_sub_pd(one, xc2);

        // artanh(xc)/xc
        const __m256d ath = _mm256_mul_pd(
            half, log_positive(_mm256_div_pd(_mm256_add_pd(one, xc), _mm256_sub_pd(one, xc))));
        const __m256d a_closed = _mm256_div_pd(ath, xc);
        const __m256d a_series = _mm256_fmadd_pd(
            _mm256_fmadd_pd(splat(0.2), xc2, splat(1.0 / 3.0)), xc2, one);
        const __m256d tiny = _mm256_cmp_pd(xc, splat(1e-4), _CMP_LT_OQ);
        const __m256d a = _mm256_blendv_pd(a_closed, a_series, tiny);

        // bracket_over_x2 and its derivative over x, series near the origin
        const __m256d near0 = _mm256_cmp_pd(xc, series_edge, _CMP_LT_OQ);
        const __m256d inv_one_minus = _mm256_div_pd(one, one_minus);
        const __m256d b_closed =
            _mm256_div_pd(_mm256_sub_pd(inv_one_minus, a), xc2);
        const __m256d b = _mm256_blendv_pd(b_closed, bracket_series(xc2), near0);

        const __m256d x3 = _mm256_mul_pd(xc2, xc);
        const __m256d x4 = _mm256_mul_pd(xc2, xc2);
        const __m256d c_closed = _mm256_div_pd(
            _mm256_add_pd(
                _mm256_add_pd(
                    _mm256_div_pd(splat(-3.0), _mm256_mul_pd(x3, one_minus)),
                    _mm256_div_pd(splat(2.0),
                                  _mm256_mul_pd(xc, _mm256_mul_pd(one_minus, one_minus)))),
                _mm256_div_pd(_mm256_mul_pd(splat(3.0), ath), x4)),
            xc);
        const __m256d c_over_x =
            _mm256_blendv_pd(c_closed, bracket_deriv_over_x_series(xc2), near0);

        // velocity and acceleration of the selected trajectory
        const __m256d v1 = _mm256_mul_pd(
            w, _mm256_sub_pd(_mm256_mul_pd(p2, c), _mm256_mul_pd(p1, s)));
        const __m256d v2 = exact ? _mm256_mul_pd(_mm256_sub_pd(zero, w), r1t) : zero;
        const __m256d acc1 = _mm256_mul_pd(_mm256_sub_pd(zero, w2), r1t);
        const __m256d acc2 = exact ? _mm256_mul_pd(_mm256_sub_pd(zero, w2), r2t) : zero;

        // w_k = Gamma_klm v^l v^m, unrolled for v = (v1, v2, 0)
        const __m256d u = _mm256_fmadd_pd(r1t, v1, _mm256_mul_pd(r2t, v2));
        const __m256d u2 = _mm256_mul_pd(u, u);
        const __m256d vv = _mm256_fmadd_pd(v1, v1, _mm256_mul_pd(v2, v2));
        const __m256d cu2 = _mm256_mul_pd(c_over_x, u2);
        const __m256d wk1 = _mm256_mul_pd(
            half, _mm256_fmadd_pd(
                      b, _mm256_fmadd_pd(r1t, vv, _mm256_mul_pd(_mm256_add_pd(v1, v1), u)),
                      _mm256_mul_pd(r1t, cu2)));
        const __m256d wk2 = _mm256_mul_pd(
            half, _mm256_fmadd_pd(
                      b, _mm256_fmadd_pd(r2t, vv, _mm256_mul_pd(_mm256_add_pd(v2, v2), u)),
                      _mm256_mul_pd(r2t, cu2)));
        const __m256d wk3 = _mm256_mul_pd(
            half,
            _mm256_fmadd_pd(b, _mm256_mul_pd(p3, vv), _mm256_mul_pd(p3, cu2)));

        // residual^j = acc^j + g^{jk} w_k with
        // g^{jk} = (r^j r^k/x^2)((1-x^2) - 1/a) + delta^{jk}/a
        const __m256d inv_a = _mm256_div_pd(one, a);
        const __m256d beta_r = _mm256_sub_pd(one_minus, inv_a);
        const __m256d x2_zero = _mm256_cmp_pd(xc2, zero, _CMP_EQ_OQ);
        const __m256d inv_x2 =
            _mm256_blendv_pd(_mm256_div_pd(one, xc2), zero, x2_zero);
        const __m256d rw = _mm256_fmadd_pd(
            r1t, wk1, _mm256_fmadd_pd(r2t, wk2, _mm256_mul_pd(p3, wk3)));
        const __m256d coef = _mm256_mul_pd(_mm256_mul_pd(inv_x2, beta_r), rw);

        const __m256d res1 = _mm256_fmadd_pd(r1t, coef, _mm256_fmadd_pd(wk1, inv_a, acc1));
        const __m256d res2 = _mm256_fmadd_pd(r2t, coef, _mm256_fmadd_pd(wk2, inv_a, acc2));
        const __m256d res3 = _mm256_fmadd_pd(p3, coef, _mm256_mul_pd(wk3, inv_a));

        const __m256d norm2 = _mm256_fmadd_pd(
            res1, res1, _mm256_fmadd_pd(res2, res2, _mm256_mul_pd(res3, res3)));
        const __m256d a_val = _mm256_blendv_pd(_mm256_sqrt_pd(norm2), nan, masked);

        _mm256_storeu_pd(a_out + i, a_val);
        const int bits = _mm256_movemask_pd(masked);
        mask_out[i] = static_cast<std::uint8_t>(bits & 1);
        mask_out[i + 1] = static_cast<std::uint8_t>((bits >> 1) & 1);
        mask_out[i + 2] = static_cast<std::uint8_t>((bits >> 2) & 1);
        mask_out[i + 3] = static_cast<std::uint8_t>((bits >> 3) & 1);
    }
    if (i < count) {
        eval_scalar(params, r1 + i, r2 + i, count - i, a_out + i, mask_out + i);
    }
}

}  // namespace geoecon::kernels

#endif  // x86
