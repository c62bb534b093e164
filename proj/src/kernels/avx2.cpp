// Copyright 2026 The gausslab Authors
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

// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check, so
// nothing in here may be shared with the scalar translation units.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace gausslab::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// (re, im) pairs -> (im, re) pairs
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

}  // namespace

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void cheb_tridiag_step_avx2(const double* lower, double scale, const double* cur,
                            double* next, std::size_t n) {
  if (n < 6) {
    cheb_tridiag_step_scalar(lower, scale, cur, next, n);
    return;
  }
  const double s2 = 2.0 * scale;
  next[0] += s2 * (-lower[1] * cur[1]);
  const __m256d vs = _mm256_set1_pd(s2);
  std::size_t i = 1;
  for (; i + 4 <= n - 1; i += 4) {
    const __m256d below = _mm256_mul_pd(_mm256_loadu_pd(lower + i), _mm256_loadu_pd(cur + i - 1));
    const __m256d diff =
        _mm256_fnmadd_pd(_mm256_loadu_pd(lower + i + 1), _mm256_loadu_pd(cur + i + 1), below);
    _mm256_storeu_pd(next + i, _mm256_fmadd_pd(vs, diff, _mm256_loadu_pd(next + i)));
  }
  for (; i < n - 1; ++i) next[i] += s2 * (lower[i] * cur[i - 1] - lower[i + 1] * cur[i + 1]);
  next[n - 1] += s2 * (lower[n - 1] * cur[n - 2]);
}

void cdotc_avx2(const double* x, const double* y, std::size_t n, double* out) {
  // acc_re collects (xr*yr, xi*yi); acc_im collects (xr*yi, xi*yr).
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(x + 2 * i);
    const __m256d vy = _mm256_loadu_pd(y + 2 * i);
    acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
    acc_im = _mm256_fmadd_pd(vx, swap_pairs(vy), acc_im);
  }
  double re = hsum(acc_re);
  alignas(32) double t[4];
  _mm256_store_pd(t, acc_im);
  double im = (t[0] - t[1]) + (t[2] - t[3]);
  for (; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  out[0] = re;
  out[1] = im;
}

void cmul_conj_axpy_avx2(double a_re, double a_im, const double* c, const double* x,
                         double* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a_re);
  const __m256d ai = _mm256_set1_pd(a_im);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vc = _mm256_loadu_pd(c + 2 * i);
    const __m256d vx = _mm256_loadu_pd(x + 2 * i);
    const __m256d cr = _mm256_movedup_pd(vc);        // (cr, cr)
    const __m256d ci = _mm256_permute_pd(vc, 0b1111);  // (ci, ci)
    // conj(c) * x = (cr*xr + ci*xi, cr*xi - ci*xr)
    const __m256d t = _mm256_fmsubadd_pd(cr, vx, _mm256_mul_pd(ci, swap_pairs(vx)));
    // a * t = (ar*tr - ai*ti, ar*ti + ai*tr)
    const __m256d at = _mm256_fmaddsub_pd(ar, t, _mm256_mul_pd(ai, swap_pairs(t)));
    _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(_mm256_loadu_pd(y + 2 * i), at));
  }
  if (i < n) cmul_conj_axpy_scalar(a_re, a_im, c + 2 * i, x + 2 * i, y + 2 * i, n - i);
}

void caxpy_avx2(double a_re, double a_im, const double* x, double* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a_re);
  const __m256d ai = _mm256_set1_pd(a_im);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(x + 2 * i);
    const __m256d ax = _mm256_fmaddsub_pd(ar, vx, _mm256_mul_pd(ai, swap_pairs(vx)));
    _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(_mm256_loadu_pd(y + 2 * i), ax));
  }
  if (i < n) caxpy_scalar(a_re, a_im, x + 2 * i, y + 2 * i, n - i);
}

}  // namespace gausslab::kernels::detail
