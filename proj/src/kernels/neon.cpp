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

// AArch64 NEON variants. Two doubles (one complex) per register.

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace gausslab::kernels::detail {

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void cheb_tridiag_step_neon(const double* lower, double scale, const double* cur,
                            double* next, std::size_t n) {
  if (n < 4) {
    cheb_tridiag_step_scalar(lower, scale, cur, next, n);
    return;
  }
  const double s2 = 2.0 * scale;
  next[0] += s2 * (-lower[1] * cur[1]);
  const float64x2_t vs = vdupq_n_f64(s2);
  std::size_t i = 1;
  for (; i + 2 <= n - 1; i += 2) {
    const float64x2_t below = vmulq_f64(vld1q_f64(lower + i), vld1q_f64(cur + i - 1));
    const float64x2_t diff = vfmsq_f64(below, vld1q_f64(lower + i + 1), vld1q_f64(cur + i + 1));
    vst1q_f64(next + i, vfmaq_f64(vld1q_f64(next + i), vs, diff));
  }
  for (; i < n - 1; ++i) next[i] += s2 * (lower[i] * cur[i - 1] - lower[i + 1] * cur[i + 1]);
  next[n - 1] += s2 * (lower[n - 1] * cur[n - 2]);
}

void cdotc_neon(const double* x, const double* y, std::size_t n, double* out) {
  float64x2_t acc_re = vdupq_n_f64(0.0);  // (xr*yr, xi*yi)
  float64x2_t acc_im = vdupq_n_f64(0.0);  // (xr*yi, xi*yr)
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = vld1q_f64(x + 2 * i);
    const float64x2_t vy = vld1q_f64(y + 2 * i);
    acc_re = vfmaq_f64(acc_re, vx, vy);
    acc_im = vfmaq_f64(acc_im, vx, vextq_f64(vy, vy, 1));
  }
  out[0] = vgetq_lane_f64(acc_re, 0) + vgetq_lane_f64(acc_re, 1);
  out[1] = vgetq_lane_f64(acc_im, 0) - vgetq_lane_f64(acc_im, 1);
}

void cmul_conj_axpy_neon(double a_re, double a_im, const double* c, const double* x,
                         double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = vld1q_f64(x + 2 * i);
    const float64x2_t vxs = vextq_f64(vx, vx, 1);  // (xi, xr)
    const double cr = c[2 * i], ci = c[2 * i + 1];
    // conj(c) * x = cr * (xr, xi) + ci * (xi, -xr)
    const float64x2_t sign = {1.0, -1.0};
    const float64x2_t t = vfmaq_n_f64(vmulq_n_f64(vx, cr), vmulq_f64(vxs, sign), ci);
    const float64x2_t ts = vextq_f64(t, t, 1);  // (ti, tr)
    const float64x2_t at = vfmaq_n_f64(vmulq_n_f64(t, a_re), vmulq_f64(ts, (float64x2_t){-1.0, 1.0}), a_im);
    vst1q_f64(y + 2 * i, vaddq_f64(vld1q_f64(y + 2 * i), at));
  }
}

void caxpy_neon(double a_re, double a_im, const double* x, double* y, std::size_t n) {
  const float64x2_t flip = {-1.0, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = vld1q_f64(x + 2 * i);
    const float64x2_t vxs = vextq_f64(vx, vx, 1);
    const float64x2_t ax = vfmaq_n_f64(vmulq_n_f64(vx, a_re), vmulq_f64(vxs, flip), a_im);
    vst1q_f64(y + 2 * i, vaddq_f64(vld1q_f64(y + 2 * i), ax));
  }
}

}  // namespace gausslab::kernels::detail
