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

#include "kernels_internal.hpp"

namespace gausslab::kernels::detail {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void cheb_tridiag_step_scalar(const double* lower, double scale, const double* cur,
                              double* next, std::size_t n) {
  if (n == 0) return;
  const double s2 = 2.0 * scale;
  for (std::size_t i = 0; i < n; ++i) {
    const double below = i > 0 ? lower[i] * cur[i - 1] : 0.0;
    const double above = i + 1 < n ? lower[i + 1] * cur[i + 1] : 0.0;
    next[i] += s2 * (below - above);
  }
}

void cdotc_scalar(const double* x, const double* y, std::size_t n, double* out) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  out[0] = re;
  out[1] = im;
}

void cmul_conj_axpy_scalar(double a_re, double a_im, const double* c, const double* x,
                           double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double cr = c[2 * i], ci = c[2 * i + 1];
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double tr = cr * xr + ci * xi;
    const double ti = cr * xi - ci * xr;
    y[2 * i] += a_re * tr - a_im * ti;
    y[2 * i + 1] += a_re * ti + a_im * tr;
  }
}

void caxpy_scalar(double a_re, double a_im, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    y[2 * i] += a_re * xr - a_im * xi;
    y[2 * i + 1] += a_re * xi + a_im * xr;
  }
}

}  // namespace gausslab::kernels::detail
