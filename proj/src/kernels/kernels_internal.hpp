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

#pragma once

#include <cstddef>

#include "gausslab/kernels/kernels.hpp"

namespace gausslab::kernels::detail {

void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void cheb_tridiag_step_scalar(const double* lower, double scale, const double* cur,
                              double* next, std::size_t n);
void cdotc_scalar(const double* x, const double* y, std::size_t n, double* out);
void cmul_conj_axpy_scalar(double a_re, double a_im, const double* c, const double* x,
                           double* y, std::size_t n);
void caxpy_scalar(double a_re, double a_im, const double* x, double* y, std::size_t n);

#if defined(GAUSSLAB_HAVE_AVX2)
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void cheb_tridiag_step_avx2(const double* lower, double scale, const double* cur,
                            double* next, std::size_t n);
void cdotc_avx2(const double* x, const double* y, std::size_t n, double* out);
void cmul_conj_axpy_avx2(double a_re, double a_im, const double* c, const double* x,
                         double* y, std::size_t n);
void caxpy_avx2(double a_re, double a_im, const double* x, double* y, std::size_t n);
#endif

#if defined(GAUSSLAB_HAVE_NEON)
void axpy_neon(double a, const double* x, double* y, std::size_t n);
void cheb_tridiag_step_neon(const double* lower, double scale, const double* cur,
                            double* next, std::size_t n);
void cdotc_neon(const double* x, const double* y, std::size_t n, double* out);
void cmul_conj_axpy_neon(double a_re, double a_im, const double* c, const double* x,
                         double* y, std::size_t n);
void caxpy_neon(double a_re, double a_im, const double* x, double* y, std::size_t n);
#endif

}  // namespace gausslab::kernels::detail
