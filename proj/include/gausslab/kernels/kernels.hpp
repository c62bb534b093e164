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

// Data-parallel inner loops used by the Fock engine and the phase-space
// quadrature. Every kernel has a scalar reference implementation and, where
// the target supports it, an AVX2+FMA or NEON variant. The variant is picked
// once at runtime; GAUSSLAB_SIMD=scalar forces the reference path.
//
// Complex arrays are passed as interleaved (re, im) doubles so that the ISA
// translation units never instantiate std::complex inline code.

#include <cstddef>
#include <string_view>

namespace gausslab::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);

/// Function table for one instruction set.
struct KernelTable {
  Isa isa;

  /// y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);

  /// One Chebyshev recurrence step for a real antisymmetric tridiagonal G
  /// with G(i, i-1) = lower[i] and G(i-1, i) = -lower[i]:
  ///   next[i] = 2 * scale * (G cur)[i] + next[i]
  /// `lower` has n + 1 entries with lower[0] = lower[n] = 0. `next` holds the
  /// k-1 iterate on entry and the k+1 iterate on exit.
  void (*cheb_tridiag_step)(const double* lower, double scale, const double* cur,
                            double* next, std::size_t n);

  /// out = sum_i conj(x[i]) * y[i] over n complex entries.
  void (*cdotc)(const double* x, const double* y, std::size_t n, double* out);

  /// y[i] += a * conj(c[i]) * x[i] over n complex entries; a = (a_re, a_im).
  void (*cmul_conj_axpy)(double a_re, double a_im, const double* c, const double* x,
                         double* y, std::size_t n);

  /// y[i] += a * x[i] over n complex entries.
  void (*caxpy)(double a_re, double a_im, const double* x, double* y, std::size_t n);
};

const KernelTable& scalar_table();

/// Returns the table for `isa`, or nullptr when the binary or the CPU lacks it.
const KernelTable* table_for(Isa isa);

/// Best table supported by this CPU, honoring GAUSSLAB_SIMD. Resolved once.
const KernelTable& active();

}  // namespace gausslab::kernels
