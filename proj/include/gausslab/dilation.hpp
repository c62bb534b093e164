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

// Photon-number blocks of the beamsplitter and two-mode squeezer dilations.
// exp(theta G) e_0 for the real antisymmetric tridiagonal block generator G is
// propagated with a Chebyshev expansion in Bessel coefficients.

#include <memory>
#include <vector>

#include "gausslab/kernels/kernels.hpp"

namespace gausslab::dilation {

/// J_0(x) .. J_kmax(x) by Miller's backward recurrence, normalized with
/// J_0 + 2 sum_k J_2k = 1.
std::vector<double> bessel_j_sequence(double x, int kmax);

/// exp(theta G) v where G(i, i-1) = lower[i], G(i-1, i) = -lower[i] and
/// lower.size() == v.size() + 1 with zero end entries.
std::vector<double> expm_tridiag(const std::vector<double>& lower, double theta,
                                 const std::vector<double>& v,
                                 const kernels::KernelTable& table = kernels::active());

/// Amplitudes of |n - j>_sys |j>_env, j = 0..n, after exp(theta (a+ b - a b+))
/// acts on |n>|0>. The block is closed, so the result is exact.
std::vector<double> beamsplitter_column(int n, double theta,
                                        const kernels::KernelTable& table = kernels::active());

/// Amplitudes of |n + l>_sys |l>_env, l = 0..len-1, after
/// exp(r (a+ b+ - a b)) acts on |n>|0>. The ladder is truncated and doubled
/// until the first `len` entries move by at most 1e-13.
std::vector<double> squeezer_column(int n, double r, int len,
                                    const kernels::KernelTable& table = kernels::active());

/// Memoized beamsplitter_column; thread-safe.
std::shared_ptr<const std::vector<double>> cached_beamsplitter_column(int n, double theta);

/// Memoized squeezer_column; returns at least `len` entries. Thread-safe.
std::shared_ptr<const std::vector<double>> cached_squeezer_column(int n, double r, int len);

}  // namespace gausslab::dilation
