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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace gausslab {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Largest absolute entry.
double max_abs(const CMatrix& m);

/// (m + m*) / 2
CMatrix hermitian_part(const CMatrix& m);

/// Eigenvalues of a Hermitian matrix, ascending.
RVector hermitian_eigenvalues(const CMatrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-clamp, 0) are treated as zero; anything more negative throws.
CMatrix hermitian_sqrt(const CMatrix& m, double clamp = 1e-12);

/// Sum with Neumaier compensation; order-insensitive to ~1 ulp per term.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// SplitMix64 finalizer; used to derive independent per-sample seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter);

}  // namespace gausslab
