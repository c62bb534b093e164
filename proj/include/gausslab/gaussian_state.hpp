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

#include <vector>

#include "gausslab/channel.hpp"
#include "gausslab/spectrum.hpp"

namespace gausslab {

/// Zero-mean gauge-invariant Gaussian state given by its correlation matrix
/// alpha >= I/2 (vacuum: alpha = I/2).
class GaussianState {
 public:
  /// Validates Hermiticity (1e-12) and alpha >= I/2 - tol.
  static GaussianState from_alpha(const CMatrix& alpha, double tol = kDefaultTol);

  int modes() const { return static_cast<int>(alpha_.rows()); }
  const CMatrix& alpha() const { return alpha_; }

 private:
  explicit GaussianState(CMatrix alpha) : alpha_(std::move(alpha)) {}

  CMatrix alpha_;
};

/// Mean photon numbers N_j = a_j - 1/2, descending.
struct ThermalSpectrum {
  std::vector<double> photon_numbers;
};

GaussianState vacuum(int modes);

/// alpha' = K alpha K* + mu.
GaussianState apply_channel(const GaugeCovariantChannel& ch, const GaussianState& st);

/// Values in [-1e-10, 0) clamp to 0; below that throws InvalidState.
ThermalSpectrum thermal_spectrum(const GaussianState& st);

/// The m largest eigenvalues prod_j N_j^n_j / (N_j + 1)^(n_j + 1), descending.
SpectrumVector eigenvalue_list(const ThermalSpectrum& spec, std::size_t m);

double von_neumann_entropy(const ThermalSpectrum& spec);
double von_neumann_entropy(const GaussianState& st);

/// (1/(p-1)) sum_j ln[(N_j + 1)^p - N_j^p]; throws InvalidOrder for p <= 1.
double renyi_entropy(const ThermalSpectrum& spec, double p);
double renyi_entropy(const GaussianState& st, double p);

/// Maximal output Tr rho^p, reached at the vacuum:
///   prod_j [(N_j + 1)^p - N_j^p]^-1  with alpha = mu + KK*/2.
double output_purity(const GaugeCovariantChannel& ch, double p);

/// det[(alpha + I/2)^p - (alpha - I/2)^p], the reciprocal of output_purity.
double output_purity_determinant(const GaugeCovariantChannel& ch, double p);

/// (1/(1-p)) ln nu_p, the minimal output Renyi entropy.
double minimal_output_renyi(const GaugeCovariantChannel& ch, double p);

}  // namespace gausslab
