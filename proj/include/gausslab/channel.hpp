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

#include <random>
#include <string_view>
#include <vector>

#include "gausslab/linalg.hpp"

namespace gausslab {

inline constexpr double kDefaultTol = 1e-10;

/// Gauge-covariant Gaussian channel on s modes, fixed by (K, mu). Build with
/// build_channel() or the named constructors below; values are immutable.
class GaugeCovariantChannel {
 public:
  int modes() const { return static_cast<int>(K_.rows()); }
  const CMatrix& K() const { return K_; }
  const CMatrix& mu() const { return mu_; }

  /// Skips validation; `mu` is symmetrized. For results of exact algebra on
  /// already validated channels.
  static GaugeCovariantChannel trusted(CMatrix K, CMatrix mu);

 private:
  GaugeCovariantChannel(CMatrix K, CMatrix mu) : K_(std::move(K)), mu_(std::move(mu)) {}

  CMatrix K_;
  CMatrix mu_;
};

enum class ChannelClass {
  kIdentity,
  kAttenuator,
  kAmplifier,
  kQuantumLimitedAttenuator,
  kQuantumLimitedAmplifier,
  kGeneral,
};

std::string_view to_string(ChannelClass c);

/// Throws DimensionMismatch, NotHermitian or InvalidNoiseError.
GaugeCovariantChannel build_channel(const CMatrix& K, const CMatrix& mu, double tol = kDefaultTol);

ChannelClass classify(const GaugeCovariantChannel& ch, double tol = kDefaultTol);

/// second o first: K = K2 K1, mu = K2 mu1 K2* + mu2.
GaugeCovariantChannel concatenate(const GaugeCovariantChannel& first,
                                  const GaugeCovariantChannel& second);

/// Block direct sum of K and of mu.
GaugeCovariantChannel tensor_channel(const GaugeCovariantChannel& a, const GaugeCovariantChannel& b);

struct Decomposition {
  GaugeCovariantChannel attenuator;  // applied first
  GaugeCovariantChannel amplifier;
};

Decomposition decompose(const GaugeCovariantChannel& ch);

struct OneModeParameter {
  bool amplifier;  // false: attenuator with transmissivity `value`
  double value;    // k_j in [0, 1] or kappa_j >= 1
};

/// K = V_B diag(k_diag) V_A with singular values descending.
struct DiagonalForm {
  CMatrix V_A;
  CMatrix V_B;
  std::vector<double> k_diag;
  std::vector<OneModeParameter> per_mode;
};

/// Only for quantum-limited channels (Identity included); others throw
/// NotQuantumLimited.
DiagonalForm diagonalize(const GaugeCovariantChannel& ch, double tol = kDefaultTol);

/// Direct sum of the per-mode channels of `form`.
GaugeCovariantChannel diagonal_channel(const DiagonalForm& form);

/// U_B o Phi_d o U_A, which reproduces the diagonalized channel.
GaugeCovariantChannel reconstruct(const DiagonalForm& form);

/// Diagonal quantum-limited attenuator with entries sqrt(1 - kappa_j^-2).
GaugeCovariantChannel complementary_attenuator_of(const GaugeCovariantChannel& amp,
                                                  double tol = kDefaultTol);

struct StrictnessReport {
  bool condition_a;
  bool condition_b;
};

StrictnessReport strictness_conditions(const GaugeCovariantChannel& ch, double tol = kDefaultTol);

// Named constructors.
GaugeCovariantChannel identity_channel(int modes);
/// Quantum-limited attenuator with K = diag(k).
GaugeCovariantChannel attenuator_channel(const std::vector<double>& k);
/// Quantum-limited amplifier with K = diag(kappa).
GaugeCovariantChannel amplifier_channel(const std::vector<double>& kappa);
/// K = I, mu = N I.
GaugeCovariantChannel classical_noise_channel(int modes, double noise);
/// K = U, mu = 0 for unitary U.
GaugeCovariantChannel unitary_channel(const CMatrix& U, double tol = kDefaultTol);

/// Haar unitary via QR of a complex Ginibre matrix with phase fix.
CMatrix random_unitary(int n, std::mt19937_64& rng);

/// K with singular values in (0, 2.5), mu = |I - KK*|/2 + W W* / 4 for a
/// random complex W; always valid.
GaugeCovariantChannel random_valid_channel(int modes, std::mt19937_64& rng);

}  // namespace gausslab
