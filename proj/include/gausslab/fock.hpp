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

#include <cstdint>
#include <vector>

#include "gausslab/channel.hpp"
#include "gausslab/spectrum.hpp"

namespace gausslab {

/// Truncated number basis: `modes` in {1, 2}, `cutoff` levels per mode.
/// Two-mode index is n0 * cutoff + n1.
struct FockSpace {
  int modes = 1;
  int cutoff = 40;

  /// Throws ParameterOutOfRange unless cutoff >= 2 and cutoff^modes <= 4096.
  static FockSpace make(int modes, int cutoff);

  int dim() const { return modes == 1 ? cutoff : cutoff * cutoff; }
  bool operator==(const FockSpace&) const = default;
};

struct PureState {
  FockSpace space;
  CVector amplitudes;
};

/// Truncated operator. For density operators `leakage` is the probability
/// mass lost past the cutoff by the operations that produced it.
struct FockOperator {
  FockSpace space;
  CMatrix matrix;
  double leakage = 0.0;
};

FockOperator density(const PureState& psi);

/// Operator version of embed(); keeps the leakage.
FockOperator embed(const FockOperator& rho, int cutoff);

/// |n> in one mode.
PureState fock_state(int n, FockSpace space);

/// Product of one-mode vectors in a two-mode space.
PureState product_state(const PureState& a, const PureState& b);

/// Zero-pads (or truncates, which must drop only zeros) to a new cutoff.
PureState embed(const PureState& psi, int cutoff);

/// Normalized a|0> + b|1> + ... over the given one-mode amplitudes.
PureState superposition(const std::vector<cplx>& amplitudes, FockSpace space);

/// Throws AmplitudeTooLarge unless |zeta|^2 <= cutoff / 4.
PureState coherent_state(cplx zeta, FockSpace space);

/// exp(z a+ - conj(z) a), exponentiated at twice the cutoff and cropped.
FockOperator displacement_matrix(cplx z, FockSpace space);

/// e^{i phi N} with N the total photon number.
FockOperator gauge_rotation(double phi, FockSpace space);

FockOperator transpose_state(const FockOperator& rho);

/// Eigenvalues descending; negatives above -1e-8 clamp to 0. Throws
/// NotHermitian beyond 1e-10.
SpectrumVector spectrum(const FockOperator& rho);

/// Haar vector on the first `levels` per mode (0 means the whole space),
/// deterministic per seed.
PureState random_pure_state(std::uint64_t seed, FockSpace space, int levels = 0);

/// One-mode channel in Kraus form A_b |n> = c_b(n) |n + shift_b>, where the
/// coefficients come from the beamsplitter or two-mode squeezer dilation with
/// the ancilla in vacuum. Outputs past the cutoff are dropped.
class OneModeChannelKraus {
 public:
  enum class Kind { kAttenuator, kAmplifier };

  Kind kind() const { return kind_; }
  /// k for attenuators, kappa for amplifiers.
  double parameter() const { return parameter_; }
  int cutoff() const { return cutoff_; }

  /// Number of Kraus branches: cutoff for both kinds.
  int branch_count() const { return cutoff_; }
  int shift(int branch) const { return kind_ == Kind::kAttenuator ? -branch : branch; }

  /// c_b(n) for every branch b with n + shift_b inside the cutoff.
  std::vector<double> column(int n) const;

  /// Dense d x d Kraus matrices.
  std::vector<CMatrix> kraus_ops() const;

 private:
  friend OneModeChannelKraus attenuator_kraus(double, FockSpace);
  friend OneModeChannelKraus amplifier_kraus(double, FockSpace);
  OneModeChannelKraus(Kind kind, double parameter, int cutoff)
      : kind_(kind), parameter_(parameter), cutoff_(cutoff) {}

  Kind kind_;
  double parameter_;
  int cutoff_;
};

/// k in [0, 1]; beamsplitter with cos(theta) = k.
OneModeChannelKraus attenuator_kraus(double k, FockSpace space);

/// kappa >= 1 with kappa^2 - 1 <= cutoff / 8; squeezer with cosh(r) = kappa.
OneModeChannelKraus amplifier_kraus(double kappa, FockSpace space);

/// sum_b A_b rho A_b^* on `mode` (0 or 1).
FockOperator apply_kraus(const OneModeChannelKraus& ch, const FockOperator& rho, int mode = 0);

/// U rho U^* for U = e^{i phi N_mode}.
FockOperator apply_phase(double phi, const FockOperator& rho, int mode = 0);

/// Environment output of the amplifier dilation: the joint state of
/// U (rho x |0><0|) U^* traced over the system. System levels are kept below
/// `system_cap` (0 selects twice the cutoff, which makes every returned entry
/// exact for rho supported inside the cutoff).
FockOperator complementary_output(double kappa, const FockOperator& rho, int system_cap = 0);

/// Attenuator |k1|, gauge phase arg(k1), amplifier kappa: the Fock form of
/// one mode of decompose().
struct OneModeRealization {
  double k1 = 1.0;
  double phase = 0.0;
  double kappa = 1.0;
};

OneModeRealization realize(const GaugeCovariantChannel& one_mode);

/// Product of one-mode realizations, one per mode of the Fock space.
struct FockChannel {
  std::vector<OneModeRealization> per_mode;

  /// One-mode channels, or two-mode channels with diagonal K and mu.
  static FockChannel from_channel(const GaugeCovariantChannel& ch);
};

FockOperator apply_channel(const FockChannel& ch, const FockOperator& rho);

/// Tr rho^p via the spectrum (Frobenius norm for p = 2).
double trace_power(const FockOperator& rho, double p);

/// <a> on the given mode.
cplx mean_amplitude(const FockOperator& rho, int mode = 0);

/// <a+ a> - |<a>|^2 + 1/2 on the given mode.
double correlation_scalar(const FockOperator& rho, int mode = 0);

/// <psi| rho |psi>
double fidelity(const PureState& psi, const FockOperator& rho);

/// Largest |<i|rho|j>| over i or j >= level, the weight outside the first
/// `level` states of one mode.
double support_beyond(const FockOperator& rho, int level);

}  // namespace gausslab
