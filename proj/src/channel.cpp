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

#include "gausslab/channel.hpp"

#include <algorithm>
#include <cmath>

#include "gausslab/error.hpp"

namespace gausslab {

namespace {

CMatrix identity(Eigen::Index s) { return CMatrix::Identity(s, s); }

double min_eigenvalue(const CMatrix& m) { return hermitian_eigenvalues(m).minCoeff(); }

double max_eigenvalue(const CMatrix& m) { return hermitian_eigenvalues(m).maxCoeff(); }

double min_singular_value(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().minCoeff();
}

CMatrix diag_matrix(const std::vector<double>& d) {
  RVector v = Eigen::Map<const RVector>(d.data(), static_cast<Eigen::Index>(d.size()));
  return v.cast<cplx>().asDiagonal();
}

bool is_diagonal(const CMatrix& m, double tol) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i != j && std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(ChannelClass c) {
  switch (c) {
    case ChannelClass::kIdentity: return "Identity";
    case ChannelClass::kAttenuator: return "Attenuator";
    case ChannelClass::kAmplifier: return "Amplifier";
    case ChannelClass::kQuantumLimitedAttenuator: return "QuantumLimitedAttenuator";
    case ChannelClass::kQuantumLimitedAmplifier: return "QuantumLimitedAmplifier";
    case ChannelClass::kGeneral: return "General";
  }
  return "Unknown";
}

GaugeCovariantChannel GaugeCovariantChannel::trusted(CMatrix K, CMatrix mu) {
  CMatrix h = hermitian_part(mu);
  return GaugeCovariantChannel(std::move(K), std::move(h));
}

GaugeCovariantChannel build_channel(const CMatrix& K, const CMatrix& mu, double tol) {
  if (K.rows() < 1 || K.rows() != K.cols() || mu.rows() != mu.cols() || mu.rows() != K.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "K and mu must be square of equal size s >= 1");
  }
  if (!K.allFinite() || !mu.allFinite()) {
    throw Error(ErrorCode::kDimensionMismatch, "non-finite entries in K or mu");
  }
  if (max_abs(mu - mu.adjoint()) > 1e-12) {
    throw Error(ErrorCode::kNotHermitian, "mu is not Hermitian");
  }
  const CMatrix half_gap = 0.5 * (identity(K.rows()) - K * K.adjoint());
  const double minus_branch = min_eigenvalue(mu - half_gap);
  if (minus_branch < -tol) throw InvalidNoiseError(+1, minus_branch);
  const double plus_branch = min_eigenvalue(mu + half_gap);
  if (plus_branch < -tol) throw InvalidNoiseError(-1, plus_branch);
  return GaugeCovariantChannel::trusted(K, mu);
}

ChannelClass classify(const GaugeCovariantChannel& ch, double tol) {
  const CMatrix& K = ch.K();
  const CMatrix& mu = ch.mu();
  const CMatrix I = identity(K.rows());
  if (max_abs(K - I) <= tol && max_abs(mu) <= tol) return ChannelClass::kIdentity;
  const CMatrix kk = K * K.adjoint();
  const bool below = max_eigenvalue(kk) <= 1.0 + tol;
  const bool above = min_eigenvalue(kk) >= 1.0 - tol;
  if (below && max_abs(mu - 0.5 * (I - kk)) <= tol) return ChannelClass::kQuantumLimitedAttenuator;
  if (above && max_abs(mu - 0.5 * (kk - I)) <= tol) return ChannelClass::kQuantumLimitedAmplifier;
  if (below) return ChannelClass::kAttenuator;
  if (above) return ChannelClass::kAmplifier;
  return ChannelClass::kGeneral;
}

GaugeCovariantChannel concatenate(const GaugeCovariantChannel& first,
                                  const GaugeCovariantChannel& second) {
  if (first.modes() != second.modes()) {
    throw Error(ErrorCode::kDimensionMismatch, "concatenated channels differ in mode count");
  }
  const CMatrix& K2 = second.K();
  return GaugeCovariantChannel::trusted(K2 * first.K(), K2 * first.mu() * K2.adjoint() + second.mu());
}

GaugeCovariantChannel tensor_channel(const GaugeCovariantChannel& a, const GaugeCovariantChannel& b) {
  const int s = a.modes() + b.modes();
  CMatrix K = CMatrix::Zero(s, s);
  CMatrix mu = CMatrix::Zero(s, s);
  K.topLeftCorner(a.modes(), a.modes()) = a.K();
  K.bottomRightCorner(b.modes(), b.modes()) = b.K();
  mu.topLeftCorner(a.modes(), a.modes()) = a.mu();
  mu.bottomRightCorner(b.modes(), b.modes()) = b.mu();
  return GaugeCovariantChannel::trusted(std::move(K), std::move(mu));
}

Decomposition decompose(const GaugeCovariantChannel& ch) {
  const CMatrix I = identity(ch.modes());
  const CMatrix kk = ch.K() * ch.K().adjoint();
  // K2^2 >= I follows from validity, so K2 is invertible.
  const CMatrix K2 = hermitian_sqrt(ch.mu() + 0.5 * (kk + I));
  const CMatrix mu2 = 0.5 * (K2 * K2 - I);
  const CMatrix K1 = K2.partialPivLu().solve(ch.K());
  const CMatrix mu1 = 0.5 * (I - K1 * K1.adjoint());
  return {GaugeCovariantChannel::trusted(K1, mu1), GaugeCovariantChannel::trusted(K2, mu2)};
}

DiagonalForm diagonalize(const GaugeCovariantChannel& ch, double tol) {
  const ChannelClass cls = classify(ch, tol);
  if (cls != ChannelClass::kIdentity && cls != ChannelClass::kQuantumLimitedAttenuator &&
      cls != ChannelClass::kQuantumLimitedAmplifier) {
    throw Error(ErrorCode::kNotQuantumLimited,
                std::string("diagonalize needs a quantum-limited channel, got ") +
                    std::string(to_string(cls)));
  }
  Eigen::JacobiSVD<CMatrix> svd(ch.K(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  CMatrix U = svd.matrixU();
  CMatrix V = svd.matrixV();
  const Eigen::Index s = V.cols();
  for (Eigen::Index j = 0; j < s; ++j) {
    Eigen::Index arg = 0;
    V.col(j).cwiseAbs().maxCoeff(&arg);
    const cplx phase = std::conj(V(arg, j) / std::abs(V(arg, j)));
    V.col(j) *= phase;
    U.col(j) *= phase;
    V(arg, j) = cplx(V(arg, j).real(), 0.0);
  }
  DiagonalForm form{V.adjoint(), U, {}, {}};
  const bool amp = cls == ChannelClass::kQuantumLimitedAmplifier;
  for (Eigen::Index j = 0; j < s; ++j) {
    double v = svd.singularValues()(j);
    // Rounding can put a unit singular value a hair on the wrong side.
    v = amp ? std::max(v, 1.0) : std::min(v, 1.0);
    form.k_diag.push_back(v);
    form.per_mode.push_back({amp, v});
  }
  return form;
}

GaugeCovariantChannel diagonal_channel(const DiagonalForm& form) {
  std::vector<double> mu_diag;
  for (const auto& m : form.per_mode) {
    mu_diag.push_back(m.amplifier ? 0.5 * (m.value * m.value - 1.0) : 0.5 * (1.0 - m.value * m.value));
  }
  return GaugeCovariantChannel::trusted(diag_matrix(form.k_diag), diag_matrix(mu_diag));
}

GaugeCovariantChannel reconstruct(const DiagonalForm& form) {
  const int s = static_cast<int>(form.V_A.rows());
  const auto in = GaugeCovariantChannel::trusted(form.V_A, CMatrix::Zero(s, s));
  const auto out = GaugeCovariantChannel::trusted(form.V_B, CMatrix::Zero(s, s));
  return concatenate(concatenate(in, diagonal_channel(form)), out);
}

GaugeCovariantChannel complementary_attenuator_of(const GaugeCovariantChannel& amp, double tol) {
  const ChannelClass cls = classify(amp, tol);
  if (cls != ChannelClass::kQuantumLimitedAmplifier && cls != ChannelClass::kIdentity) {
    throw Error(ErrorCode::kNotQuantumLimitedAmplifier, "expected a quantum-limited amplifier");
  }
  if (!is_diagonal(amp.K(), tol) || !is_diagonal(amp.mu(), tol)) {
    throw Error(ErrorCode::kNotDiagonal, "amplifier must be diagonal");
  }
  std::vector<double> k;
  for (Eigen::Index j = 0; j < amp.K().rows(); ++j) {
    const double kappa = std::max(1.0, std::abs(amp.K()(j, j)));
    k.push_back(std::sqrt(1.0 - 1.0 / (kappa * kappa)));
  }
  return attenuator_channel(k);
}

StrictnessReport strictness_conditions(const GaugeCovariantChannel& ch, double tol) {
  const CMatrix I = identity(ch.modes());
  const CMatrix excess = ch.K() * ch.K().adjoint() - I;
  const CMatrix slack = ch.mu() - 0.5 * excess;
  StrictnessReport r{};
  r.condition_a = min_singular_value(ch.K()) > tol && min_eigenvalue(slack) > tol;
  r.condition_b = min_eigenvalue(excess) > tol && max_abs(slack) <= tol;
  return r;
}

GaugeCovariantChannel identity_channel(int modes) {
  if (modes < 1) throw Error(ErrorCode::kDimensionMismatch, "mode count must be positive");
  return GaugeCovariantChannel::trusted(identity(modes), CMatrix::Zero(modes, modes));
}

GaugeCovariantChannel attenuator_channel(const std::vector<double>& k) {
  std::vector<double> mu;
  for (double v : k) {
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::kParameterOutOfRange, "attenuator k outside [0, 1]");
    mu.push_back(0.5 * (1.0 - v * v));
  }
  return GaugeCovariantChannel::trusted(diag_matrix(k), diag_matrix(mu));
}

GaugeCovariantChannel amplifier_channel(const std::vector<double>& kappa) {
  std::vector<double> mu;
  for (double v : kappa) {
    if (!(v >= 1.0)) throw Error(ErrorCode::kParameterOutOfRange, "amplifier gain below 1");
    mu.push_back(0.5 * (v * v - 1.0));
  }
  return GaugeCovariantChannel::trusted(diag_matrix(kappa), diag_matrix(mu));
}

GaugeCovariantChannel classical_noise_channel(int modes, double noise) {
  if (!(noise >= 0.0)) throw Error(ErrorCode::kParameterOutOfRange, "noise must be nonnegative");
  return GaugeCovariantChannel::trusted(identity(modes), noise * identity(modes));
}

GaugeCovariantChannel unitary_channel(const CMatrix& U, double tol) {
  return build_channel(U, CMatrix::Zero(U.rows(), U.cols()), tol);
}

CMatrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  CMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = cplx(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

GaugeCovariantChannel random_valid_channel(int modes, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> gain(0.05, 2.5);
  std::normal_distribution<double> gauss;
  RVector sv(modes);
  for (Eigen::Index j = 0; j < modes; ++j) sv(j) = gain(rng);
  const CMatrix K = random_unitary(modes, rng) * sv.cast<cplx>().asDiagonal() * random_unitary(modes, rng);
  const CMatrix I = identity(modes);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(0.5 * (I - K * K.adjoint())));
  const CMatrix abs_gap =
      es.eigenvectors() * es.eigenvalues().cwiseAbs().cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  CMatrix w(modes, modes);
  for (Eigen::Index j = 0; j < modes; ++j) {
    for (Eigen::Index i = 0; i < modes; ++i) w(i, j) = cplx(gauss(rng), gauss(rng));
  }
  return GaugeCovariantChannel::trusted(K, abs_gap + 0.25 * w * w.adjoint());
}

}  // namespace gausslab
