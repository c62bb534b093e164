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

#include "gausslab/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>

#include "gausslab/error.hpp"

namespace gausslab {

namespace {

void require_order(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::kInvalidOrder, "order p must exceed 1");
}

// (N + 1)^p - N^p, evaluated without cancellation for small N.
double purity_factor(double n, double p) {
  if (n == 0.0) return 1.0;
  return std::pow(n + 1.0, p) * -std::expm1(p * std::log(n / (n + 1.0)));
}

double g_entropy(double n) {
  if (n <= 0.0) return 0.0;
  return (n + 1.0) * std::log1p(n) - n * std::log(n);
}

}  // namespace

GaussianState GaussianState::from_alpha(const CMatrix& alpha, double tol) {
  if (alpha.rows() < 1 || alpha.rows() != alpha.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "alpha must be square");
  }
  if (max_abs(alpha - alpha.adjoint()) > 1e-12) throw Error(ErrorCode::kNotHermitian, "alpha not Hermitian");
  if (hermitian_eigenvalues(alpha).minCoeff() < 0.5 - tol) {
    throw Error(ErrorCode::kInvalidState, "alpha has an eigenvalue below 1/2");
  }
  return GaussianState(hermitian_part(alpha));
}

GaussianState vacuum(int modes) {
  if (modes < 1) throw Error(ErrorCode::kDimensionMismatch, "mode count must be positive");
  return GaussianState::from_alpha(0.5 * CMatrix::Identity(modes, modes));
}

GaussianState apply_channel(const GaugeCovariantChannel& ch, const GaussianState& st) {
  if (ch.modes() != st.modes()) throw Error(ErrorCode::kDimensionMismatch, "channel and state modes differ");
  const CMatrix out = ch.K() * st.alpha() * ch.K().adjoint() + ch.mu();
  return GaussianState::from_alpha(hermitian_part(out), 1e-9);
}

ThermalSpectrum thermal_spectrum(const GaussianState& st) {
  RVector a = hermitian_eigenvalues(st.alpha());
  ThermalSpectrum out;
  for (Eigen::Index j = a.size() - 1; j >= 0; --j) {
    double n = a(j) - 0.5;
    if (n < 0.0) {
      if (n < -1e-10) throw Error(ErrorCode::kInvalidState, "negative photon number");
      n = 0.0;
    }
    out.photon_numbers.push_back(n);
  }
  return out;
}

SpectrumVector eigenvalue_list(const ThermalSpectrum& spec, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::kParameterOutOfRange, "m must be positive");
  const auto& N = spec.photon_numbers;
  const std::size_t s = N.size();
  using Tuple = std::vector<int>;
  auto value = [&](const Tuple& occ) {
    double log_v = 0.0;
    for (std::size_t j = 0; j < s; ++j) {
      if (N[j] == 0.0) {
        if (occ[j] > 0) return 0.0;
        continue;
      }
      log_v += occ[j] * std::log(N[j]) - (occ[j] + 1) * std::log1p(N[j]);
    }
    return std::exp(log_v);
  };
  // Per-mode sequences decrease in n_j, so every successor of a tuple is no
  // larger than the tuple itself; best-first order yields the top m.
  std::priority_queue<std::pair<double, Tuple>> heap;
  std::set<Tuple> seen;
  Tuple start(s, 0);
  heap.emplace(value(start), start);
  seen.insert(start);
  std::vector<double> out;
  while (out.size() < m && !heap.empty()) {
    auto [v, occ] = heap.top();
    heap.pop();
    out.push_back(v);
    if (v == 0.0) continue;
    for (std::size_t j = 0; j < s; ++j) {
      if (N[j] == 0.0) continue;
      Tuple next = occ;
      ++next[j];
      if (seen.insert(next).second) heap.emplace(value(next), next);
    }
  }
  out.resize(m, 0.0);
  return SpectrumVector(std::move(out));
}

double von_neumann_entropy(const ThermalSpectrum& spec) {
  double total = 0.0;
  for (double n : spec.photon_numbers) total += g_entropy(n);
  return total;
}

double von_neumann_entropy(const GaussianState& st) { return von_neumann_entropy(thermal_spectrum(st)); }

double renyi_entropy(const ThermalSpectrum& spec, double p) {
  require_order(p);
  double total = 0.0;
  for (double n : spec.photon_numbers) total += std::log(purity_factor(n, p));
  return total / (p - 1.0);
}

double renyi_entropy(const GaussianState& st, double p) { return renyi_entropy(thermal_spectrum(st), p); }

double output_purity_determinant(const GaugeCovariantChannel& ch, double p) {
  require_order(p);
  const ThermalSpectrum spec = thermal_spectrum(apply_channel(ch, vacuum(ch.modes())));
  double det = 1.0;
  for (double n : spec.photon_numbers) det *= purity_factor(n, p);
  return det;
}

double output_purity(const GaugeCovariantChannel& ch, double p) {
  return 1.0 / output_purity_determinant(ch, p);
}

double minimal_output_renyi(const GaugeCovariantChannel& ch, double p) {
  return renyi_entropy(thermal_spectrum(apply_channel(ch, vacuum(ch.modes()))), p);
}

}  // namespace gausslab
