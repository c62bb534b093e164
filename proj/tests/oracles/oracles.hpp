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

// Independent reference computations for the unit tests. Nothing here calls
// into the library's numerical paths; values produced by these functions are
// what the frozen constants in the tests were checked against.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using cplx = std::complex<double>;

inline double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// sum_n [(1 - q) q^n]^p with q = N / (N + 1), summed until the terms vanish.
inline double thermal_purity_series(double N, double p) {
  const double q = N / (N + 1.0);
  double total = 0.0;
  for (int n = 0; n < 100000; ++n) {
    const double term = std::pow((1.0 - q) * std::pow(q, n), p);
    total += term;
    if (term < 1e-18 * total) break;
  }
  return total;
}

/// -sum_n P_n ln P_n of a geometric distribution with mean N.
inline double thermal_entropy_series(double N) {
  const double q = N / (N + 1.0);
  double total = 0.0;
  for (int n = 0; n < 100000; ++n) {
    const double pn = (1.0 - q) * std::pow(q, n);
    if (pn <= 0.0) break;
    total -= pn * std::log(pn);
    if (pn < 1e-20) break;
  }
  return total;
}

/// Photon distribution of the quantum-limited amplifier output for |n>:
/// P(m) = C(m, n) kappa^{-2(n+1)} (1 - kappa^-2)^{m-n}, m >= n.
inline std::vector<double> amplifier_fock_output(double kappa, int n, int mmax) {
  const double t = 1.0 / (kappa * kappa);
  std::vector<double> p(static_cast<std::size_t>(mmax), 0.0);
  for (int m = n; m < mmax; ++m) {
    p[static_cast<std::size_t>(m)] =
        std::exp(log_binomial(m, n) + (n + 1) * std::log(t) + (m - n) * std::log1p(-t));
  }
  return p;
}

/// Binomial thinning of |n> by transmissivity k^2.
inline std::vector<double> attenuator_fock_output(double k, int n) {
  std::vector<double> p(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    p[static_cast<std::size_t>(m)] = std::exp(log_binomial(n, m)) * std::pow(k * k, m) * std::pow(1 - k * k, n - m);
  }
  return p;
}

/// Wehrl entropy of |n>: 1 + n + ln n! - n psi(n + 1).
inline double wehrl_fock(int n) {
  double harmonic = 0.0;
  for (int j = 1; j <= n; ++j) harmonic += 1.0 / j;
  const double digamma = harmonic - std::numbers::egamma;
  return 1.0 + n + std::lgamma(n + 1.0) - n * digamma;
}

/// <m|zeta> for m < d via logs of |zeta|^m / sqrt(m!).
inline Eigen::VectorXcd coherent_vector(cplx zeta, int d) {
  Eigen::VectorXcd v(d);
  const double r = std::abs(zeta), phase = std::arg(zeta);
  for (int m = 0; m < d; ++m) {
    const double logmag = -0.5 * r * r + (r > 0 ? m * std::log(r) : (m == 0 ? 0.0 : -INFINITY)) - 0.5 * std::lgamma(m + 1.0);
    v(m) = std::polar(std::exp(logmag), m * phase);
  }
  return v;
}

/// <zeta| rho |zeta>
inline double husimi_at(const Eigen::MatrixXcd& rho, cplx zeta) {
  const Eigen::VectorXcd v = coherent_vector(zeta, static_cast<int>(rho.rows()));
  return (v.adjoint() * rho * v)(0, 0).real();
}

/// Annihilation operator on one mode of a d x d product space.
inline Eigen::MatrixXd two_mode_annihilation(int d, int mode) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d * d, d * d);
  for (int n0 = 0; n0 < d; ++n0) {
    for (int n1 = 0; n1 < d; ++n1) {
      const int n = mode == 0 ? n0 : n1;
      if (n == 0) continue;
      const int from = n0 * d + n1;
      const int to = mode == 0 ? (n0 - 1) * d + n1 : n0 * d + (n1 - 1);
      a(to, from) = std::sqrt(static_cast<double>(n));
    }
  }
  return a;
}

/// Dense exp(theta (a+ b - a b+)) on two modes of cutoff d.
inline Eigen::MatrixXd dense_beamsplitter(int d, double theta) {
  const Eigen::MatrixXd a = two_mode_annihilation(d, 0), b = two_mode_annihilation(d, 1);
  const Eigen::MatrixXd g = theta * (a.transpose() * b - a * b.transpose());
  return g.exp();
}

/// Dense exp(r (a+ b+ - a b)) on two modes of cutoff d; truncated, so only
/// entries far from the cutoff are meaningful.
inline Eigen::MatrixXd dense_squeezer(int d, double r) {
  const Eigen::MatrixXd a = two_mode_annihilation(d, 0), b = two_mode_annihilation(d, 1);
  const Eigen::MatrixXd g = r * (a.transpose() * b.transpose() - a * b);
  return g.exp();
}

/// sqrt(C(n, j)) cos^{n-j}(theta) (-sin theta)^j
inline double beamsplitter_closed_form(int n, int j, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return std::exp(0.5 * log_binomial(n, j)) * std::pow(c, n - j) * std::pow(-s, j);
}

/// sqrt(C(n + l, l)) tanh^l(r) / cosh^{n+1}(r)
inline double squeezer_closed_form(int n, int l, double r) {
  return std::exp(0.5 * log_binomial(n + l, l) + l * std::log(std::tanh(r)) - (n + 1) * std::log(std::cosh(r)));
}

}  // namespace oracle
