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
#include <string>
#include <vector>

namespace gausslab {

/// Descending list of eigenvalues in [0, 1] with sum <= 1 + 1e-8.
class SpectrumVector {
 public:
  SpectrumVector() = default;

  /// Sorts descending. Entries in [-clamp, 0) become 0; more negative
  /// entries, entries above 1 + 1e-8 or a sum above 1 + 1e-8 throw
  /// InvalidState.
  explicit SpectrumVector(std::vector<double> values, double clamp = 1e-8);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return i < values_.size() ? values_[i] : 0.0; }
  double sum() const;

  /// Mass missing from a unit-trace state, clamped at 0.
  double deficit() const;

 private:
  std::vector<double> values_;
};

/// Concave f on [0, 1] with f(0) = 0.
class ConcaveFunctional {
 public:
  enum class Kind { kVonNeumann, kRenyi, kPolygonal };

  static ConcaveFunctional von_neumann();
  /// f(x) = -x^p, p > 1.
  static ConcaveFunctional renyi(double p);
  /// Piecewise linear through `knots`, which must start at (0, 0), have
  /// strictly increasing x and nonincreasing slopes. Beyond the last knot the
  /// last slope is continued.
  static ConcaveFunctional polygonal(std::vector<std::pair<double, double>> knots);
  /// min(x, t) as a polygonal functional.
  static ConcaveFunctional min_with(double t);
  /// Interpolant of -x ln x on n + 1 equispaced knots over [0, 1].
  static ConcaveFunctional von_neumann_interpolant(int n);

  Kind kind() const { return kind_; }
  double order() const { return p_; }
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

  /// f(x); x may exceed 1 for phase-space densities.
  double operator()(double x) const;

  /// True when f is strictly concave (von Neumann and Renyi).
  bool strictly_concave() const { return kind_ != Kind::kPolygonal; }

  std::string describe() const;

 private:
  ConcaveFunctional(Kind kind, double p, std::vector<std::pair<double, double>> knots)
      : kind_(kind), p_(p), knots_(std::move(knots)) {}

  Kind kind_;
  double p_;
  std::vector<std::pair<double, double>> knots_;
};

/// sum_i f(lambda_i)
double trace_functional(const SpectrumVector& spec, const ConcaveFunctional& f);

/// Every partial sum of `a` dominates that of `b` up to `tol`. The shorter
/// vector is padded with zeros.
bool majorizes(const SpectrumVector& a, const SpectrumVector& b, double tol = 1e-8);

/// max over m of (sum_{i<m} b_i - sum_{i<m} a_i); <= 0 when `a` majorizes `b`.
double worst_partial_sum_deficit(const SpectrumVector& a, const SpectrumVector& b);

}  // namespace gausslab
