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

#include "gausslab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "gausslab/error.hpp"
#include "gausslab/linalg.hpp"

namespace gausslab {

SpectrumVector::SpectrumVector(std::vector<double> values, double clamp) : values_(std::move(values)) {
  CompensatedSum total;
  for (double& v : values_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidState, "non-finite eigenvalue");
    if (v < 0.0) {
      if (v < -clamp) throw Error(ErrorCode::kInvalidState, "negative eigenvalue below clamp");
      v = 0.0;
    }
    if (v > 1.0 + 1e-8) throw Error(ErrorCode::kInvalidState, "eigenvalue above 1");
    total.add(v);
  }
  if (total.value() > 1.0 + 1e-8) throw Error(ErrorCode::kInvalidState, "spectrum sums above 1");
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double SpectrumVector::sum() const {
  CompensatedSum total;
  for (double v : values_) total.add(v);
  return total.value();
}

double SpectrumVector::deficit() const { return std::max(0.0, 1.0 - sum()); }

ConcaveFunctional ConcaveFunctional::von_neumann() { return {Kind::kVonNeumann, 1.0, {}}; }

ConcaveFunctional ConcaveFunctional::renyi(double p) {
  if (!(p > 1.0)) throw Error(ErrorCode::kInvalidOrder, "Renyi order must exceed 1");
  return {Kind::kRenyi, p, {}};
}

ConcaveFunctional ConcaveFunctional::polygonal(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw Error(ErrorCode::kParameterOutOfRange, "polygonal needs two knots");
  if (knots.front().first != 0.0 || knots.front().second != 0.0) {
    throw Error(ErrorCode::kParameterOutOfRange, "polygonal must start at (0, 0)");
  }
  double prev_slope = INFINITY;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const double dx = knots[i].first - knots[i - 1].first;
    if (!(dx > 0.0)) throw Error(ErrorCode::kParameterOutOfRange, "knots must increase in x");
    const double slope = (knots[i].second - knots[i - 1].second) / dx;
    if (slope > prev_slope + 1e-12) throw Error(ErrorCode::kParameterOutOfRange, "knots are not concave");
    prev_slope = slope;
  }
  return {Kind::kPolygonal, 1.0, std::move(knots)};
}

ConcaveFunctional ConcaveFunctional::min_with(double t) {
  if (t < 0.0 || t > 1.0) throw Error(ErrorCode::kParameterOutOfRange, "threshold outside [0, 1]");
  if (t == 0.0) return polygonal({{0.0, 0.0}, {1.0, 0.0}});
  if (t == 1.0) return polygonal({{0.0, 0.0}, {1.0, 1.0}});
  return polygonal({{0.0, 0.0}, {t, t}, {1.0, t}});
}

ConcaveFunctional ConcaveFunctional::von_neumann_interpolant(int n) {
  if (n < 1) throw Error(ErrorCode::kParameterOutOfRange, "interpolant needs n >= 1");
  std::vector<std::pair<double, double>> knots;
  for (int i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    knots.emplace_back(x, x > 0.0 ? -x * std::log(x) : 0.0);
  }
  return polygonal(std::move(knots));
}

double ConcaveFunctional::operator()(double x) const {
  switch (kind_) {
    case Kind::kVonNeumann: return x > 0.0 ? -x * std::log(x) : 0.0;
    case Kind::kRenyi: return x > 0.0 ? -std::pow(x, p_) : 0.0;
    case Kind::kPolygonal: break;
  }
  // Segment lookup; the last segment extends to the right.
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                             [](double v, const auto& k) { return v < k.first; });
  std::size_t hi = static_cast<std::size_t>(it - knots_.begin());
  hi = std::clamp<std::size_t>(hi, 1, knots_.size() - 1);
  const auto& a = knots_[hi - 1];
  const auto& b = knots_[hi];
  return a.second + (b.second - a.second) * (x - a.first) / (b.first - a.first);
}

std::string ConcaveFunctional::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kVonNeumann: return "vonNeumann";
    case Kind::kRenyi: os << "renyi(" << p_ << ")"; return os.str();
    case Kind::kPolygonal: break;
  }
  os << "polygonal[";
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    os << (i ? " " : "") << "(" << knots_[i].first << "," << knots_[i].second << ")";
  }
  os << "]";
  return os.str();
}

double trace_functional(const SpectrumVector& spec, const ConcaveFunctional& f) {
  CompensatedSum total;
  for (double v : spec.values()) total.add(f(v));
  return total.value();
}

double worst_partial_sum_deficit(const SpectrumVector& a, const SpectrumVector& b) {
  const std::size_t n = std::max(a.size(), b.size());
  CompensatedSum sa, sb;
  double worst = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    sa.add(a[i]);
    sb.add(b[i]);
    worst = std::max(worst, sb.value() - sa.value());
  }
  return n == 0 ? 0.0 : worst;
}

bool majorizes(const SpectrumVector& a, const SpectrumVector& b, double tol) {
  return worst_partial_sum_deficit(a, b) <= tol;
}

}  // namespace gausslab
