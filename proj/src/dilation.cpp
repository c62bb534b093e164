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

#include "gausslab/dilation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "gausslab/error.hpp"

namespace gausslab::dilation {

std::vector<double> bessel_j_sequence(double x, int kmax) {
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const int top = std::max(kmax, static_cast<int>(x)) + 20 + static_cast<int>(std::sqrt(40.0 * (kmax + x)));
  int start = top + (top & 1);
  double next = 0.0;     // J_{k+1}
  double cur = 1e-300;   // J_k
  double norm = 0.0;     // J_0 + 2 sum J_2k, accumulated as we go
  for (int k = start; k >= 1; --k) {
    const double prev = (2.0 * k / x) * cur - next;
    next = cur;
    cur = prev;
    const int idx = k - 1;
    if (idx <= kmax) out[static_cast<std::size_t>(idx)] = cur;
    if (idx > 0 && idx % 2 == 0) norm += 2.0 * cur;
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
      for (int j = idx; j <= kmax; ++j) out[static_cast<std::size_t>(j)] *= 1e-250;
    }
  }
  norm += cur;
  for (double& v : out) v /= norm;
  return out;
}

std::vector<double> expm_tridiag(const std::vector<double>& lower, double theta,
                                 const std::vector<double>& v, const kernels::KernelTable& table) {
  const std::size_t n = v.size();
  if (lower.size() != n + 1) throw Error(ErrorCode::kDimensionMismatch, "lower must have n + 1 entries");
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(lower[i]) + std::abs(lower[i + 1]));
  if (radius == 0.0 || theta == 0.0) return v;
  const double x = std::abs(theta) * radius;
  // exp(-theta G) = exp(|theta| G^T); G^T is G with the sign of lower flipped.
  std::vector<double> gen = lower;
  if (theta < 0.0) {
    for (double& g : gen) g = -g;
  }
  const int kmax = static_cast<int>(x + 10.0 * std::cbrt(x) + 40.0);
  const std::vector<double> J = bessel_j_sequence(x, kmax);

  std::vector<double> result(n);
  for (std::size_t i = 0; i < n; ++i) result[i] = J[0] * v[i];
  std::vector<double> prev = v;
  std::vector<double> cur(n, 0.0);
  table.cheb_tridiag_step(gen.data(), 0.5 / radius, v.data(), cur.data(), n);
  table.axpy(2.0 * J[1], cur.data(), result.data(), n);
  for (int k = 1; k < kmax; ++k) {
    const double coeff = J[static_cast<std::size_t>(k) + 1];
    if (k > x && std::abs(coeff) < 1e-18) break;
    table.cheb_tridiag_step(gen.data(), 1.0 / radius, cur.data(), prev.data(), n);
    std::swap(prev, cur);
    table.axpy(2.0 * coeff, cur.data(), result.data(), n);
  }
  return result;
}

std::vector<double> beamsplitter_column(int n, double theta, const kernels::KernelTable& table) {
  if (n < 0) throw Error(ErrorCode::kParameterOutOfRange, "photon number must be nonnegative");
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<double> lower(dim + 1, 0.0);
  for (int i = 1; i <= n; ++i) lower[static_cast<std::size_t>(i)] = -std::sqrt(double(n - i + 1) * i);
  std::vector<double> e0(dim, 0.0);
  e0[0] = 1.0;
  return expm_tridiag(lower, theta, e0, table);
}

std::vector<double> squeezer_column(int n, double r, int len, const kernels::KernelTable& table) {
  if (n < 0 || len < 1) throw Error(ErrorCode::kParameterOutOfRange, "bad squeezer block request");
  if (r == 0.0) {
    std::vector<double> out(static_cast<std::size_t>(len), 0.0);
    out[0] = 1.0;
    return out;
  }
  auto propagate = [&](int ladder) {
    std::vector<double> lower(static_cast<std::size_t>(ladder) + 1, 0.0);
    for (int i = 1; i < ladder; ++i) lower[static_cast<std::size_t>(i)] = std::sqrt(double(n + i) * i);
    std::vector<double> e0(static_cast<std::size_t>(ladder), 0.0);
    e0[0] = 1.0;
    std::vector<double> psi = expm_tridiag(lower, r, e0, table);
    psi.resize(static_cast<std::size_t>(len));
    return psi;
  };
  int ladder = std::max(2 * len, 64);
  std::vector<double> last = propagate(ladder);
  constexpr int kMaxLadder = 1 << 17;
  while (ladder < kMaxLadder) {
    ladder *= 2;
    std::vector<double> next = propagate(ladder);
    double diff = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) diff = std::max(diff, std::abs(next[i] - last[i]));
    last = std::move(next);
    if (diff <= 1e-13) return last;
  }
  throw Error(ErrorCode::kTruncationLeakage, "squeezer ladder did not converge");
}

namespace {

struct ColumnCache {
  std::mutex mutex;
  std::map<std::tuple<int, std::uint64_t, int>, std::shared_ptr<const std::vector<double>>> entries;
};

ColumnCache& cache() {
  static ColumnCache c;
  return c;
}

}  // namespace

std::shared_ptr<const std::vector<double>> cached_beamsplitter_column(int n, double theta) {
  const auto key = std::make_tuple(0, std::bit_cast<std::uint64_t>(theta), n);
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.entries.find(key); it != c.entries.end()) return it->second;
  }
  auto value = std::make_shared<const std::vector<double>>(beamsplitter_column(n, theta));
  std::lock_guard lock(c.mutex);
  return c.entries.emplace(key, value).first->second;
}

std::shared_ptr<const std::vector<double>> cached_squeezer_column(int n, double r, int len) {
  const auto key = std::make_tuple(1, std::bit_cast<std::uint64_t>(r), n);
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.entries.find(key); it != c.entries.end() && static_cast<int>(it->second->size()) >= len) {
      return it->second;
    }
  }
  auto value = std::make_shared<const std::vector<double>>(squeezer_column(n, r, len));
  std::lock_guard lock(c.mutex);
  auto& slot = c.entries[key];
  if (!slot || slot->size() < value->size()) slot = value;
  return slot;
}

}  // namespace gausslab::dilation
