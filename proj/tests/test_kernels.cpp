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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gausslab/kernels/kernels.hpp"

namespace gausslab::kernels {
namespace {

std::vector<const KernelTable*> tables() {
  std::vector<const KernelTable*> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (const KernelTable* t = table_for(isa)) out.push_back(t);
  }
  return out;
}

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Sizes cover empty input, every remainder modulo the vector width and a
// few full blocks.
class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {};

TEST_P(KernelEquivalence, EveryTableMatchesScalar) {
  const std::size_t n = GetParam();
  const KernelTable& ref = scalar_table();
  std::mt19937_64 rng(n + 1);
  const auto x = random_vector(2 * n + 2, rng), y0 = random_vector(2 * n + 2, rng), c = random_vector(2 * n, rng);
  std::vector<double> lower = random_vector(n + 1, rng);
  lower[0] = 0.0;
  lower[n] = 0.0;
  for (const KernelTable* t : tables()) {
    SCOPED_TRACE(std::string(to_string(t->isa)));
    std::vector<double> a = y0, b = y0;
    ref.axpy(0.37, x.data(), a.data(), n);
    t->axpy(0.37, x.data(), b.data(), n);
    EXPECT_LE(max_diff(a, b), 1e-14);

    a = y0, b = y0;
    ref.caxpy(0.3, -1.1, x.data(), a.data(), n);
    t->caxpy(0.3, -1.1, x.data(), b.data(), n);
    EXPECT_LE(max_diff(a, b), 1e-14);

    a = y0, b = y0;
    ref.cmul_conj_axpy(-0.6, 0.25, c.data(), x.data(), a.data(), n);
    t->cmul_conj_axpy(-0.6, 0.25, c.data(), x.data(), b.data(), n);
    EXPECT_LE(max_diff(a, b), 1e-14);

    double da[2], db[2];
    ref.cdotc(x.data(), y0.data(), n, da);
    t->cdotc(x.data(), y0.data(), n, db);
    EXPECT_NEAR(da[0], db[0], 1e-12);
    EXPECT_NEAR(da[1], db[1], 1e-12);

    a = y0, b = y0;
    ref.cheb_tridiag_step(lower.data(), 0.8, x.data(), a.data(), n);
    t->cheb_tridiag_step(lower.data(), 0.8, x.data(), b.data(), n);
    EXPECT_LE(max_diff(a, b), 1e-13);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelEquivalence, ::testing::Values(0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 64, 101));

TEST(KernelDispatch, ScalarReferenceIsExact) {
  // Hand-checked values for the reference table.
  const KernelTable& t = scalar_table();
  double y[4] = {1, 2, 3, 4};
  const double x[4] = {1, 0, 0, 1};  // 1, i
  t.caxpy(0.0, 1.0, x, y, 2);        // y += i * x
  EXPECT_EQ(y[0], 1);
  EXPECT_EQ(y[1], 3);
  EXPECT_EQ(y[2], 2);
  EXPECT_EQ(y[3], 4);
  double out[2];
  t.cdotc(x, x, 2, out);
  EXPECT_EQ(out[0], 2);
  EXPECT_EQ(out[1], 0);
  EXPECT_NE(table_for(Isa::kScalar), nullptr);
  EXPECT_EQ(active().isa == Isa::kScalar || table_for(active().isa) != nullptr, true);
}

}  // namespace
}  // namespace gausslab::kernels
