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

#include "gausslab/channel.hpp"
#include "gausslab/error.hpp"
#include "gausslab/linalg.hpp"

namespace gausslab {
namespace {

CMatrix diag(std::initializer_list<double> v) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

CMatrix scalar(cplx x) { return CMatrix::Constant(1, 1, x); }

TEST(BuildChannel, AcceptsIdentityAndBoundaryNoise) {
  EXPECT_NO_THROW(build_channel(diag({1.0}), diag({0.0})));
  EXPECT_NO_THROW(build_channel(diag({2.0}), diag({1.5})));
  EXPECT_NO_THROW(build_channel(diag({0.5}), diag({0.375})));
}

TEST(BuildChannel, ReportsViolatedBranchAndEigenvalue) {
  // mu + (I - KK*)/2 = 0.1 + (1 - 2.25)/2
  try {
    build_channel(diag({1.5}), diag({0.1}));
    FAIL() << "expected InvalidNoise";
  } catch (const InvalidNoiseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidNoise);
    EXPECT_EQ(e.sign(), -1);
    EXPECT_NEAR(e.min_eigenvalue(), -0.525, 1e-12);
  }
  // mu - (I - KK*)/2 = 0.1 - 0.375
  try {
    build_channel(diag({0.5}), diag({0.1}));
    FAIL() << "expected InvalidNoise";
  } catch (const InvalidNoiseError& e) {
    EXPECT_EQ(e.sign(), +1);
    EXPECT_NEAR(e.min_eigenvalue(), -0.275, 1e-12);
  }
}

TEST(BuildChannel, RejectsShapeAndHermiticity) {
  CMatrix mu = diag({1.0, 1.0});
  mu(0, 1) = cplx(0.0, 0.5);
  try {
    build_channel(diag({1.0, 1.0}), mu);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotHermitian);
  }
  try {
    build_channel(diag({1.0, 1.0}), diag({1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Classify, WorkedExamples) {
  EXPECT_EQ(classify(identity_channel(2)), ChannelClass::kIdentity);
  EXPECT_EQ(classify(build_channel(diag({2.0}), diag({1.5}))), ChannelClass::kQuantumLimitedAmplifier);
  EXPECT_EQ(classify(build_channel(diag({0.5, 2.0}), diag({0.375, 1.5}))), ChannelClass::kGeneral);
  EXPECT_EQ(classify(attenuator_channel({0.6})), ChannelClass::kQuantumLimitedAttenuator);
  // KK* = I sits on both sides; the attenuator test runs first.
  EXPECT_EQ(classify(classical_noise_channel(1, 0.5)), ChannelClass::kAttenuator);
  EXPECT_EQ(classify(build_channel(diag({0.5}), diag({0.5}))), ChannelClass::kAttenuator);
  EXPECT_EQ(to_string(ChannelClass::kIdentity), "Identity");
}

TEST(Classify, DegenerateCasesResolveToIdentity) {
  // KK* = I and mu = 0 is both a degenerate attenuator and amplifier.
  std::mt19937_64 rng(3);
  EXPECT_EQ(classify(unitary_channel(CMatrix::Identity(2, 2))), ChannelClass::kIdentity);
  EXPECT_EQ(classify(attenuator_channel({1.0})), ChannelClass::kIdentity);
  EXPECT_EQ(classify(amplifier_channel({1.0})), ChannelClass::kIdentity);
  // A non-trivial unitary satisfies both boundary equalities with mu = 0;
  // the attenuator branch is tested first.
  EXPECT_EQ(classify(unitary_channel(random_unitary(2, rng))), ChannelClass::kQuantumLimitedAttenuator);
}

TEST(Concatenate, WorkedArithmetic) {
  const auto ch = concatenate(attenuator_channel({0.5}), amplifier_channel({2.0}));
  EXPECT_NEAR(ch.K()(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(ch.mu()(0, 0).real(), 3.0, 1e-15);
  const auto a = attenuator_channel({0.3});
  const auto same = concatenate(a, identity_channel(1));
  EXPECT_LT(max_abs(same.K() - a.K()) + max_abs(same.mu() - a.mu()), 1e-15);
  EXPECT_THROW(concatenate(identity_channel(1), identity_channel(2)), Error);
}

TEST(Concatenate, QuantumLimitedPairsStayValid) {
  for (double k : {0.0, 0.3, 0.7, 1.0}) {
    for (double kappa : {1.0, 1.3, 2.5}) {
      const auto ch = concatenate(attenuator_channel({k}), amplifier_channel({kappa}));
      EXPECT_NO_THROW(build_channel(ch.K(), ch.mu())) << k << " " << kappa;
    }
  }
}

TEST(Decompose, ClassicalNoiseClosedForm) {
  const double N = 0.8;
  const Decomposition d = decompose(classical_noise_channel(1, N));
  EXPECT_NEAR(d.amplifier.K()(0, 0).real(), std::sqrt(N + 1), 1e-14);
  EXPECT_NEAR(d.attenuator.K()(0, 0).real(), 1 / std::sqrt(N + 1), 1e-14);
}

TEST(Decompose, IdentityFactors) {
  const Decomposition d = decompose(identity_channel(2));
  EXPECT_EQ(classify(d.attenuator), ChannelClass::kIdentity);
  EXPECT_EQ(classify(d.amplifier), ChannelClass::kIdentity);
}

TEST(Decompose, MeasureReprepareExample) {
  // K = 3, mu = 1/2 + 9/2: K2 = sqrt(10), K1 = 3 / sqrt(10)
  const Decomposition d = decompose(build_channel(diag({3.0}), diag({5.0})));
  EXPECT_NEAR(d.amplifier.K()(0, 0).real(), std::sqrt(10.0), 1e-13);
  EXPECT_NEAR(d.attenuator.K()(0, 0).real(), 3.0 / std::sqrt(10.0), 1e-13);
}

// Property: concatenate(decompose(ch)) = ch with quantum-limited factors.
class DecomposeRoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(DecomposeRoundTrip, RandomChannels) {
  const int modes = GetParam();
  for (std::uint64_t i = 0; i < 40; ++i) {
    std::mt19937_64 rng(mix_seed(77, i * 4 + static_cast<std::uint64_t>(modes)));
    const auto ch = random_valid_channel(modes, rng);
    const Decomposition d = decompose(ch);
    const auto back = concatenate(d.attenuator, d.amplifier);
    EXPECT_LT(max_abs(back.K() - ch.K()), 1e-10);
    EXPECT_LT(max_abs(back.mu() - ch.mu()), 1e-10);
    const ChannelClass a = classify(d.attenuator), b = classify(d.amplifier);
    EXPECT_TRUE(a == ChannelClass::kQuantumLimitedAttenuator || a == ChannelClass::kIdentity);
    EXPECT_TRUE(b == ChannelClass::kQuantumLimitedAmplifier || b == ChannelClass::kIdentity);
    EXPECT_GE(hermitian_eigenvalues(d.amplifier.K() - CMatrix::Identity(modes, modes)).minCoeff(), -1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, DecomposeRoundTrip, ::testing::Values(1, 2, 3));

TEST(Diagonalize, AlreadyDiagonal) {
  const DiagonalForm f = diagonalize(attenuator_channel({0.7}));
  ASSERT_EQ(f.k_diag.size(), 1u);
  EXPECT_NEAR(f.k_diag[0], 0.7, 1e-15);
  EXPECT_NEAR(std::abs(f.V_A(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f.V_B(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_FALSE(f.per_mode[0].amplifier);
}

TEST(Diagonalize, RecoversSingularValuesOfRotatedAmplifier) {
  std::mt19937_64 rng(11);
  const CMatrix U = random_unitary(2, rng), V = random_unitary(2, rng);
  const CMatrix K = U * diag({1.5, 2.0}) * V;
  const CMatrix mu = 0.5 * (K * K.adjoint() - CMatrix::Identity(2, 2));
  const auto ch = build_channel(K, mu);
  const DiagonalForm f = diagonalize(ch);
  EXPECT_NEAR(f.k_diag[0], 2.0, 1e-12);
  EXPECT_NEAR(f.k_diag[1], 1.5, 1e-12);
  EXPECT_TRUE(f.per_mode[0].amplifier);
  const auto back = reconstruct(f);
  EXPECT_LT(max_abs(back.K() - ch.K()), 1e-12);
  EXPECT_LT(max_abs(back.mu() - ch.mu()), 1e-12);
  // Phase convention: largest-modulus entry of each row of V_A is real positive.
  for (int r = 0; r < 2; ++r) {
    Eigen::Index j;
    f.V_A.row(r).cwiseAbs().maxCoeff(&j);
    EXPECT_NEAR(f.V_A(r, j).imag(), 0.0, 1e-12);
    EXPECT_GT(f.V_A(r, j).real(), 0.0);
  }
}

TEST(Diagonalize, ZeroSingularValue) {
  const CMatrix K = diag({0.0, 0.6});
  const auto ch = build_channel(K, 0.5 * (CMatrix::Identity(2, 2) - K * K.adjoint()));
  const DiagonalForm f = diagonalize(ch);
  EXPECT_NEAR(f.k_diag[1], 0.0, 1e-15);
  EXPECT_FALSE(f.per_mode[1].amplifier);
}

TEST(Diagonalize, RefusesNonQuantumLimited) {
  try {
    diagonalize(classical_noise_channel(1, 0.5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotQuantumLimited);
  }
}

TEST(ComplementaryAttenuator, Formula) {
  EXPECT_NEAR(complementary_attenuator_of(amplifier_channel({1.0})).K()(0, 0).real(), 0.0, 1e-15);
  EXPECT_NEAR(complementary_attenuator_of(amplifier_channel({2.0})).K()(0, 0).real(), std::sqrt(3.0) / 2, 1e-15);
  const auto two = complementary_attenuator_of(amplifier_channel({1.2, 3.0}));
  EXPECT_NEAR(two.K()(0, 0).real(), std::sqrt(1 - 1 / 1.44), 1e-15);
  EXPECT_NEAR(two.K()(1, 1).real(), std::sqrt(1 - 1 / 9.0), 1e-15);
  try {
    complementary_attenuator_of(attenuator_channel({0.5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotQuantumLimitedAmplifier);
  }
  std::mt19937_64 rng(5);
  const CMatrix U = random_unitary(2, rng);
  const CMatrix K = U * diag({1.5, 2.0}) * U.adjoint();
  try {
    complementary_attenuator_of(build_channel(K, 0.5 * (K * K.adjoint() - CMatrix::Identity(2, 2))));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDiagonal);
  }
}

TEST(Strictness, WorkedExamples) {
  const auto noise = strictness_conditions(classical_noise_channel(1, 0.3));
  EXPECT_TRUE(noise.condition_a);
  const auto amp = strictness_conditions(amplifier_channel({2.0}));
  EXPECT_TRUE(amp.condition_b);
  EXPECT_FALSE(amp.condition_a);
  // mu - (KK* - I)/2 = 0.375 + 0.375 > 0 with K invertible.
  const auto att = strictness_conditions(attenuator_channel({0.5}));
  EXPECT_TRUE(att.condition_a);
  EXPECT_FALSE(att.condition_b);
  const auto id = strictness_conditions(identity_channel(1));
  EXPECT_FALSE(id.condition_a || id.condition_b);
}

TEST(TensorChannel, BlockAssembly) {
  const auto t = tensor_channel(attenuator_channel({0.5}), amplifier_channel({2.0}));
  EXPECT_LT(max_abs(t.K() - diag({0.5, 2.0})), 1e-15);
  EXPECT_LT(max_abs(t.mu() - diag({0.375, 1.5})), 1e-15);
  EXPECT_EQ(classify(tensor_channel(identity_channel(1), identity_channel(1))), ChannelClass::kIdentity);
}

TEST(RandomUnitary, IsUnitaryAndSeeded) {
  std::mt19937_64 a(9), b(9);
  const CMatrix U = random_unitary(3, a);
  EXPECT_LT(max_abs(U * U.adjoint() - CMatrix::Identity(3, 3)), 1e-13);
  EXPECT_EQ(max_abs(U - random_unitary(3, b)), 0.0);
}

}  // namespace
}  // namespace gausslab
