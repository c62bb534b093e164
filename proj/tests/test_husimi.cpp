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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gausslab/error.hpp"
#include "gausslab/husimi.hpp"
#include "oracles/oracles.hpp"

namespace gausslab {
namespace {

const FockSpace kSpace = FockSpace::make(1, 40);
const ReferenceState kCoherent = ReferenceState::make(0.5);

FockOperator fock(int n) { return density(fock_state(n, kSpace)); }

double thermal_entropy(double N) { return (N + 1) * std::log(N + 1) - (N > 0 ? N * std::log(N) : 0.0); }

TEST(Grid, Guards) {
  EXPECT_EQ(PhaseSpaceGrid{}.nodes(), 241);
  EXPECT_THROW(PhaseSpaceGrid::make(0.0, 0.05), Error);
  EXPECT_THROW(PhaseSpaceGrid::make(6.0, -1.0), Error);
  EXPECT_THROW(PhaseSpaceGrid::make(21.0, 0.05), Error);
  EXPECT_NO_THROW(PhaseSpaceGrid::make(20.0, 0.05));
  EXPECT_THROW(ReferenceState::make(0.4), Error);
}

TEST(HusimiDensity, FockClosedForms) {
  const PhaseSpaceGrid g;
  const HusimiField vac = husimi_density(fock(0), kCoherent, g);
  const HusimiField one = husimi_density(fock(1), kCoherent, g);
  double worst = 0.0;
  for (int iy = 0; iy < g.nodes(); iy += 7) {
    for (int ix = 0; ix < g.nodes(); ix += 7) {
      const double r2 = g.coord(ix) * g.coord(ix) + g.coord(iy) * g.coord(iy);
      worst = std::max(worst, std::abs(vac.at(ix, iy) - std::exp(-r2)));
      worst = std::max(worst, std::abs(one.at(ix, iy) - r2 * std::exp(-r2)));
    }
  }
  EXPECT_LT(worst, 1e-6);
  EXPECT_NEAR(vac.max_value(), 1.0, 1e-12);
}

TEST(HusimiDensity, MixedStateMatchesOracle) {
  const PureState a = random_pure_state(9, kSpace, 5);
  const PureState b = coherent_state(cplx(0.4, -0.9), kSpace);
  FockOperator rho = density(a);
  rho.matrix = 0.3 * rho.matrix + 0.7 * density(b).matrix;
  const PhaseSpaceGrid g = PhaseSpaceGrid::make(6.0, 0.1);
  const HusimiField field = husimi_density(rho, kCoherent, g);
  for (int iy = 3; iy < g.nodes(); iy += 17) {
    for (int ix = 5; ix < g.nodes(); ix += 13) {
      const cplx z(g.coord(ix), g.coord(iy));
      EXPECT_NEAR(field.at(ix, iy), oracle::husimi_at(rho.matrix, z), 1e-12);
    }
  }
  EXPECT_NEAR(field.integral() + field.tail_mass, 1.0, 1e-4);
  EXPECT_LE(field.max_value(), 1.0 + 1e-8);
}

TEST(HusimiDensity, NormalizedForRandomStates) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const HusimiField field = husimi_density(density(random_pure_state(s, kSpace, 6)), kCoherent, PhaseSpaceGrid{});
    EXPECT_NEAR(field.integral(), 1.0, 1e-4);
    EXPECT_LE(field.max_value(), 1.0 + 1e-8);
  }
}

TEST(HusimiDensity, TailGuard) {
  try {
    husimi_density(density(coherent_state(3.0, kSpace)), kCoherent, PhaseSpaceGrid::make(2.0, 0.05));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTailMassTooLarge);
  }
}

TEST(HusimiDensity, ThreadsGiveIdenticalFields) {
  const FockOperator rho = density(random_pure_state(4, kSpace, 6));
  EXPECT_EQ(husimi_density(rho, kCoherent, PhaseSpaceGrid{}, 1.0, 1e-4, 1).values,
            husimi_density(rho, kCoherent, PhaseSpaceGrid{}, 1.0, 1e-4, 3).values);
}

TEST(Wehrl, FockValues) {
  const auto vn = ConcaveFunctional::von_neumann();
  const PhaseSpaceGrid g;
  EXPECT_NEAR(classical_functional(husimi_density(fock(0), kCoherent, g), vn), 1.0, 1e-6);
  EXPECT_NEAR(classical_functional(husimi_density(fock(1), kCoherent, g), vn), 1.0 + std::numbers::egamma, 1e-6);
  EXPECT_NEAR(classical_functional(husimi_density(fock(2), kCoherent, g), vn), oracle::wehrl_fock(2), 1e-6);
  EXPECT_NEAR(classical_functional(husimi_density(density(coherent_state(0.8, kSpace)), kCoherent, g), vn), 1.0,
              1e-6);
  // Renyi-2 of the vacuum field: -integral e^{-2|z|^2} d^2z / pi = -1/2.
  EXPECT_NEAR(classical_functional(husimi_density(fock(0), kCoherent, g), ConcaveFunctional::renyi(2.0)), -0.5,
              1e-8);
}

TEST(Wehrl, ThermalReference) {
  const PhaseSpaceGrid g = PhaseSpaceGrid::make(8.0, 0.05);
  const HusimiField vac = husimi_density(fock(0), ReferenceState::make(1.0), g);
  EXPECT_NEAR(classical_functional(vac, ConcaveFunctional::von_neumann()), 1.0 + std::log(1.5), 1e-6);
}

TEST(Wehrl, OptimalityTest) {
  const OptimalityReport r =
      wehrl_optimality_test(0.5, 10, 3, PhaseSpaceGrid{}, ConcaveFunctional::von_neumann(), 40, 6, 1e-3, 1);
  EXPECT_NEAR(r.vacuum_value, 1.0, 1e-6);
  EXPECT_EQ(r.below_vacuum, 0u);
  EXPECT_EQ(r.samples, 13u);
  EXPECT_EQ(r.best_input_descriptor, "coherent(0.8+0i)");
  const OptimalityReport t =
      wehrl_optimality_test(1.0, 5, 3, PhaseSpaceGrid::make(8.0, 0.05), ConcaveFunctional::von_neumann(), 40, 4);
  EXPECT_NEAR(t.vacuum_value, 1.0 + std::log(1.5), 1e-6);
  EXPECT_EQ(t.below_vacuum, 0u);
  const OptimalityReport q =
      wehrl_optimality_test(0.5, 5, 3, PhaseSpaceGrid{}, ConcaveFunctional::renyi(2.0), 40, 4);
  for (const auto& rec : q.records) EXPECT_GE(rec.value, -1.0);
}

TEST(NormalDensity, Moments) {
  const PhaseSpaceGrid g = PhaseSpaceGrid::make(10.0, 0.05);
  for (double a : {0.5, 1.0, 2.0}) {
    const HusimiField p = normal_density(a, g);
    EXPECT_NEAR(p.integral(), 1.0, 1e-10);
    double second = 0.0;
    for (int iy = 0; iy < g.nodes(); ++iy)
      for (int ix = 0; ix < g.nodes(); ++ix)
        if (g.inside(ix, iy)) second += (g.coord(ix) * g.coord(ix) + g.coord(iy) * g.coord(iy)) * p.at(ix, iy);
    EXPECT_NEAR(second * p.weight(), 2 * a, 1e-8);
  }
  EXPECT_THROW(normal_density(0.0, g), Error);
}

TEST(Convolution, GaussiansAdd) {
  const PhaseSpaceGrid g = PhaseSpaceGrid::make(10.0, 0.05);
  const HusimiField sum = convolve_normal(normal_density(0.5, g), 1.0);
  const HusimiField ref = normal_density(1.5, g);
  double worst = 0.0;
  for (int iy = 0; iy < g.nodes(); ++iy)
    for (int ix = 0; ix < g.nodes(); ++ix)
      if (g.inside(ix, iy)) worst = std::max(worst, std::abs(sum.at(ix, iy) - ref.at(ix, iy)));
  EXPECT_LT(worst, 1e-9);
  EXPECT_THROW(convolve_normal(ref, -1.0), Error);
}

TEST(MeasureReprepare, ChannelAndOutput) {
  const GaugeCovariantChannel ch = measure_reprepare_channel(2.0, 0.5, 0.5);
  EXPECT_NEAR(ch.K()(0, 0).real(), 2.0, 0);
  EXPECT_NEAR(ch.mu()(0, 0).real(), 2.5, 1e-15);
  EXPECT_THROW(measure_reprepare_channel(0.0, 0.5, 0.5), Error);
  EXPECT_THROW(measure_reprepare_channel(1.0, 0.3, 0.5), Error);
  const FockOperator sigma = measure_reprepare_output(fock(0), 2.0, 0.5, 0.5);
  EXPECT_LE(sigma.leakage, 1e-9);
  EXPECT_GT(sigma.space.cutoff, 40);
  // Thermal output with alpha = c^2 / 2 + mu = 4.5; the truncated tail
  // carries weight n, so the moment converges slower than the trace.
  EXPECT_NEAR(correlation_scalar(sigma), 4.5, 1e-6);
  const auto spec = spectrum(sigma);
  for (std::size_t n = 0; n < 10; ++n) EXPECT_NEAR(spec[n], std::pow(0.8, n) * 0.2, 1e-9);
}

TEST(BerezinLieb, VacuumClosedForms) {
  const BerezinLiebReport r =
      berezin_lieb_check(fock(0), 2.0, 0.5, 0.5, ConcaveFunctional::von_neumann(), PhaseSpaceGrid{});
  EXPECT_NEAR(r.lower, 1.0 + std::log(4.0), 1e-6);
  EXPECT_NEAR(r.middle, thermal_entropy(4.0), 1e-6);
  EXPECT_NEAR(r.upper, 1.0 + std::log(5.0), 1e-6);
  EXPECT_GT(r.lower_slack, 0.0);
  EXPECT_GT(r.upper_slack, 0.0);
}

TEST(BerezinLieb, LinearFunctionalIsExact) {
  const auto linear = ConcaveFunctional::polygonal({{0.0, 0.0}, {1.0, 1.0}});
  const BerezinLiebReport r = berezin_lieb_check(fock(1), 1.5, 0.5, 0.5, linear, PhaseSpaceGrid{});
  EXPECT_NEAR(r.lower, 1.0, 1e-4);
  EXPECT_NEAR(r.middle, 1.0, 1e-8);
  EXPECT_NEAR(r.upper, 1.0, 1e-4);
}

TEST(BerezinLieb, SandwichHoldsForFunctionals) {
  const SandwichFields fields = sandwich_fields(fock(1), 2.0, 0.5, 0.5, PhaseSpaceGrid{});
  for (const auto& f : {ConcaveFunctional::von_neumann(), ConcaveFunctional::renyi(2.0),
                        ConcaveFunctional::renyi(1.5), ConcaveFunctional::min_with(0.05)}) {
    const BerezinLiebReport r = berezin_lieb_check(fields, f);
    EXPECT_GE(r.lower_slack, -1e-8) << f.describe();
    EXPECT_GE(r.upper_slack, -1e-8) << f.describe();
  }
  EXPECT_LT(convolution_deviation(fields, 0.5), 1e-8);
}

TEST(BerezinLieb, SlackShrinksWithScale) {
  // Both bounds tighten as c grows: relative to the middle value, the
  // lower slack at c = 3 is below the slack at c = 1.5.
  const auto vn = ConcaveFunctional::von_neumann();
  const auto a = berezin_lieb_check(fock(1), 1.5, 0.5, 0.5, vn, PhaseSpaceGrid{});
  const auto b = berezin_lieb_check(fock(1), 3.0, 0.5, 0.5, vn, PhaseSpaceGrid{});
  EXPECT_LT(b.lower_slack / b.middle, a.lower_slack / a.middle);
}

TEST(FieldCsv, HeaderAndRows) {
  const PhaseSpaceGrid g = PhaseSpaceGrid::make(0.2, 0.1);
  std::ostringstream os;
  write_field_csv(husimi_density(fock(0), kCoherent, g, 1.0, 1.0), os);
  const std::string text = os.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "x,y,p");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 13);
}

}  // namespace
}  // namespace gausslab
