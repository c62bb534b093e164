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

#include "gausslab/error.hpp"
#include "gausslab/gaussian_state.hpp"
#include "gausslab/majorization.hpp"
#include "oracles/oracles.hpp"

namespace gausslab {
namespace {

ChannelDescriptor amp15() { return ChannelDescriptor::make("amp", amplifier_channel({1.5})); }
ChannelDescriptor att06() { return ChannelDescriptor::make("att", attenuator_channel({0.6})); }
ChannelDescriptor noise05() { return ChannelDescriptor::make("noise", classical_noise_channel(1, 0.5)); }
ChannelDescriptor composite() {
  CMatrix K(1, 1), mu(1, 1);
  K(0, 0) = std::polar(1.2, 0.3);
  mu(0, 0) = 0.6;
  return ChannelDescriptor::make("composite", build_channel(K, mu));
}

double gap_of(const StrictGapReport& r, const std::string& descriptor) {
  for (const auto& g : r.gaps)
    if (g.descriptor == descriptor) return g.gap;
  ADD_FAILURE() << "no probe " << descriptor;
  return NAN;
}

double oracle_entropy(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p) s += x > 0 ? -x * std::log(x) : 0.0;
  return s;
}

double oracle_purity(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p) s += x * x;
  return s;
}

TEST(VacuumOptimality, IdentityOutputsArePure) {
  const auto id = ChannelDescriptor::make("id", identity_channel(1));
  const OptimalityReport r = vacuum_optimality_test(id, ConcaveFunctional::von_neumann(), 50, 3, LabConfig{});
  EXPECT_NEAR(r.vacuum_value, 0.0, 1e-12);
  EXPECT_LT(std::abs(r.gap), 1e-8);
  EXPECT_EQ(r.below_vacuum, 0u);
}

TEST(VacuumOptimality, AmplifierVacuumIsThermal) {
  const OptimalityReport r = vacuum_optimality_test(amp15(), ConcaveFunctional::von_neumann(), 100, 7, LabConfig{});
  EXPECT_NEAR(r.vacuum_value, oracle::thermal_entropy_series(1.25), 1e-9);
  EXPECT_NEAR(r.vacuum_value, 1.545663547344, 1e-11);
  EXPECT_EQ(r.below_vacuum, 0u);
  // Coherent probes tie with the vacuum.
  EXPECT_GT(r.gap, -1e-12);
  EXPECT_GE(r.records.size(), 100u);
  const OptimalityReport r2 = vacuum_optimality_test(amp15(), ConcaveFunctional::renyi(2.0), 20, 7, LabConfig{});
  EXPECT_NEAR(r2.vacuum_value, -output_purity(amplifier_channel({1.5}), 2.0), 1e-9);
  EXPECT_EQ(r2.below_vacuum, 0u);
}

TEST(VacuumOptimality, AttenuatorVacuumIsFixed) {
  const OptimalityReport r = vacuum_optimality_test(att06(), ConcaveFunctional::renyi(3.0), 50, 11, LabConfig{});
  EXPECT_NEAR(r.vacuum_value, -1.0, 1e-10);
  EXPECT_EQ(r.below_vacuum, 0u);
}

TEST(VacuumOptimality, ThreadCountDoesNotChangeRecords) {
  LabConfig one, two;
  two.threads = 2;
  const auto a = vacuum_optimality_test(amp15(), ConcaveFunctional::renyi(1.5), 30, 5, one);
  const auto b = vacuum_optimality_test(amp15(), ConcaveFunctional::renyi(1.5), 30, 5, two);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].seed, b.records[i].seed);
    EXPECT_EQ(a.records[i].value, b.records[i].value);
  }
}

TEST(Majorization, AmplifierSweepFrozen) {
  const MajorizationReport r = majorization_sweep(amp15(), 500, 7, LabConfig{});
  EXPECT_EQ(r.samples, 500u);
  EXPECT_EQ(r.passed, 500u);
  EXPECT_LT(r.worst_deficit, 1e-12);
  EXPECT_EQ(r.rejected, 0u);
}

TEST(Majorization, ProbesAndCompositeChannel) {
  const LabConfig cfg;
  for (const auto& ch : {att06(), composite(), noise05()}) {
    const MajorizationReport r = majorization_check(probe_outputs(ch, cfg), vacuum_output(ch, cfg), cfg.tol);
    EXPECT_EQ(r.passed, r.samples) << ch.name << " " << r.worst_input;
  }
}

TEST(Majorization, FailsWhenVacuumIsReplaced) {
  const LabConfig cfg;
  OutputSpectrum fake = output_spectrum(amp15(), fock_state(2, FockSpace::make(1, 40)), 80);
  const MajorizationReport r = majorization_check(sample_outputs(amp15(), 10, 1, cfg), fake, cfg.tol);
  EXPECT_LT(r.passed, r.samples);
  EXPECT_GT(r.worst_deficit, 1e-3);
}

TEST(StrictGap, FrozenVonNeumann) {
  const LabConfig cfg;
  const auto probes = deterministic_probes(FockSpace::make(1, cfg.cutoff));
  const auto vn = ConcaveFunctional::von_neumann();
  const StrictGapReport noise = strict_gap_probe(noise05(), vn, probes, cfg);
  EXPECT_NEAR(gap_of(noise, "fock|1>"), 0.607035191081, 1e-9);
  EXPECT_NEAR(gap_of(noise, "fock|2>"), 0.889733663475, 1e-9);
  EXPECT_NEAR(gap_of(noise, "(|0>+|1>)/sqrt2"), 0.170951407782, 1e-9);
  EXPECT_NEAR(gap_of(noise, "(|1>+i|2>)/sqrt2"), 0.533149290962, 1e-9);
  EXPECT_NEAR(gap_of(noise, "(|0>-|2>)/sqrt2"), 0.545637854278, 1e-9);
  EXPECT_NEAR(gap_of(noise, "(|0>+|1>+|2>)/sqrt3"), 0.228276049233, 1e-9);
  EXPECT_LT(noise.max_coherent_gap, 1e-6);
  const StrictGapReport amp = strict_gap_probe(amp15(), vn, probes, cfg);
  EXPECT_NEAR(gap_of(amp, "fock|1>"), 0.511479408679, 1e-9);
  EXPECT_NEAR(gap_of(amp, "fock|2>"), 0.792792094054, 1e-9);
  EXPECT_NEAR(gap_of(amp, "(|0>+|1>)/sqrt2"), 0.140556485975, 1e-9);
  EXPECT_NEAR(gap_of(amp, "(|0>+|1>+|2>)/sqrt3"), 0.191284015886, 1e-9);
  const StrictGapReport att = strict_gap_probe(att06(), vn, probes, cfg);
  EXPECT_NEAR(gap_of(att, "fock|2>"), 0.987434168785, 1e-9);
  const StrictGapReport comp = strict_gap_probe(composite(), vn, probes, cfg);
  EXPECT_NEAR(gap_of(comp, "fock|1>"), 0.601546660717, 1e-9);
  EXPECT_NEAR(gap_of(comp, "(|0>+|1>)/sqrt2"), 0.166707426232, 1e-9);
}

TEST(StrictGap, FockProbesMatchOracle) {
  const LabConfig cfg;
  const auto probes = deterministic_probes(FockSpace::make(1, cfg.cutoff));
  // Amplifier: vacuum output is thermal with N = kappa^2 - 1.
  const auto amp_out = oracle::amplifier_fock_output(1.5, 1, 400);
  const StrictGapReport vn = strict_gap_probe(amp15(), ConcaveFunctional::von_neumann(), probes, cfg);
  EXPECT_NEAR(gap_of(vn, "fock|1>"), oracle_entropy(amp_out) - oracle::thermal_entropy_series(1.25), 1e-9);
  const StrictGapReport r2 = strict_gap_probe(amp15(), ConcaveFunctional::renyi(2.0), probes, cfg);
  EXPECT_NEAR(gap_of(r2, "fock|1>"), 1 / 3.5 - oracle_purity(amp_out), 1e-9);
  EXPECT_NEAR(gap_of(r2, "fock|1>"), 0.131195335277, 1e-9);
  // Attenuator: |1> goes to the binomial pair (1 - k^2, k^2).
  const auto att_out = oracle::attenuator_fock_output(0.6, 1);
  const StrictGapReport a2 = strict_gap_probe(att06(), ConcaveFunctional::renyi(2.0), probes, cfg);
  EXPECT_NEAR(gap_of(a2, "fock|1>"), 1 - oracle_purity(att_out), 1e-12);
  EXPECT_NEAR(gap_of(a2, "fock|1>"), 0.4608, 1e-12);
  EXPECT_NEAR(gap_of(a2, "(|0>+|1>)/sqrt2"), 0.1152, 1e-12);
  const StrictGapReport avn = strict_gap_probe(att06(), ConcaveFunctional::von_neumann(), probes, cfg);
  EXPECT_NEAR(gap_of(avn, "fock|1>"), oracle_entropy(att_out), 1e-12);
}

TEST(StrictGap, FrozenRenyiTwo) {
  const LabConfig cfg;
  const auto probes = deterministic_probes(FockSpace::make(1, cfg.cutoff));
  const auto r2 = ConcaveFunctional::renyi(2.0);
  const StrictGapReport noise = strict_gap_probe(noise05(), r2, probes, cfg);
  EXPECT_NEAR(gap_of(noise, "fock|1>"), 0.25, 1e-9);
  EXPECT_NEAR(gap_of(noise, "fock|2>"), 0.3125, 1e-9);
  EXPECT_NEAR(gap_of(noise, "(|0>+|1>)/sqrt2"), 0.0625, 1e-9);
  const StrictGapReport amp = strict_gap_probe(amp15(), r2, probes, cfg);
  EXPECT_NEAR(gap_of(amp, "fock|2>"), 0.172026536562, 1e-9);
  EXPECT_NEAR(gap_of(amp, "(|0>+|1>)/sqrt2"), 0.032798833819, 1e-9);
  const StrictGapReport comp = strict_gap_probe(composite(), r2, probes, cfg);
  EXPECT_NEAR(gap_of(comp, "fock|1>"), 0.187828700225, 1e-9);
}

TEST(StrictGap, Errors) {
  const LabConfig cfg;
  const auto probes = deterministic_probes(FockSpace::make(1, cfg.cutoff));
  const auto id = ChannelDescriptor::make("id", identity_channel(1));
  try {
    strict_gap_probe(id, ConcaveFunctional::von_neumann(), probes, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConditionNotMet);
  }
  try {
    strict_gap_probe(amp15(), ConcaveFunctional::min_with(0.5), probes, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParameterOutOfRange);
  }
}

TEST(Additivity, IdentityIsSaturated) {
  const auto id = ChannelDescriptor::make("id", identity_channel(1));
  LabConfig cfg;
  cfg.cutoff = 12;
  cfg.input_levels = 3;
  const AdditivityReport r = additivity_test(id, id, 2.0, 10, 1, cfg);
  EXPECT_NEAR(r.bound, 1.0, 1e-14);
  EXPECT_NEAR(r.vacuum_purity, 1.0, 1e-10);
  EXPECT_EQ(r.violations, 0u);
}

TEST(Additivity, AmplifierTimesAttenuator) {
  LabConfig cfg;
  cfg.cutoff = 40;
  cfg.input_levels = 3;
  const auto att = ChannelDescriptor::make("att", attenuator_channel({0.7}));
  const AdditivityReport r = additivity_test(amp15(), att, 2.0, 10, 5, cfg);
  EXPECT_NEAR(r.bound, 2.0 / 7.0, 1e-12);
  EXPECT_NEAR(r.vacuum_purity, 2.0 / 7.0, 1e-8);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_LE(r.max_sample_purity, r.bound + cfg.tol);
  EXPECT_THROW(additivity_test(ChannelDescriptor::make("two", identity_channel(2)), att, 2.0, 1, 1, cfg), Error);
}

TEST(Equivalence, SmallPartitionGrid) {
  const EquivalenceReport r = majorization_equivalence_check(10, 3);
  EXPECT_GT(r.spectra, 0u);
  EXPECT_EQ(r.pairs, r.spectra * r.spectra);
  EXPECT_EQ(r.disagreements, 0u);
  EXPECT_GT(r.majorizing_pairs, r.spectra);
  EXPECT_THROW(majorization_equivalence_check(0, 3), Error);
}

TEST(Optimizer, NeverBeatsVacuum) {
  const FockSpace space = FockSpace::make(1, 30);
  for (const auto& f : {ConcaveFunctional::von_neumann(), ConcaveFunctional::renyi(2.0)}) {
    const double vac = trace_functional(output_spectrum(amp15(), fock_state(0, space), 60).spectrum, f);
    for (std::uint64_t s : {1u, 2u}) {
      const OptimizeResult r = optimize_input(amp15(), f, random_pure_state(s, space, 4), 40, 0.2, 4, 60);
      EXPECT_GE(r.value, vac - 1e-9);
      EXPECT_LT(r.value, trace_functional(output_spectrum(amp15(), random_pure_state(s, space, 4), 60).spectrum, f));
    }
  }
}

TEST(BestCoherentFidelity, RecoversAmplitude) {
  const FockSpace space = FockSpace::make(1, 40);
  cplx z;
  EXPECT_NEAR(best_coherent_fidelity(coherent_state(cplx(0.7, -0.4), space), &z), 1.0, 1e-10);
  EXPECT_NEAR(std::abs(z - cplx(0.7, -0.4)), 0.0, 1e-5);
  EXPECT_NEAR(best_coherent_fidelity(fock_state(1, space)), std::exp(-1.0), 1e-6);
}

TEST(Probes, DescriptorsAndNormalization) {
  const FockSpace space = FockSpace::make(1, 40);
  const auto probes = deterministic_probes(space);
  std::size_t coherent = 0;
  for (const auto& p : probes) {
    EXPECT_NEAR(p.state.amplitudes.norm(), 1.0, 1e-12) << p.descriptor;
    coherent += p.coherent;
  }
  EXPECT_GT(coherent, 0u);
  EXPECT_EQ(noncoherent_probes(space).size(), probes.size() - coherent);
}

}  // namespace
}  // namespace gausslab
