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

#include <cstdint>
#include <string>
#include <vector>

#include "gausslab/fock.hpp"
#include "gausslab/spectrum.hpp"

namespace gausslab {

/// A channel together with its Fock realization.
struct ChannelDescriptor {
  std::string name;
  GaugeCovariantChannel channel;
  FockChannel fock;

  static ChannelDescriptor make(std::string name, const GaugeCovariantChannel& ch);
};

struct LabConfig {
  int cutoff = 40;
  /// Haar samples live on the first `input_levels` Fock states per mode.
  int input_levels = 4;
  double leakage_budget = 1e-6;
  double tol = 1e-8;
  int threads = 1;
  int max_resamples = 20;
  /// Cutoff of the space that receives one-mode channel outputs; 0 selects
  /// twice `cutoff`. Inputs stay in the `cutoff` space. Two-mode outputs use
  /// `cutoff`.
  int output_cutoff = 0;

  int output_cutoff_for(int modes) const {
    if (modes != 1) return cutoff;
    return output_cutoff > 0 ? output_cutoff : 2 * cutoff;
  }
};

struct Probe {
  std::string descriptor;
  PureState state;
  std::uint64_t seed = 0;
  bool coherent = false;
};

/// |1>, |2>, balanced superpositions of {0,1}, {1,2}, {0,2}, {0,1,2} and
/// coherent states with zeta in {0.5, 1.0, 0.7i}.
std::vector<Probe> deterministic_probes(FockSpace space);

/// Only the non-coherent members of deterministic_probes().
std::vector<Probe> noncoherent_probes(FockSpace space);

struct OutputSpectrum {
  SpectrumVector spectrum;
  double leakage = 0.0;
};

/// Channel output for `input` embedded at `output_cutoff` (0 keeps the input
/// cutoff).
OutputSpectrum output_spectrum(const ChannelDescriptor& ch, const PureState& input, int output_cutoff = 0);

/// Output for the vacuum input at the lab cutoff.
OutputSpectrum vacuum_output(const ChannelDescriptor& ch, const LabConfig& cfg);

struct SampledOutput {
  Probe probe;
  OutputSpectrum output;
  int resamples = 0;
};

/// n Haar samples (per-sample seeds derived from (seed, index)), each redrawn
/// while its leakage exceeds the budget. Ordered by index regardless of the
/// thread count.
std::vector<SampledOutput> sample_outputs(const ChannelDescriptor& ch, std::size_t n, std::uint64_t seed,
                                          const LabConfig& cfg);

/// Outputs for deterministic_probes(); two-mode channels get p (x) p.
std::vector<SampledOutput> probe_outputs(const ChannelDescriptor& ch, const LabConfig& cfg);

struct SampleRecord {
  std::uint64_t seed;
  std::string input;
  std::string functional;
  double value;
  double gap;
  double leakage;
};

struct OptimalityReport {
  double vacuum_value = 0.0;
  double best_sampled_value = 0.0;
  std::string best_input_descriptor;
  double gap = 0.0;  // best_sampled_value - vacuum_value
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t rejected = 0;
  double max_leakage = 0.0;
  std::size_t below_vacuum = 0;  // samples with value < vacuum_value - tol
  std::vector<SampleRecord> records;
};

/// Tr f over Haar samples plus the deterministic probes; the minimum is
/// expected at the vacuum.
OptimalityReport vacuum_optimality_test(const ChannelDescriptor& ch, const ConcaveFunctional& f,
                                        std::size_t n_samples, std::uint64_t seed, const LabConfig& cfg);

/// The same evaluation for several functionals sharing one set of outputs.
std::vector<OptimalityReport> vacuum_optimality_suite(const ChannelDescriptor& ch,
                                                      const std::vector<ConcaveFunctional>& fs,
                                                      const std::vector<SampledOutput>& outputs,
                                                      const OutputSpectrum& vacuum, std::uint64_t seed,
                                                      double tol);

struct MajorizationReport {
  std::size_t samples = 0;
  std::size_t passed = 0;
  double worst_deficit = 0.0;
  std::string worst_input;
  std::size_t rejected = 0;
  double max_leakage = 0.0;
};

MajorizationReport majorization_sweep(const ChannelDescriptor& ch, std::size_t n_samples, std::uint64_t seed,
                                      const LabConfig& cfg);

MajorizationReport majorization_check(const std::vector<SampledOutput>& outputs, const OutputSpectrum& vacuum,
                                      double tol);

struct OptimizeResult {
  PureState state;
  double value = 0.0;
  int iterations = 0;
  int accepted = 0;
};

/// Greedy coordinate search on the real and imaginary parts of the first
/// `levels` amplitudes, renormalizing after each move. Step halves after a
/// sweep without improvement.
OptimizeResult optimize_input(const ChannelDescriptor& ch, const ConcaveFunctional& f, const PureState& init,
                              int max_iters, double step, int levels = 8, int output_cutoff = 0);

/// max over zeta of |<zeta|psi>|^2, located by local refinement from <a>.
double best_coherent_fidelity(const PureState& psi, cplx* argmax = nullptr);

struct ProbeGap {
  std::string descriptor;
  bool coherent;
  double gap;
};

struct StrictGapReport {
  double vacuum_value = 0.0;
  double min_noncoherent_gap = 0.0;
  double max_coherent_gap = 0.0;  // largest |gap| over coherent probes
  std::vector<ProbeGap> gaps;
};

/// Throws ConditionNotMet unless condition (a) or (b) holds, and
/// ParameterOutOfRange for a functional that is not strictly concave.
StrictGapReport strict_gap_probe(const ChannelDescriptor& ch, const ConcaveFunctional& f,
                                 const std::vector<Probe>& probes, const LabConfig& cfg);

struct AdditivityReport {
  double bound = 0.0;  // nu_p(a) nu_p(b)
  double vacuum_purity = 0.0;
  double max_sample_purity = 0.0;
  std::size_t samples = 0;
  std::size_t violations = 0;  // samples above bound + tol
  std::size_t rejected = 0;
  double max_leakage = 0.0;
};

/// Entangled Haar inputs on two modes through a (x) b at the given cutoff.
AdditivityReport additivity_test(const ChannelDescriptor& a, const ChannelDescriptor& b, double p,
                                 std::size_t n_samples, std::uint64_t seed, const LabConfig& cfg);

struct EquivalenceReport {
  std::size_t spectra = 0;
  std::size_t pairs = 0;
  std::size_t disagreements = 0;
  std::size_t majorizing_pairs = 0;
};

/// All spectra k/total with at most `max_len` parts; compares majorizes()
/// with the family min(x, j/total), j = 0..total, on every ordered pair.
EquivalenceReport majorization_equivalence_check(int total, int max_len);

/// von Neumann, Renyi 2 and three fixed polygonal functionals.
std::vector<ConcaveFunctional> suite_functionals();

/// suite_functionals() plus Renyi 1.5 and 3.
std::vector<ConcaveFunctional> extended_functionals();

}  // namespace gausslab
