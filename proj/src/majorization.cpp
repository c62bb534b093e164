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

#include "gausslab/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "gausslab/error.hpp"
#include "gausslab/gaussian_state.hpp"
#include "gausslab/parallel.hpp"

namespace gausslab {

namespace {

FockSpace lab_space(int modes, const LabConfig& cfg) { return FockSpace::make(modes, cfg.cutoff); }

PureState vacuum_state(int modes, int cutoff) {
  const FockSpace one = FockSpace::make(1, cutoff);
  PureState v = fock_state(0, one);
  return modes == 1 ? v : product_state(v, v);
}

std::string format_complex(cplx z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

// Amplitudes of |zeta> without the truncation guard; used by the fidelity search.
CVector coherent_amplitudes(cplx zeta, int d) {
  CVector v(d);
  cplx a = std::exp(-0.5 * std::norm(zeta));
  for (int n = 0; n < d; ++n) {
    if (n > 0) a *= zeta / std::sqrt(static_cast<double>(n));
    v(n) = a;
  }
  return v;
}

}  // namespace

std::vector<SampledOutput> probe_outputs(const ChannelDescriptor& ch, const LabConfig& cfg) {
  const int modes = ch.channel.modes();
  std::vector<SampledOutput> out;
  for (Probe p : deterministic_probes(FockSpace::make(1, cfg.cutoff))) {
    if (modes == 2) {
      p.state = product_state(p.state, p.state);
      p.descriptor += "x2";
    }
    OutputSpectrum o = output_spectrum(ch, p.state, cfg.output_cutoff_for(modes));
    out.push_back({std::move(p), std::move(o), 0});
  }
  return out;
}

ChannelDescriptor ChannelDescriptor::make(std::string name, const GaugeCovariantChannel& ch) {
  return ChannelDescriptor{std::move(name), ch, FockChannel::from_channel(ch)};
}

std::vector<Probe> deterministic_probes(FockSpace space) {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Probe> probes;
  probes.push_back({"fock|1>", fock_state(1, space), 0, false});
  probes.push_back({"fock|2>", fock_state(2, space), 0, false});
  probes.push_back({"(|0>+|1>)/sqrt2", superposition({h, h}, space), 0, false});
  probes.push_back({"(|1>+i|2>)/sqrt2", superposition({0.0, h, cplx(0.0, h)}, space), 0, false});
  probes.push_back({"(|0>-|2>)/sqrt2", superposition({h, 0.0, -h}, space), 0, false});
  probes.push_back({"(|0>+|1>+|2>)/sqrt3", superposition({1.0, 1.0, 1.0}, space), 0, false});
  for (cplx z : {cplx(0.5, 0.0), cplx(1.0, 0.0), cplx(0.0, 0.7)}) {
    probes.push_back({"coherent(" + format_complex(z) + ")", coherent_state(z, space), 0, true});
  }
  return probes;
}

std::vector<Probe> noncoherent_probes(FockSpace space) {
  std::vector<Probe> out;
  for (auto& p : deterministic_probes(space)) {
    if (!p.coherent) out.push_back(std::move(p));
  }
  return out;
}

OutputSpectrum output_spectrum(const ChannelDescriptor& ch, const PureState& input, int output_cutoff) {
  const PureState wide = output_cutoff > 0 && output_cutoff != input.space.cutoff ? embed(input, output_cutoff) : input;
  const FockOperator out = apply_channel(ch.fock, density(wide));
  return {spectrum(out), out.leakage};
}

OutputSpectrum vacuum_output(const ChannelDescriptor& ch, const LabConfig& cfg) {
  const int modes = ch.channel.modes();
  return output_spectrum(ch, vacuum_state(modes, cfg.cutoff), cfg.output_cutoff_for(modes));
}

std::vector<SampledOutput> sample_outputs(const ChannelDescriptor& ch, std::size_t n, std::uint64_t seed,
                                          const LabConfig& cfg) {
  const FockSpace space = lab_space(ch.channel.modes(), cfg);
  std::vector<SampledOutput> out(n);
  parallel_for(n, cfg.threads, [&](std::size_t i) {
    const std::uint64_t base = mix_seed(seed, i);
    for (int attempt = 0; attempt <= cfg.max_resamples; ++attempt) {
      const std::uint64_t s = attempt == 0 ? base : mix_seed(base, static_cast<std::uint64_t>(attempt));
      Probe p{"haar#" + std::to_string(i), random_pure_state(s, space, cfg.input_levels), s, false};
      OutputSpectrum o = output_spectrum(ch, p.state, cfg.output_cutoff_for(ch.channel.modes()));
      if (o.leakage <= cfg.leakage_budget) {
        out[i] = SampledOutput{std::move(p), std::move(o), attempt};
        return;
      }
    }
    throw Error(ErrorCode::kTruncationLeakage, "sample " + std::to_string(i) + " exceeded the leakage budget");
  });
  return out;
}

std::vector<OptimalityReport> vacuum_optimality_suite(const ChannelDescriptor& ch,
                                                      const std::vector<ConcaveFunctional>& fs,
                                                      const std::vector<SampledOutput>& outputs,
                                                      const OutputSpectrum& vacuum, std::uint64_t seed,
                                                      double tol) {
  (void)ch;
  std::vector<OptimalityReport> reports;
  for (const auto& f : fs) {
    OptimalityReport r;
    r.seed = seed;
    r.vacuum_value = trace_functional(vacuum.spectrum, f);
    r.best_sampled_value = INFINITY;
    r.max_leakage = vacuum.leakage;
    const std::string fname = f.describe();
    for (const auto& s : outputs) {
      const double v = trace_functional(s.output.spectrum, f);
      r.records.push_back({s.probe.seed, s.probe.descriptor, fname, v, v - r.vacuum_value, s.output.leakage});
      r.rejected += static_cast<std::size_t>(s.resamples);
      r.max_leakage = std::max(r.max_leakage, s.output.leakage);
      if (v < r.vacuum_value - tol) ++r.below_vacuum;
      if (v < r.best_sampled_value) {
        r.best_sampled_value = v;
        r.best_input_descriptor = s.probe.descriptor;
      }
    }
    r.samples = outputs.size();
    r.gap = r.best_sampled_value - r.vacuum_value;
    reports.push_back(std::move(r));
  }
  return reports;
}

OptimalityReport vacuum_optimality_test(const ChannelDescriptor& ch, const ConcaveFunctional& f,
                                        std::size_t n_samples, std::uint64_t seed, const LabConfig& cfg) {
  std::vector<SampledOutput> outputs = sample_outputs(ch, n_samples, seed, cfg);
  for (auto& p : probe_outputs(ch, cfg)) outputs.push_back(std::move(p));
  return vacuum_optimality_suite(ch, {f}, outputs, vacuum_output(ch, cfg), seed, cfg.tol).front();
}

MajorizationReport majorization_check(const std::vector<SampledOutput>& outputs, const OutputSpectrum& vacuum,
                                      double tol) {
  MajorizationReport r;
  r.worst_deficit = -INFINITY;
  r.max_leakage = vacuum.leakage;
  for (const auto& s : outputs) {
    const double deficit = worst_partial_sum_deficit(vacuum.spectrum, s.output.spectrum);
    ++r.samples;
    if (deficit <= tol) ++r.passed;
    if (deficit > r.worst_deficit) {
      r.worst_deficit = deficit;
      r.worst_input = s.probe.descriptor;
    }
    r.rejected += static_cast<std::size_t>(s.resamples);
    r.max_leakage = std::max(r.max_leakage, s.output.leakage);
  }
  if (outputs.empty()) r.worst_deficit = 0.0;
  return r;
}

MajorizationReport majorization_sweep(const ChannelDescriptor& ch, std::size_t n_samples, std::uint64_t seed,
                                      const LabConfig& cfg) {
  return majorization_check(sample_outputs(ch, n_samples, seed, cfg), vacuum_output(ch, cfg), cfg.tol);
}

OptimizeResult optimize_input(const ChannelDescriptor& ch, const ConcaveFunctional& f, const PureState& init,
                              int max_iters, double step, int levels, int output_cutoff) {
  if (ch.channel.modes() != 1 || init.space.modes != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "optimize_input is one-mode");
  }
  auto value = [&](const PureState& psi) {
    return trace_functional(output_spectrum(ch, psi, output_cutoff).spectrum, f);
  };
  OptimizeResult r{init, value(init), 0, 0};
  r.state.amplitudes.normalize();
  const int coords = std::min(levels, init.space.cutoff);
  const cplx moves[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  while (r.iterations < max_iters && step > 1e-7) {
    ++r.iterations;
    bool improved = false;
    for (int i = 0; i < coords; ++i) {
      for (cplx m : moves) {
        PureState trial = r.state;
        trial.amplitudes(i) += step * m;
        trial.amplitudes.normalize();
        const double v = value(trial);
        if (v < r.value - 1e-15) {
          r.state = std::move(trial);
          r.value = v;
          ++r.accepted;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return r;
}

double best_coherent_fidelity(const PureState& psi, cplx* argmax) {
  if (psi.space.modes != 1) throw Error(ErrorCode::kDimensionMismatch, "best_coherent_fidelity is one-mode");
  const int d = psi.space.cutoff;
  auto fid = [&](cplx z) { return std::norm(coherent_amplitudes(z, d).dot(psi.amplitudes)); };
  cplx z = mean_amplitude(density(psi));
  double best = fid(z);
  double step = 0.25;
  const cplx moves[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  while (step > 1e-7) {
    bool improved = false;
    for (cplx m : moves) {
      const double v = fid(z + step * m);
      if (v > best) {
        best = v;
        z += step * m;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  if (argmax) *argmax = z;
  return best;
}

StrictGapReport strict_gap_probe(const ChannelDescriptor& ch, const ConcaveFunctional& f,
                                 const std::vector<Probe>& probes, const LabConfig& cfg) {
  const StrictnessReport cond = strictness_conditions(ch.channel);
  if (!cond.condition_a && !cond.condition_b) {
    throw Error(ErrorCode::kConditionNotMet, "channel satisfies neither strictness condition");
  }
  if (!f.strictly_concave()) throw Error(ErrorCode::kParameterOutOfRange, "functional must be strictly concave");
  StrictGapReport r;
  r.vacuum_value = trace_functional(vacuum_output(ch, cfg).spectrum, f);
  r.min_noncoherent_gap = INFINITY;
  for (const auto& p : probes) {
    const double gap =
        trace_functional(output_spectrum(ch, p.state, cfg.output_cutoff_for(ch.channel.modes())).spectrum, f) -
        r.vacuum_value;
    r.gaps.push_back({p.descriptor, p.coherent, gap});
    if (p.coherent) {
      r.max_coherent_gap = std::max(r.max_coherent_gap, std::abs(gap));
    } else {
      r.min_noncoherent_gap = std::min(r.min_noncoherent_gap, gap);
    }
  }
  return r;
}

AdditivityReport additivity_test(const ChannelDescriptor& a, const ChannelDescriptor& b, double p,
                                 std::size_t n_samples, std::uint64_t seed, const LabConfig& cfg) {
  if (a.channel.modes() != 1 || b.channel.modes() != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "additivity_test takes one-mode channels");
  }
  const FockChannel joint{{a.fock.per_mode.front(), b.fock.per_mode.front()}};
  const FockSpace space = lab_space(2, cfg);
  AdditivityReport r;
  r.bound = output_purity(a.channel, p) * output_purity(b.channel, p);
  const FockOperator vac = apply_channel(joint, density(vacuum_state(2, cfg.cutoff)));
  r.vacuum_purity = trace_power(vac, p);
  r.max_leakage = vac.leakage;
  std::vector<double> purity(n_samples, 0.0), leakage(n_samples, 0.0);
  std::vector<int> redraws(n_samples, 0);
  parallel_for(n_samples, cfg.threads, [&](std::size_t i) {
    const std::uint64_t base = mix_seed(seed, i);
    for (int attempt = 0; attempt <= cfg.max_resamples; ++attempt) {
      const std::uint64_t s = attempt == 0 ? base : mix_seed(base, static_cast<std::uint64_t>(attempt));
      const FockOperator out = apply_channel(joint, density(random_pure_state(s, space, cfg.input_levels)));
      if (out.leakage <= cfg.leakage_budget) {
        purity[i] = trace_power(out, p);
        leakage[i] = out.leakage;
        redraws[i] = attempt;
        return;
      }
    }
    throw Error(ErrorCode::kTruncationLeakage, "sample " + std::to_string(i) + " exceeded the leakage budget");
  });
  r.samples = n_samples;
  for (std::size_t i = 0; i < n_samples; ++i) {
    r.max_sample_purity = std::max(r.max_sample_purity, purity[i]);
    r.max_leakage = std::max(r.max_leakage, leakage[i]);
    r.rejected += static_cast<std::size_t>(redraws[i]);
    if (purity[i] > r.bound + cfg.tol) ++r.violations;
  }
  return r;
}

EquivalenceReport majorization_equivalence_check(int total, int max_len) {
  if (total < 1 || max_len < 1) throw Error(ErrorCode::kParameterOutOfRange, "bad partition grid");
  std::vector<SpectrumVector> spectra;
  std::vector<int> parts;
  std::function<void(int, int)> grow = [&](int remaining, int largest) {
    if (remaining == 0) {
      std::vector<double> v;
      for (int k : parts) v.push_back(static_cast<double>(k) / total);
      spectra.emplace_back(std::move(v));
      return;
    }
    if (static_cast<int>(parts.size()) == max_len) return;
    for (int k = std::min(remaining, largest); k >= 1; --k) {
      parts.push_back(k);
      grow(remaining - k, k);
      parts.pop_back();
    }
  };
  grow(total, total);

  std::vector<ConcaveFunctional> family;
  for (int j = 0; j <= total; ++j) family.push_back(ConcaveFunctional::min_with(static_cast<double>(j) / total));
  std::vector<std::vector<double>> values(spectra.size());
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    for (const auto& f : family) values[i].push_back(trace_functional(spectra[i], f));
  }

  EquivalenceReport r;
  r.spectra = spectra.size();
  constexpr double kExactTol = 1e-12;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    for (std::size_t j = 0; j < spectra.size(); ++j) {
      const bool order = majorizes(spectra[i], spectra[j], kExactTol);
      bool functionals = true;
      for (std::size_t t = 0; t < family.size() && functionals; ++t) {
        functionals = values[i][t] <= values[j][t] + kExactTol;
      }
      ++r.pairs;
      if (order) ++r.majorizing_pairs;
      if (order != functionals) ++r.disagreements;
    }
  }
  return r;
}

std::vector<ConcaveFunctional> suite_functionals() {
  return {
      ConcaveFunctional::von_neumann(),
      ConcaveFunctional::renyi(2.0),
      ConcaveFunctional::polygonal({{0.0, 0.0}, {0.1, 0.2}, {0.5, 0.4}, {1.0, 0.3}}),
      ConcaveFunctional::min_with(0.3),
      ConcaveFunctional::polygonal({{0.0, 0.0}, {0.05, 0.1}, {0.2, 0.25}, {1.0, 0.25}}),
  };
}

std::vector<ConcaveFunctional> extended_functionals() {
  auto fs = suite_functionals();
  fs.push_back(ConcaveFunctional::renyi(1.5));
  fs.push_back(ConcaveFunctional::renyi(3.0));
  return fs;
}

}  // namespace gausslab
