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

#include "gausslab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>

#include "gausslab/channel.hpp"
#include "gausslab/error.hpp"
#include "gausslab/gaussian_state.hpp"
#include "gausslab/husimi.hpp"
#include "gausslab/linalg.hpp"
#include "gausslab/majorization.hpp"

namespace gausslab {
namespace {

std::string printf_string(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

bool full(const AcceptanceOptions& opt) { return opt.scale == AcceptanceScale::kFull; }

std::uint64_t criterion_seed(const AcceptanceOptions& opt, int id) {
  return mix_seed(opt.seed, static_cast<std::uint64_t>(id));
}

GaugeCovariantChannel composite_channel() {
  CMatrix K(1, 1), mu(1, 1);
  K(0, 0) = std::polar(1.2, 0.3);
  mu(0, 0) = 0.6;
  return build_channel(K, mu);
}

std::vector<ChannelDescriptor> suite_channels() {
  return {ChannelDescriptor::make("attenuator(0.6)", attenuator_channel({0.6})),
          ChannelDescriptor::make("amplifier(1.5)", amplifier_channel({1.5})),
          ChannelDescriptor::make("composite(K=1.2e^0.3i,mu=0.6)", composite_channel())};
}

struct Outcome {
  bool passed;
  std::string detail;
  Json metrics;
};

Outcome decomposition_round_trip(const AcceptanceOptions& opt) {
  constexpr double kTol = 1e-10;
  const int n = 200;
  double worst = 0.0;
  int misclassified = 0;
  for (int i = 0; i < n; ++i) {
    std::mt19937_64 rng(mix_seed(criterion_seed(opt, 1), static_cast<std::uint64_t>(i)));
    const GaugeCovariantChannel ch = random_valid_channel(1 + i % 3, rng);
    const Decomposition d = decompose(ch);
    const GaugeCovariantChannel back = concatenate(d.attenuator, d.amplifier);
    worst = std::max({worst, max_abs(back.K() - ch.K()), max_abs(back.mu() - ch.mu())});
    const ChannelClass a = classify(d.attenuator, kTol);
    const ChannelClass b = classify(d.amplifier, kTol);
    if (a != ChannelClass::kQuantumLimitedAttenuator && a != ChannelClass::kIdentity) ++misclassified;
    if (b != ChannelClass::kQuantumLimitedAmplifier && b != ChannelClass::kIdentity) ++misclassified;
  }
  return {worst <= kTol && misclassified == 0,
          printf_string("%d channels, worst entry error %.3e, misclassified factors %d", n, worst, misclassified),
          {{"channels", n}, {"worst_entry_error", worst}, {"misclassified", misclassified}, {"tol", kTol}}};
}

Outcome purity_vs_fock(const AcceptanceOptions&) {
  constexpr double kTol = 1e-8;
  const FockSpace space = FockSpace::make(1, 60);
  const std::vector<ChannelDescriptor> channels = {
      ChannelDescriptor::make("attenuator(0.6)", attenuator_channel({0.6})),
      ChannelDescriptor::make("amplifier(sqrt2)", amplifier_channel({std::sqrt(2.0)})),
      ChannelDescriptor::make("classical_noise(1)", classical_noise_channel(1, 1.0))};
  double worst = 0.0, max_leakage = 0.0;
  Json rows = Json::array();
  for (const auto& ch : channels) {
    const FockOperator out = apply_channel(ch.fock, density(fock_state(0, space)));
    max_leakage = std::max(max_leakage, out.leakage);
    for (double p : {1.5, 2.0, 3.0}) {
      const double closed = output_purity(ch.channel, p);
      const double fock = trace_power(out, p);
      worst = std::max(worst, std::abs(closed - fock));
      rows.push_back({{"channel", ch.name}, {"p", p}, {"nu_p", closed}, {"fock", fock}});
    }
  }
  const bool ok = worst <= kTol && max_leakage < 1e-6;
  return {ok, printf_string("9 cases at cutoff 60, worst |nu_p - Tr rho^p| %.3e, leakage %.1e", worst, max_leakage),
          {{"cases", std::move(rows)}, {"worst", worst}, {"max_leakage", max_leakage}, {"tol", kTol}}};
}

Outcome statistical_suite(const AcceptanceOptions& opt) {
  LabConfig cfg;
  cfg.threads = opt.threads;
  const std::size_t n = full(opt) ? 500 : 100;
  const auto fs = extended_functionals();
  std::size_t below = 0, maj_fail = 0, total = 0;
  double worst_gap = INFINITY, worst_deficit = -INFINITY, max_leakage = 0.0;
  Json per = Json::array();
  std::uint64_t k = 0;
  for (const auto& ch : suite_channels()) {
    const std::uint64_t seed = mix_seed(criterion_seed(opt, 3), k++);
    std::vector<SampledOutput> outputs = sample_outputs(ch, n, seed, cfg);
    for (auto& p : probe_outputs(ch, cfg)) outputs.push_back(std::move(p));
    const OutputSpectrum vac = vacuum_output(ch, cfg);
    const auto reports = vacuum_optimality_suite(ch, fs, outputs, vac, seed, cfg.tol);
    const MajorizationReport maj = majorization_check(outputs, vac, cfg.tol);
    Json gaps;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      below += reports[i].below_vacuum;
      worst_gap = std::min(worst_gap, reports[i].gap);
      gaps[fs[i].describe()] = reports[i].gap;
    }
    maj_fail += maj.samples - maj.passed;
    total += maj.samples;
    worst_deficit = std::max(worst_deficit, maj.worst_deficit);
    max_leakage = std::max(max_leakage, maj.max_leakage);
    per.push_back({{"channel", ch.name}, {"seed", seed}, {"min_gaps", std::move(gaps)}, {"majorization", to_json(maj)}});
  }
  return {below == 0 && maj_fail == 0,
          printf_string("%zu outputs x %zu functionals: %zu below vacuum, min gap %.3e; majorization %zu/%zu, "
                        "worst deficit %.2e",
                        total, fs.size(), below, worst_gap, total - maj_fail, total, worst_deficit),
          {{"channels", std::move(per)}, {"below_vacuum", below}, {"max_leakage", max_leakage}, {"tol", cfg.tol}}};
}

Outcome coherent_equality(const AcceptanceOptions&) {
  constexpr double kTol = 1e-6;
  LabConfig cfg;
  const FockSpace space = FockSpace::make(1, cfg.cutoff);
  const std::vector<cplx> zetas = {0.5, 1.0, std::polar(0.5, std::numbers::pi / 4), std::polar(1.0, 2.0)};
  double worst = 0.0;
  for (const auto& ch : suite_channels()) {
    const OutputSpectrum vac = vacuum_output(ch, cfg);
    for (cplx z : zetas) {
      const OutputSpectrum out = output_spectrum(ch, coherent_state(z, space), cfg.output_cutoff_for(1));
      for (const auto& f : extended_functionals()) {
        worst = std::max(worst, std::abs(trace_functional(out.spectrum, f) - trace_functional(vac.spectrum, f)));
      }
    }
  }
  return {worst <= kTol, printf_string("3 channels x 4 coherent states x 7 functionals, worst |diff| %.3e", worst),
          {{"worst", worst}, {"tol", kTol}}};
}

Outcome complementary_representation(const AcceptanceOptions& opt) {
  constexpr double kOpTol = 1e-6, kSpecTol = 1e-8;
  const FockSpace space = FockSpace::make(1, 40);
  double op_worst = 0.0, spec_worst = 0.0;
  for (double kappa : {1.2, 1.5, 2.0}) {
    const OneModeChannelKraus amp = amplifier_kraus(kappa, space);
    const OneModeChannelKraus att = attenuator_kraus(std::sqrt(1.0 - 1.0 / (kappa * kappa)), space);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const FockOperator rho = density(random_pure_state(mix_seed(criterion_seed(opt, 5), s), space, 6));
      const FockOperator env = complementary_output(kappa, rho);
      const FockOperator via = transpose_state(apply_kraus(amp, apply_kraus(att, rho)));
      op_worst = std::max(op_worst, max_abs(env.matrix - via.matrix));
      // Same truncation on both sides: system and environment below 40.
      const SpectrumVector a = spectrum(apply_kraus(amp, rho));
      const SpectrumVector b = spectrum(complementary_output(kappa, rho, space.cutoff));
      for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        spec_worst = std::max(spec_worst, std::abs(a[i] - b[i]));
      }
    }
  }
  return {op_worst <= kOpTol && spec_worst <= kSpecTol,
          printf_string("60 cases, operator identity %.3e, spectra %.3e", op_worst, spec_worst),
          {{"operator_worst", op_worst}, {"spectrum_worst", spec_worst}, {"tol", {kOpTol, kSpecTol}}}};
}

Outcome renyi_additivity(const AcceptanceOptions& opt) {
  constexpr double kClosedTol = 1e-10;
  double closed_worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 rng(mix_seed(criterion_seed(opt, 6), static_cast<std::uint64_t>(i)));
    const GaugeCovariantChannel a = random_valid_channel(1 + i % 2, rng);
    const GaugeCovariantChannel b = random_valid_channel(1 + (i / 2) % 2, rng);
    const GaugeCovariantChannel ab = tensor_channel(a, b);
    for (double p : {1.5, 2.0, 3.0}) {
      const double prod = output_purity(a, p) * output_purity(b, p);
      closed_worst = std::max(closed_worst, std::abs(output_purity(ab, p) - prod) / prod);
      closed_worst = std::max(closed_worst, std::abs(minimal_output_renyi(ab, p) - minimal_output_renyi(a, p) -
                                                     minimal_output_renyi(b, p)));
    }
  }
  LabConfig cfg;
  cfg.cutoff = 30;
  cfg.input_levels = 3;
  cfg.threads = opt.threads;
  const auto amp = ChannelDescriptor::make("amplifier(sqrt2)", amplifier_channel({std::sqrt(2.0)}));
  const std::size_t n = full(opt) ? 100 : 30;
  const AdditivityReport r = additivity_test(amp, amp, 2.0, n, mix_seed(criterion_seed(opt, 6), 1000), cfg);
  const double vac_err = std::abs(r.vacuum_purity - 1.0 / 9.0);
  const bool ok = closed_worst <= kClosedTol && vac_err <= 1e-6 && r.violations == 0 &&
                  std::abs(r.bound - 1.0 / 9.0) <= 1e-12;
  return {ok,
          printf_string("closed form worst %.2e over 50 pairs; vacuum purity %.10f (|err| %.1e), %zu samples max "
                        "%.6f, %zu violations",
                        closed_worst, r.vacuum_purity, vac_err, r.samples, r.max_sample_purity, r.violations),
          {{"closed_form_worst", closed_worst}, {"fock", to_json(r)}, {"tol", {kClosedTol, 1e-6, cfg.tol}}}};
}

Outcome strict_gap(const AcceptanceOptions&) {
  LabConfig cfg;
  const std::vector<ChannelDescriptor> channels = {
      ChannelDescriptor::make("classical_noise(0.5)", classical_noise_channel(1, 0.5)),
      ChannelDescriptor::make("amplifier(1.5)", amplifier_channel({1.5})),
      ChannelDescriptor::make("composite(K=1.2e^0.3i,mu=0.6)", composite_channel())};
  const std::vector<ConcaveFunctional> fs = {ConcaveFunctional::von_neumann(), ConcaveFunctional::renyi(1.5),
                                             ConcaveFunctional::renyi(2.0), ConcaveFunctional::renyi(3.0)};
  const auto probes = deterministic_probes(FockSpace::make(1, cfg.cutoff));
  double min_gap = INFINITY, coherent = 0.0;
  Json per = Json::array();
  for (const auto& ch : channels) {
    const StrictnessReport cond = strictness_conditions(ch.channel);
    Json row{{"channel", ch.name}, {"condition_a", cond.condition_a}, {"condition_b", cond.condition_b}};
    for (const auto& f : fs) {
      const StrictGapReport r = strict_gap_probe(ch, f, probes, cfg);
      min_gap = std::min(min_gap, r.min_noncoherent_gap);
      coherent = std::max(coherent, r.max_coherent_gap);
      row[f.describe()] = r.min_noncoherent_gap;
    }
    per.push_back(std::move(row));
  }
  return {min_gap > 1e-4 && coherent <= 1e-6,
          printf_string("min non-coherent gap %.4f, max coherent |gap| %.2e", min_gap, coherent),
          {{"channels", std::move(per)}, {"min_gap", min_gap}, {"max_coherent_gap", coherent},
           {"tol", {1e-4, 1e-6}}}};
}

Outcome wehrl_minimum(const AcceptanceOptions& opt) {
  const double one_photon = 1.0 + std::numbers::egamma;  // Wehrl entropy of |1>
  const std::size_t n = full(opt) ? 100 : 25;
  const OptimalityReport r = wehrl_optimality_test(0.5, n, criterion_seed(opt, 8), PhaseSpaceGrid{},
                                                   ConcaveFunctional::von_neumann(), 40, 6, 1e-3, opt.threads);
  double fock1 = NAN, coherent = NAN, min_value = INFINITY;
  for (const auto& rec : r.records) {
    if (rec.input == "fock|1>") fock1 = rec.value;
    if (rec.input == "coherent(0.8+0i)") coherent = rec.value;
    min_value = std::min(min_value, rec.value);
  }
  const bool ok = std::abs(r.vacuum_value - 1.0) <= 1e-3 && std::abs(coherent - 1.0) <= 1e-3 &&
                  std::abs(fock1 - one_photon) <= 2e-3 && min_value >= 1.0 - 1e-3;
  return {ok,
          printf_string("vacuum %.8f, coherent(0.8) %.8f, |1> %.8f, min over %zu inputs %.6f", r.vacuum_value,
                        coherent, fock1, r.samples, min_value),
          {{"report", to_json(r)}, {"fock1", fock1}, {"coherent", coherent}, {"tol", {1e-3, 2e-3}}}};
}

Outcome berezin_lieb(const AcceptanceOptions& opt) {
  const FockSpace space = FockSpace::make(1, 40);
  const std::vector<std::pair<std::string, PureState>> probes = {{"vacuum", fock_state(0, space)},
                                                                 {"fock|1>", fock_state(1, space)},
                                                                 {"coherent(0.7)", coherent_state(0.7, space)}};
  const auto fs = extended_functionals();
  double worst_slack = INFINITY, worst_dev = 0.0, max_leakage = 0.0;
  Json rows = Json::array();
  for (double c : {1.5, 2.0, 3.0}) {
    for (const auto& [name, psi] : probes) {
      const SandwichFields fields = sandwich_fields(density(psi), c, 0.5, 0.5, PhaseSpaceGrid{}, opt.threads);
      const double dev = convolution_deviation(fields, 0.5);
      worst_dev = std::max(worst_dev, dev);
      max_leakage = std::max(max_leakage, fields.sigma.leakage);
      double slack = INFINITY;
      for (const auto& f : fs) {
        const BerezinLiebReport r = berezin_lieb_check(fields, f);
        slack = std::min({slack, r.lower_slack, r.upper_slack});
      }
      worst_slack = std::min(worst_slack, slack);
      rows.push_back({{"c", c}, {"input", name}, {"min_slack", slack}, {"convolution_deviation", dev}});
    }
  }
  return {worst_slack >= -1e-3 && worst_dev <= 2e-3,
          printf_string("9 cases x %zu functionals, min slack %.4e, convolution deviation %.2e", fs.size(),
                        worst_slack, worst_dev),
          {{"cases", std::move(rows)}, {"max_leakage", max_leakage}, {"tol", {1e-3, 2e-3}}}};
}

Outcome gauge_covariance(const AcceptanceOptions& opt) {
  constexpr double kTol = 1e-8;
  struct Case {
    std::string name;
    FockChannel channel;
    FockSpace space;
    int levels;
  };
  std::vector<Case> cases;
  for (const auto& ch : suite_channels()) cases.push_back({ch.name, ch.fock, FockSpace::make(1, 80), 6});
  cases.push_back(
      {"classical_noise(0.5)", FockChannel::from_channel(classical_noise_channel(1, 0.5)), FockSpace::make(1, 80), 6});
  cases.push_back({"attenuator(0.6)xamplifier(1.5)",
                   FockChannel::from_channel(tensor_channel(attenuator_channel({0.6}), amplifier_channel({1.5}))),
                   FockSpace::make(2, 16), 3});
  double worst = 0.0;
  std::uint64_t k = 0;
  for (const auto& c : cases) {
    const FockOperator rho =
        density(random_pure_state(mix_seed(criterion_seed(opt, 10), k++), c.space, c.levels));
    const FockOperator out = apply_channel(c.channel, rho);
    for (int j = 0; j < 8; ++j) {
      const double phi = std::numbers::pi * (2 * j + 1) / 8.0;
      const CMatrix U = gauge_rotation(phi, c.space).matrix;
      FockOperator rotated = rho;
      rotated.matrix = U * rho.matrix * U.adjoint();
      const FockOperator lhs = apply_channel(c.channel, rotated);
      worst = std::max(worst, max_abs(lhs.matrix - U * out.matrix * U.adjoint()));
    }
  }
  return {worst <= kTol, printf_string("%zu channels x 8 phases, worst %.3e", cases.size(), worst),
          {{"worst", worst}, {"tol", kTol}}};
}

Outcome majorization_equivalence(const AcceptanceOptions&) {
  const EquivalenceReport r = majorization_equivalence_check(24, 4);
  return {r.disagreements == 0 && r.pairs >= 10000,
          printf_string("%zu spectra, %zu pairs, %zu disagreements", r.spectra, r.pairs, r.disagreements),
          to_json(r)};
}

struct Entry {
  const char* name;
  double limit;  // seconds, 0 when none
  Outcome (*run)(const AcceptanceOptions&);
};

constexpr Entry kEntries[kCriterionCount] = {
    {"decomposition round trip", 5, decomposition_round_trip},
    {"purity formula vs Fock", 10, purity_vs_fock},
    {"vacuum optimality and majorization", 180, statistical_suite},
    {"coherent-state equality", 0, coherent_equality},
    {"complementary representation", 30, complementary_representation},
    {"Renyi additivity", 120, renyi_additivity},
    {"strict gap probes", 0, strict_gap},
    {"Wehrl minimum", 120, wehrl_minimum},
    {"Berezin-Lieb sandwich and convolution", 180, berezin_lieb},
    {"gauge covariance", 0, gauge_covariance},
    {"majorization vs concave sums", 10, majorization_equivalence},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  if (id < 1 || id > kCriterionCount) {
    throw Error(ErrorCode::kParameterOutOfRange, "no criterion " + std::to_string(id));
  }
  const Entry& e = kEntries[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  r.runtime_limit = e.limit;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = e.run(opt);
    r.passed = o.passed;
    r.detail = std::move(o.detail);
    r.metrics = std::move(o.metrics);
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (full(opt) && e.limit > 0 && r.seconds > e.limit) {
    r.passed = false;
    r.detail += printf_string("; runtime %.1f s over the %.0f s limit", r.seconds, e.limit);
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, opt));
    if (on_result) on_result(out.back());
  }
  return out;
}

Json to_json(const CriterionResult& r) {
  Json j;
  j["id"] = r.id;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["detail"] = r.detail;
  if (r.runtime_limit > 0) j["runtime_limit_s"] = r.runtime_limit;
  j["metrics"] = r.metrics;
  return j;
}

std::string summary_line(const CriterionResult& r) {
  return printf_string("[%s] %2d %s: %s (%.2f s)", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                       r.detail.c_str(), r.seconds);
}

}  // namespace gausslab
