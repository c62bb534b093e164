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

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gausslab/acceptance.hpp"
#include "gausslab/channel.hpp"
#include "gausslab/channel_io.hpp"
#include "gausslab/error.hpp"
#include "gausslab/gaussian_state.hpp"
#include "gausslab/husimi.hpp"
#include "gausslab/majorization.hpp"
#include "gausslab/parallel.hpp"
#include "gausslab/report.hpp"

namespace gausslab::cli {
namespace {

// Everything a subcommand may read; the echo in each report is built from
// the options the subcommand registered.
struct RunConfig {
  std::string command;
  std::vector<std::string> channels;
  std::optional<double> p;
  std::size_t samples = 100;
  std::optional<std::uint64_t> seed;
  int cutoff = 40;
  int levels = 4;
  int threads = 0;
  double radius = 6.0;
  double step = 0.05;
  double tol = kDefaultTol;
  double lab_tol = 1e-8;
  double leakage_budget = 1e-6;
  double c = 2.0;
  double a0 = 0.5;
  double a0p = 0.5;
  std::string input = "vacuum";
  std::string field_csv;
  std::string output;
  std::string format = "json";
  bool bits = false;
  bool fock_check = false;
  bool full = false;
};

struct Outcome {
  Json config;
  Json tolerances;
  Json body;  // merged after the header
  bool passed = true;
  std::string summary;
  std::vector<SampleRecord> records;  // CSV rows for per-sample commands
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::kUsageError, what) {}
};

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw UsageError(cfg.command + " is randomized and needs --seed");
  return *cfg.seed;
}

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) throw UsageError(std::string(name) + " must be positive");
}

ConcaveFunctional functional_for(const std::optional<double>& p) {
  if (!p || *p == 1.0) return ConcaveFunctional::von_neumann();
  if (*p < 1.0) throw UsageError("--p must be >= 1");
  return ConcaveFunctional::renyi(*p);
}

Json channel_json(const GaugeCovariantChannel& ch) { return Json::parse(channel_to_json(ch)); }

std::string fmt(double x) { return format_double(x); }

Json common_config(const RunConfig& cfg) {
  Json j;
  if (!cfg.channels.empty()) j["channels"] = cfg.channels;
  if (cfg.p) j["p"] = *cfg.p;
  return j;
}

LabConfig lab_config(const RunConfig& cfg) {
  LabConfig lab;
  lab.cutoff = cfg.cutoff;
  lab.input_levels = cfg.levels;
  lab.threads = resolve_threads(cfg.threads);
  lab.tol = cfg.lab_tol;
  lab.leakage_budget = cfg.leakage_budget;
  return lab;
}

Json lab_echo(const RunConfig& cfg) {
  Json j = common_config(cfg);
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed ? Json(*cfg.seed) : Json(nullptr);
  j["cutoff"] = cfg.cutoff;
  j["levels"] = cfg.levels;
  return j;
}

double entropy_unit(const RunConfig& cfg) { return cfg.bits ? std::numbers::ln2 : 1.0; }

Outcome cmd_validate(const RunConfig& cfg) {
  Outcome o;
  o.config = common_config(cfg);
  o.tolerances = {{"validity", cfg.tol}};
  const GaugeCovariantChannel ch = load_channel(cfg.channels.at(0), cfg.tol);
  o.body["valid"] = true;
  o.body["modes"] = ch.modes();
  o.body["class"] = std::string(to_string(classify(ch, cfg.tol)));
  o.summary = "valid " + o.body["class"].get<std::string>() + " channel on " + std::to_string(ch.modes()) + " mode(s)";
  return o;
}

Outcome cmd_classify(const RunConfig& cfg) {
  Outcome o;
  o.config = common_config(cfg);
  o.tolerances = {{"validity", cfg.tol}, {"classification", cfg.tol}};
  const GaugeCovariantChannel ch = load_channel(cfg.channels.at(0), cfg.tol);
  const ChannelClass cls = classify(ch, cfg.tol);
  const StrictnessReport strict = strictness_conditions(ch, cfg.tol);
  o.body["class"] = std::string(to_string(cls));
  o.body["condition_a"] = strict.condition_a;
  o.body["condition_b"] = strict.condition_b;
  if (cls == ChannelClass::kIdentity || cls == ChannelClass::kQuantumLimitedAttenuator ||
      cls == ChannelClass::kQuantumLimitedAmplifier) {
    const DiagonalForm form = diagonalize(ch, cfg.tol);
    Json modes = Json::array();
    for (const auto& m : form.per_mode) modes.push_back({{"amplifier", m.amplifier}, {"value", m.value}});
    o.body["diagonal_form"] = {{"singular_values", form.k_diag}, {"per_mode", std::move(modes)}};
  }
  o.summary = "class " + o.body["class"].get<std::string>();
  return o;
}

Outcome cmd_decompose(const RunConfig& cfg) {
  constexpr double kRoundTrip = 1e-10;
  Outcome o;
  o.config = common_config(cfg);
  o.tolerances = {{"validity", cfg.tol}, {"round_trip", kRoundTrip}};
  const GaugeCovariantChannel ch = load_channel(cfg.channels.at(0), cfg.tol);
  const Decomposition d = decompose(ch);
  const GaugeCovariantChannel back = concatenate(d.attenuator, d.amplifier);
  const double err = std::max(max_abs(back.K() - ch.K()), max_abs(back.mu() - ch.mu()));
  o.body["attenuator"] = channel_json(d.attenuator);
  o.body["attenuator_class"] = std::string(to_string(classify(d.attenuator, cfg.tol)));
  o.body["amplifier"] = channel_json(d.amplifier);
  o.body["amplifier_class"] = std::string(to_string(classify(d.amplifier, cfg.tol)));
  o.body["round_trip_error"] = err;
  o.passed = err <= kRoundTrip;
  o.summary = "round-trip error " + fmt(err);
  return o;
}

Outcome cmd_entropy(const RunConfig& cfg) {
  Outcome o;
  o.config = common_config(cfg);
  o.config["bits"] = cfg.bits;
  o.tolerances = {{"validity", cfg.tol}};
  const GaugeCovariantChannel ch = load_channel(cfg.channels.at(0), cfg.tol);
  const GaussianState out = apply_channel(ch, vacuum(ch.modes()));
  const ThermalSpectrum spec = thermal_spectrum(out);
  const double unit = entropy_unit(cfg);
  o.body["unit"] = cfg.bits ? "bits" : "nats";
  o.body["photon_numbers"] = spec.photon_numbers;
  o.body["von_neumann"] = von_neumann_entropy(spec) / unit;
  if (cfg.p && *cfg.p != 1.0) o.body["renyi"] = renyi_entropy(spec, *cfg.p) / unit;
  o.summary = "vacuum output entropy " + fmt(o.body["von_neumann"].get<double>()) + " " +
              o.body["unit"].get<std::string>();
  return o;
}

Outcome cmd_purity(const RunConfig& cfg) {
  constexpr double kFockTol = 1e-8;
  if (!cfg.p) throw UsageError("purity needs --p");
  const double p = *cfg.p;
  if (!(p > 1.0)) throw UsageError("--p must exceed 1");
  Outcome o;
  o.config = common_config(cfg);
  o.config["bits"] = cfg.bits;
  o.config["fock_check"] = cfg.fock_check;
  o.tolerances = {{"validity", cfg.tol}};
  const GaugeCovariantChannel ch = load_channel(cfg.channels.at(0), cfg.tol);
  const double nu = output_purity(ch, p);
  o.body["nu_p"] = nu;
  o.body["det_value"] = output_purity_determinant(ch, p);
  o.body["minimal_output_renyi"] = minimal_output_renyi(ch, p) / entropy_unit(cfg);
  if (cfg.fock_check) {
    o.config["cutoff"] = cfg.cutoff;
    o.tolerances["fock"] = kFockTol;
    const FockChannel fc = FockChannel::from_channel(ch);
    const FockSpace space = FockSpace::make(ch.modes(), cfg.cutoff);
    CVector vac = CVector::Zero(space.dim());
    vac(0) = 1.0;
    const FockOperator out = apply_channel(fc, density(PureState{space, vac}));
    const double fock = trace_power(out, p);
    o.body["fock"] = {{"value", fock}, {"deviation", std::abs(fock - nu)}, {"leakage", out.leakage}};
    o.passed = std::abs(fock - nu) <= kFockTol && out.leakage < 1e-6;
  }
  o.summary = "nu_p " + fmt(nu) + ", det " + fmt(o.body["det_value"].get<double>());
  return o;
}

Outcome cmd_majorize(const RunConfig& cfg) {
  const std::uint64_t seed = require_seed(cfg);
  Outcome o;
  o.config = lab_echo(cfg);
  o.tolerances = {{"validity", cfg.tol}, {"majorization", cfg.lab_tol}, {"below_vacuum", cfg.lab_tol},
                  {"leakage_budget", cfg.leakage_budget}};
  const auto ch = ChannelDescriptor::make(cfg.channels.at(0), load_channel(cfg.channels.at(0), cfg.tol));
  const LabConfig lab = lab_config(cfg);
  std::vector<SampledOutput> outputs = sample_outputs(ch, cfg.samples, seed, lab);
  const std::vector<SampledOutput> probes = probe_outputs(ch, lab);
  const OutputSpectrum vac = vacuum_output(ch, lab);
  const std::vector<ConcaveFunctional> fs =
      cfg.p ? std::vector<ConcaveFunctional>{functional_for(cfg.p)} : extended_functionals();
  const MajorizationReport maj = majorization_check(outputs, vac, lab.tol);
  const MajorizationReport probe_maj = majorization_check(probes, vac, lab.tol);
  outputs.insert(outputs.end(), probes.begin(), probes.end());
  Json per = Json::array();
  std::size_t below = 0;
  for (auto& r : vacuum_optimality_suite(ch, fs, outputs, vac, seed, lab.tol)) {
    below += r.below_vacuum;
    Json j = to_json(r);
    j["functional"] = r.records.empty() ? "" : r.records.front().functional;
    per.push_back(std::move(j));
    for (auto& rec : r.records) o.records.push_back(std::move(rec));
  }
  o.body = to_json(maj);
  o.body["probes"] = to_json(probe_maj);
  o.body["functionals"] = std::move(per);
  o.body["vacuum_spectrum_head"] = to_json(vac.spectrum, 8);
  o.passed = maj.passed == maj.samples && probe_maj.passed == probe_maj.samples && below == 0;
  o.summary = "majorization pass=" + std::to_string(maj.passed) + "/" + std::to_string(maj.samples) +
              ", below vacuum " + std::to_string(below) + ", worst " + maj.worst_input;
  return o;
}

Outcome cmd_additivity(const RunConfig& cfg) {
  constexpr double kVacuumTol = 1e-8;
  const std::uint64_t seed = require_seed(cfg);
  if (cfg.channels.size() != 2) throw UsageError("additivity needs two channel files");
  const double p = cfg.p.value_or(2.0);
  if (!(p > 1.0)) throw UsageError("--p must exceed 1");
  Outcome o;
  o.config = lab_echo(cfg);
  o.config["p"] = p;
  o.tolerances = {{"validity", cfg.tol}, {"bound", cfg.lab_tol}, {"vacuum", kVacuumTol},
                  {"leakage_budget", cfg.leakage_budget}};
  const auto a = ChannelDescriptor::make(cfg.channels[0], load_channel(cfg.channels[0], cfg.tol));
  const auto b = ChannelDescriptor::make(cfg.channels[1], load_channel(cfg.channels[1], cfg.tol));
  const double closed = output_purity(tensor_channel(a.channel, b.channel), p);
  const double product = output_purity(a.channel, p) * output_purity(b.channel, p);
  const AdditivityReport r = additivity_test(a, b, p, cfg.samples, seed, lab_config(cfg));
  o.body = to_json(r);
  o.body["closed_form"] = {{"nu_p_tensor", closed}, {"nu_p_product", product}};
  o.passed = r.violations == 0 && std::abs(r.vacuum_purity - r.bound) <= kVacuumTol;
  o.summary = "bound " + fmt(r.bound) + ", max sample " + fmt(r.max_sample_purity) + ", violations " +
              std::to_string(r.violations);
  return o;
}

Outcome cmd_strictgap(const RunConfig& cfg) {
  constexpr double kCoherentTol = 1e-6;
  Outcome o;
  o.config = common_config(cfg);
  o.config["cutoff"] = cfg.cutoff;
  o.tolerances = {{"validity", cfg.tol}, {"coherent", kCoherentTol}};
  const auto ch = ChannelDescriptor::make(cfg.channels.at(0), load_channel(cfg.channels.at(0), cfg.tol));
  const LabConfig lab = lab_config(cfg);
  const StrictGapReport r =
      strict_gap_probe(ch, functional_for(cfg.p), deterministic_probes(FockSpace::make(1, cfg.cutoff)), lab);
  o.body = to_json(r);
  o.passed = r.min_noncoherent_gap > 0.0 && r.max_coherent_gap <= kCoherentTol;
  o.summary = "min non-coherent gap " + fmt(r.min_noncoherent_gap) + ", max coherent |gap| " +
              fmt(r.max_coherent_gap);
  return o;
}

PhaseSpaceGrid grid_for(const RunConfig& cfg) { return PhaseSpaceGrid::make(cfg.radius, cfg.step); }

Json grid_echo(const RunConfig& cfg) {
  Json j = common_config(cfg);
  j["radius"] = cfg.radius;
  j["step"] = cfg.step;
  return j;
}

Outcome cmd_wehrl(const RunConfig& cfg) {
  constexpr double kTol = 1e-3;
  const std::uint64_t seed = require_seed(cfg);
  Outcome o;
  o.config = grid_echo(cfg);
  o.config["a0"] = cfg.a0;
  o.config["samples"] = cfg.samples;
  o.config["seed"] = seed;
  o.config["cutoff"] = cfg.cutoff;
  o.config["levels"] = cfg.levels;
  o.tolerances = {{"below_coherent", kTol}, {"tail_mass", 1e-4}};
  OptimalityReport r = wehrl_optimality_test(cfg.a0, cfg.samples, seed, grid_for(cfg), functional_for(cfg.p),
                                             cfg.cutoff, cfg.levels, kTol, resolve_threads(cfg.threads));
  o.body = to_json(r);
  o.records = std::move(r.records);
  o.passed = r.below_vacuum == 0;
  o.summary = "coherent value " + fmt(r.vacuum_value) + ", min " + fmt(r.best_sampled_value) + " at " +
              r.best_input_descriptor;
  return o;
}

PureState parse_input(const std::string& spec, FockSpace space) {
  if (spec == "vacuum") return fock_state(0, space);
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (kind == "fock") return fock_state(std::stoi(arg), space);
    if (kind == "coherent") {
      const auto comma = arg.find(',');
      const double re = std::stod(arg.substr(0, comma));
      const double im = comma == std::string::npos ? 0.0 : std::stod(arg.substr(comma + 1));
      return coherent_state(cplx(re, im), space);
    }
  } catch (const std::logic_error&) {
  }
  throw UsageError("--input must be vacuum, fock:N or coherent:RE[,IM]");
}

Outcome cmd_berezinlieb(const RunConfig& cfg) {
  constexpr double kSlack = 1e-3, kConvolution = 2e-3;
  require_positive(cfg.c, "--c");
  Outcome o;
  o.config = grid_echo(cfg);
  o.config["c"] = cfg.c;
  o.config["a0"] = cfg.a0;
  o.config["a0p"] = cfg.a0p;
  o.config["input"] = cfg.input;
  o.config["cutoff"] = cfg.cutoff;
  o.tolerances = {{"sandwich", kSlack}, {"convolution", kConvolution}, {"quadrature", 1e-3}};
  const FockOperator rho = density(parse_input(cfg.input, FockSpace::make(1, cfg.cutoff)));
  const SandwichFields fields = sandwich_fields(rho, cfg.c, cfg.a0, cfg.a0p, grid_for(cfg), resolve_threads(cfg.threads));
  const BerezinLiebReport r = berezin_lieb_check(fields, functional_for(cfg.p));
  const double dev = convolution_deviation(fields, cfg.a0p);
  o.body = to_json(r);
  o.body["convolution_deviation"] = dev;
  if (!cfg.field_csv.empty()) {
    std::ofstream f(cfg.field_csv, std::ios::binary);
    if (!f) throw FileFormatError("cannot write " + cfg.field_csv);
    write_field_csv(fields.upper, f);
  }
  o.passed = r.lower_slack >= -kSlack && r.upper_slack >= -kSlack && dev <= kConvolution;
  o.summary = "lower " + fmt(r.lower) + " <= middle " + fmt(r.middle) + " <= upper " + fmt(r.upper) +
              ", convolution deviation " + fmt(dev);
  return o;
}

Outcome cmd_selftest(const RunConfig& cfg) {
  AcceptanceOptions opt;
  opt.scale = cfg.full ? AcceptanceScale::kFull : AcceptanceScale::kReduced;
  if (cfg.seed) opt.seed = *cfg.seed;
  opt.threads = resolve_threads(cfg.threads);
  Outcome o;
  o.config = {{"scale", cfg.full ? "full" : "reduced"}, {"seed", opt.seed}};
  o.tolerances = "per criterion, see metrics";
  Json criteria = Json::array();
  std::size_t passed = 0;
  for (const auto& r : run_acceptance(opt)) {
    criteria.push_back(to_json(r));
    if (r.passed) ++passed;
  }
  o.body["criteria"] = std::move(criteria);
  o.passed = passed == kCriterionCount;
  o.summary = std::to_string(passed) + "/" + std::to_string(kCriterionCount) + " criteria passed";
  return o;
}

// Flattens a report into key,value rows with dotted paths.
void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
  } else if (j.is_string()) {
    os << prefix << ",\"" << j.get<std::string>() << "\"\n";
  } else if (j.is_number_float()) {
    os << prefix << ',' << format_double(j.get<double>()) << '\n';
  } else {
    os << prefix << ',' << j.dump() << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& log) {
  RunConfig cfg;
  CLI::App app{"gausslab: gauge-covariant Gaussian channels and their output entropies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());

  std::map<std::string, std::function<Outcome(const RunConfig&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, auto handler, int channels) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[name] = handler;
    if (channels == 1) sub->add_option("channel", cfg.channels, "channel JSON file")->required()->expected(1);
    if (channels == 2) sub->add_option("channels", cfg.channels, "two channel JSON files")->required()->expected(2);
    sub->add_option("--output,-o", cfg.output, "report path (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", cfg.threads, "worker threads (default GAUSSLAB_THREADS or 1)")
        ->check(CLI::NonNegativeNumber);
    return sub;
  };
  auto tol_option = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "validity tolerance")->check(CLI::PositiveNumber);
  };
  auto lab_options = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "Haar samples");
    sub->add_option("--seed", cfg.seed, "base seed (required)");
    sub->add_option("--cutoff", cfg.cutoff, "Fock cutoff per mode");
    sub->add_option("--levels", cfg.levels, "levels per mode for Haar inputs")->check(CLI::PositiveNumber);
    sub->add_option("--lab-tol", cfg.lab_tol, "assertion tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--leakage-budget", cfg.leakage_budget, "per-sample leakage budget")->check(CLI::PositiveNumber);
  };
  auto grid_options = [&](CLI::App* sub) {
    sub->add_option("--radius", cfg.radius, "phase-space radius")->check(CLI::PositiveNumber);
    sub->add_option("--step", cfg.step, "grid step")->check(CLI::PositiveNumber);
    sub->add_option("--p", cfg.p, "Renyi order; 1 or absent selects von Neumann");
  };

  tol_option(add("validate", "check validity and report the class", cmd_validate, 1));
  tol_option(add("classify", "class, strictness conditions and diagonal form", cmd_classify, 1));
  tol_option(add("decompose", "attenuator-amplifier factorization", cmd_decompose, 1));
  {
    CLI::App* s = add("entropy", "entropies of the vacuum output", cmd_entropy, 1);
    tol_option(s);
    s->add_option("--p", cfg.p, "also report the Renyi entropy of this order");
    s->add_flag("--bits", cfg.bits, "report entropies in bits");
  }
  {
    CLI::App* s = add("purity", "maximal output p-purity and its determinant form", cmd_purity, 1);
    tol_option(s);
    s->add_option("--p", cfg.p, "order p > 1")->required();
    s->add_flag("--bits", cfg.bits, "report the Renyi entropy in bits");
    s->add_flag("--fock-check", cfg.fock_check, "compare with the Fock-space vacuum output");
    s->add_option("--cutoff", cfg.cutoff, "Fock cutoff for --fock-check");
  }
  {
    CLI::App* s = add("majorize", "vacuum optimality and majorization sweep", cmd_majorize, 1);
    tol_option(s);
    lab_options(s);
    s->add_option("--p", cfg.p, "single Renyi order instead of the functional suite");
  }
  {
    CLI::App* s = add("additivity", "output purity of a tensor product", cmd_additivity, 2);
    tol_option(s);
    lab_options(s);
    s->add_option("--p", cfg.p, "order p > 1 (default 2)");
  }
  {
    CLI::App* s = add("strictgap", "gaps of non-coherent probes", cmd_strictgap, 1);
    tol_option(s);
    s->add_option("--p", cfg.p, "Renyi order; 1 or absent selects von Neumann");
    s->add_option("--cutoff", cfg.cutoff, "Fock cutoff");
  }
  {
    CLI::App* s = add("wehrl", "classical functional of Husimi densities", cmd_wehrl, 0);
    grid_options(s);
    s->add_option("--a0", cfg.a0, "reference correlation a0 >= 1/2");
    s->add_option("--samples", cfg.samples, "Haar samples");
    s->add_option("--seed", cfg.seed, "base seed (required)");
    s->add_option("--cutoff", cfg.cutoff, "Fock cutoff");
    s->add_option("--levels", cfg.levels, "levels for Haar inputs")->check(CLI::PositiveNumber);
  }
  {
    CLI::App* s = add("berezinlieb", "sandwich and convolution identity for one input", cmd_berezinlieb, 0);
    grid_options(s);
    s->add_option("--c", cfg.c, "measure-reprepare gain");
    s->add_option("--a0", cfg.a0, "input reference correlation");
    s->add_option("--a0p", cfg.a0p, "output reference correlation");
    s->add_option("--input", cfg.input, "vacuum, fock:N or coherent:RE[,IM]");
    s->add_option("--cutoff", cfg.cutoff, "input Fock cutoff");
    s->add_option("--field-csv", cfg.field_csv, "dump the upper symbol as x,y,p rows");
  }
  {
    CLI::App* s = add("selftest", "acceptance criteria at reduced sample counts", cmd_selftest, 0);
    s->add_option("--seed", cfg.seed, "base seed (a fixed default is used otherwise)");
    s->add_flag("--full", cfg.full, "full sample counts");
  }

  std::vector<char*> argv;
  for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, log);
    return code == 0 ? kOk : kUsageOrIo;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  Outcome o;
  try {
    o = handlers.at(cfg.command)(cfg);
  } catch (const Error& e) {
    const ErrorCode code = e.code();
    log << "gausslab " << cfg.command << ": " << e.what() << "\n";
    // Bad input or bad flags are usage errors; a channel or state that fails
    // a checked property is an assertion failure.
    const bool usage = code == ErrorCode::kUsageError || code == ErrorCode::kFileFormatError ||
                       code == ErrorCode::kParameterOutOfRange || code == ErrorCode::kInvalidOrder ||
                       code == ErrorCode::kAmplitudeTooLarge || code == ErrorCode::kConditionNotMet ||
                       code == ErrorCode::kNotDiagonal || code == ErrorCode::kDimensionMismatch;
    if (usage) return kUsageOrIo;
    o.passed = false;
    o.config = common_config(cfg);
    o.tolerances = {{"validity", cfg.tol}};
    o.body["error"] = {{"code", std::string(to_string(code))}, {"message", e.what()}};
    if (const auto* noise = dynamic_cast<const InvalidNoiseError*>(&e)) {
      o.body["error"]["sign"] = noise->sign();
      o.body["error"]["min_eigenvalue"] = noise->min_eigenvalue();
    }
    o.summary = e.what();
  }

  Json report = report_header(cfg.command, std::move(o.config), std::move(o.tolerances));
  report["passed"] = o.passed;
  for (auto& [k, v] : o.body.items()) report[k] = v;

  std::ostringstream text;
  if (cfg.format == "csv") {
    if (!o.records.empty()) {
      write_records_csv(o.records, text);
    } else {
      text << "key,value\n";
      flatten(report, "", text);
    }
  } else {
    text << dump(report);
  }
  if (cfg.output.empty()) {
    out << text.str();
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f || !(f << text.str())) {
      log << "gausslab: cannot write " << cfg.output << "\n";
      return kUsageOrIo;
    }
  }
  log << cfg.command << ": " << (o.passed ? "ok" : "FAILED") << ": " << o.summary << "\n";
  return o.passed ? kOk : kAssertionFailed;
}

}  // namespace gausslab::cli
