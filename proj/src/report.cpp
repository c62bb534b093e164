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

#include "gausslab/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace gausslab {

std::string library_version() { return GAUSSLAB_VERSION; }

Json report_header(const std::string& command, Json config, Json tolerances) {
  Json j;
  j["command"] = command;
  j["version"] = library_version();
  j["config"] = std::move(config);
  j["tolerances"] = std::move(tolerances);
  return j;
}

Json to_json(const OptimalityReport& r, bool with_records) {
  Json j;
  j["vacuum_value"] = r.vacuum_value;
  j["best_sampled_value"] = r.best_sampled_value;
  j["best_input_descriptor"] = r.best_input_descriptor;
  j["gap"] = r.gap;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["below_vacuum"] = r.below_vacuum;
  j["leakage"] = {{"max", r.max_leakage}, {"rejected", r.rejected}};
  if (with_records) {
    Json rows = Json::array();
    for (const auto& s : r.records) {
      rows.push_back({{"seed", s.seed},
                      {"input", s.input},
                      {"functional", s.functional},
                      {"value", s.value},
                      {"gap", s.gap},
                      {"leakage", s.leakage}});
    }
    j["records"] = std::move(rows);
  }
  return j;
}

Json to_json(const MajorizationReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["pass"] = r.passed;
  j["worst_deficit"] = r.worst_deficit;
  j["worst_input"] = r.worst_input;
  j["leakage"] = {{"max", r.max_leakage}, {"rejected", r.rejected}};
  return j;
}

Json to_json(const StrictGapReport& r) {
  Json j;
  j["vacuum_value"] = r.vacuum_value;
  j["min_noncoherent_gap"] = r.min_noncoherent_gap;
  j["max_coherent_gap"] = r.max_coherent_gap;
  Json gaps = Json::array();
  for (const auto& g : r.gaps) gaps.push_back({{"input", g.descriptor}, {"coherent", g.coherent}, {"gap", g.gap}});
  j["gaps"] = std::move(gaps);
  return j;
}

Json to_json(const AdditivityReport& r) {
  Json j;
  j["bound"] = r.bound;
  j["vacuum_purity"] = r.vacuum_purity;
  j["max_sample_purity"] = r.max_sample_purity;
  j["samples"] = r.samples;
  j["violations"] = r.violations;
  j["leakage"] = {{"max", r.max_leakage}, {"rejected", r.rejected}};
  return j;
}

Json to_json(const BerezinLiebReport& r) {
  Json j;
  j["lower"] = r.lower;
  j["middle"] = r.middle;
  j["upper"] = r.upper;
  j["gaps"] = {{"middle_minus_lower", r.lower_slack}, {"upper_minus_middle", r.upper_slack}};
  j["leakage"] = {{"max", r.leakage}, {"output_cutoff", r.output_cutoff}};
  return j;
}

Json to_json(const EquivalenceReport& r) {
  Json j;
  j["spectra"] = r.spectra;
  j["pairs"] = r.pairs;
  j["majorizing_pairs"] = r.majorizing_pairs;
  j["disagreements"] = r.disagreements;
  return j;
}

Json to_json(const SpectrumVector& s, std::size_t max_entries) {
  Json values = Json::array();
  for (std::size_t i = 0; i < std::min(max_entries, s.size()); ++i) values.push_back(s[i]);
  return values;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_records_csv(const std::vector<SampleRecord>& records, std::ostream& os) {
  os << "seed,input,functional,value,gap,leakage\n";
  for (const auto& r : records) {
    // Descriptors may hold commas (polygonal knots), so they are quoted.
    os << r.seed << ",\"" << r.input << "\",\"" << r.functional << "\"," << format_double(r.value) << ','
       << format_double(r.gap) << ',' << format_double(r.leakage) << '\n';
  }
}

}  // namespace gausslab
