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

#include <iosfwd>
#include <string>
#include <vector>

#include "gausslab/husimi.hpp"
#include "gausslab/majorization.hpp"
#include "json.hpp"

namespace gausslab {

/// Insertion-ordered so that identical runs give identical bytes.
using Json = nlohmann::ordered_json;

std::string library_version();

/// Skeleton shared by every report: command, version, config echo and the
/// tolerances each assertion used.
Json report_header(const std::string& command, Json config, Json tolerances);

Json to_json(const OptimalityReport& r, bool with_records = false);
Json to_json(const MajorizationReport& r);
Json to_json(const StrictGapReport& r);
Json to_json(const AdditivityReport& r);
Json to_json(const BerezinLiebReport& r);
Json to_json(const EquivalenceReport& r);
Json to_json(const SpectrumVector& s, std::size_t max_entries = 16);

/// Two-space indent and a trailing newline.
std::string dump(const Json& j);

/// seed,input,functional,value,gap,leakage with 17 significant digits.
void write_records_csv(const std::vector<SampleRecord>& records, std::ostream& os);

/// %.17g, for CSV cells and summary lines.
std::string format_double(double x);

}  // namespace gausslab
