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
#include <functional>
#include <string>
#include <vector>

#include "gausslab/report.hpp"

namespace gausslab {

inline constexpr int kCriterionCount = 11;

enum class AcceptanceScale {
  kFull,     // sample counts and runtime limits as stated in the criteria
  kReduced,  // smaller sweeps for selftest; tolerances unchanged
};

struct AcceptanceOptions {
  AcceptanceScale scale = AcceptanceScale::kFull;
  std::uint64_t seed = 20260517;
  int threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double runtime_limit = 0.0;  // 0 when the criterion states none
  Json metrics;
};

/// Runs criterion `id` in [1, kCriterionCount]. Library errors are caught and
/// reported as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& opt);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// Leaves out the wall time so that reports are reproducible.
Json to_json(const CriterionResult& r);

/// "[PASS] 3 name: detail (1.23 s)"
std::string summary_line(const CriterionResult& r);

}  // namespace gausslab
