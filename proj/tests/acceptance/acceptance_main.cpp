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

// Runs every acceptance criterion at full scale, one line per criterion.
// Exit status 0 only when all pass. Flags: --reduced, --threads N,
// --seed S, --json PATH.

#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "gausslab/acceptance.hpp"
#include "gausslab/kernels/kernels.hpp"
#include "gausslab/parallel.hpp"

int main(int argc, char** argv) {
  CLI::App app{"gausslab acceptance gate"};
  bool reduced = false;
  int threads = 0;
  std::uint64_t seed = gausslab::AcceptanceOptions{}.seed;
  std::string json_path;
  app.add_flag("--reduced", reduced, "selftest sample counts");
  app.add_option("--threads", threads, "worker threads (default GAUSSLAB_THREADS or 1)");
  app.add_option("--seed", seed, "base seed");
  app.add_option("--json", json_path, "write the machine-readable report here");
  CLI11_PARSE(app, argc, argv);

  gausslab::AcceptanceOptions opt;
  opt.scale = reduced ? gausslab::AcceptanceScale::kReduced : gausslab::AcceptanceScale::kFull;
  opt.seed = seed;
  opt.threads = gausslab::resolve_threads(threads);
  std::printf("gausslab %s acceptance, kernels %s, seed %llu\n", gausslab::library_version().c_str(),
              std::string(gausslab::kernels::to_string(gausslab::kernels::active().isa)).c_str(), static_cast<unsigned long long>(seed));

  int failures = 0;
  gausslab::Json criteria = gausslab::Json::array();
  gausslab::run_acceptance(opt, [&](const gausslab::CriterionResult& r) {
    std::printf("%s\n", gausslab::summary_line(r).c_str());
    std::fflush(stdout);
    if (!r.passed) ++failures;
    criteria.push_back(gausslab::to_json(r));
  });
  std::printf("%d/%d criteria passed\n", gausslab::kCriterionCount - failures, gausslab::kCriterionCount);
  if (!json_path.empty()) {
    std::ofstream(json_path, std::ios::binary) << gausslab::dump({{"criteria", criteria}});
  }
  return failures == 0 ? 0 : 1;
}
