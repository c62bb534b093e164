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

#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"

namespace gausslab::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::kScalar,
                                 detail::axpy_scalar,
                                 detail::cheb_tridiag_step_scalar,
                                 detail::cdotc_scalar,
                                 detail::cmul_conj_axpy_scalar,
                                 detail::caxpy_scalar};
  return table;
}

namespace {

bool cpu_has_avx2() {
#if defined(GAUSSLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return &scalar_table();
    case Isa::kAvx2: {
#if defined(GAUSSLAB_HAVE_AVX2)
      static const KernelTable table{Isa::kAvx2,
                                     detail::axpy_avx2,
                                     detail::cheb_tridiag_step_avx2,
                                     detail::cdotc_avx2,
                                     detail::cmul_conj_axpy_avx2,
                                     detail::caxpy_avx2};
      if (cpu_has_avx2()) return &table;
#endif
      return nullptr;
    }
    case Isa::kNeon: {
#if defined(GAUSSLAB_HAVE_NEON)
      // Advanced SIMD is mandatory on AArch64.
      static const KernelTable table{Isa::kNeon,
                                     detail::axpy_neon,
                                     detail::cheb_tridiag_step_neon,
                                     detail::cdotc_neon,
                                     detail::cmul_conj_axpy_neon,
                                     detail::caxpy_neon};
      return &table;
#else
      return nullptr;
#endif
    }
  }
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    if (const char* env = std::getenv("GAUSSLAB_SIMD"); env != nullptr && std::string(env) == "scalar") {
      return scalar_table();
    }
    for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
      if (const KernelTable* t = table_for(isa)) return *t;
    }
    return scalar_table();
  }();
  return chosen;
}

}  // namespace gausslab::kernels
