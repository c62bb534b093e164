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

#include <stdexcept>
#include <string>
#include <string_view>

namespace gausslab {

enum class ErrorCode {
  kDimensionMismatch,
  kNotHermitian,
  kInvalidNoise,
  kNotQuantumLimited,
  kNotQuantumLimitedAmplifier,
  kNotDiagonal,
  kInvalidOrder,
  kInvalidState,
  kAmplitudeTooLarge,
  kParameterOutOfRange,
  kTruncationLeakage,
  kConditionNotMet,
  kTailMassTooLarge,
  kQuadratureError,
  kUsageError,
  kFileFormatError,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every recoverable failure in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when mu violates mu >= +-(I - KK*)/2. `sign` is +1 or -1 for the
/// violated branch and `min_eigenvalue` is the most negative eigenvalue of
/// mu -/+ (I - KK*)/2.
class InvalidNoiseError : public Error {
 public:
  InvalidNoiseError(int sign, double min_eigenvalue);

  int sign() const noexcept { return sign_; }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  int sign_;
  double min_eigenvalue_;
};

/// Malformed channel file; row/column are -1 when not tied to a matrix entry.
class FileFormatError : public Error {
 public:
  FileFormatError(const std::string& what, int row = -1, int column = -1);

  int row() const noexcept { return row_; }
  int column() const noexcept { return column_; }

 private:
  int row_;
  int column_;
};

}  // namespace gausslab
