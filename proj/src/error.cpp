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

#include "gausslab/error.hpp"

#include <sstream>

namespace gausslab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kInvalidNoise: return "InvalidNoise";
    case ErrorCode::kNotQuantumLimited: return "NotQuantumLimited";
    case ErrorCode::kNotQuantumLimitedAmplifier: return "NotQuantumLimitedAmplifier";
    case ErrorCode::kNotDiagonal: return "NotDiagonal";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kAmplitudeTooLarge: return "AmplitudeTooLarge";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kTruncationLeakage: return "TruncationLeakage";
    case ErrorCode::kConditionNotMet: return "ConditionNotMet";
    case ErrorCode::kTailMassTooLarge: return "TailMassTooLarge";
    case ErrorCode::kQuadratureError: return "QuadratureError";
    case ErrorCode::kUsageError: return "UsageError";
    case ErrorCode::kFileFormatError: return "FileFormatError";
  }
  return "Unknown";
}

namespace {

std::string describe_noise(int sign, double min_eigenvalue) {
  std::ostringstream os;
  os.precision(6);
  os << "mu " << (sign > 0 ? "-" : "+") << " (I - KK*)/2 has eigenvalue " << min_eigenvalue;
  return os.str();
}

std::string describe_position(const std::string& what, int row, int column) {
  if (row < 0) return what;
  std::ostringstream os;
  os << what << " (row " << row;
  if (column >= 0) os << ", column " << column;
  os << ")";
  return os.str();
}

}  // namespace

InvalidNoiseError::InvalidNoiseError(int sign, double min_eigenvalue)
    : Error(ErrorCode::kInvalidNoise, describe_noise(sign, min_eigenvalue)),
      sign_(sign),
      min_eigenvalue_(min_eigenvalue) {}

FileFormatError::FileFormatError(const std::string& what, int row, int column)
    : Error(ErrorCode::kFileFormatError, describe_position(what, row, column)),
      row_(row),
      column_(column) {}

}  // namespace gausslab
