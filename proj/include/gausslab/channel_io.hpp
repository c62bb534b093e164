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

#include <string>

#include "gausslab/channel.hpp"

namespace gausslab {

/// {"modes": s, "K": [[{"re": x, "im": y}, ...], ...], "mu": [[...]]}, rows
/// first. Malformed input throws FileFormatError naming the matrix entry;
/// well-formed but invalid channels throw what build_channel() throws.
GaugeCovariantChannel parse_channel_json(const std::string& text, double tol = kDefaultTol);

/// Reads and parses a channel file; an unreadable path is a FileFormatError.
GaugeCovariantChannel load_channel(const std::string& path, double tol = kDefaultTol);

/// Inverse of parse_channel_json(), with 17 significant digits.
std::string channel_to_json(const GaugeCovariantChannel& ch);

}  // namespace gausslab
