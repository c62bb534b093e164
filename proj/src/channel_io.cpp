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

#include "gausslab/channel_io.hpp"

#include <fstream>
#include <sstream>

#include "gausslab/error.hpp"
#include "json.hpp"

namespace gausslab {
namespace {

using nlohmann::json;

CMatrix parse_matrix(const json& doc, const char* key, int modes) {
  const std::string name(key);
  if (!doc.contains(key)) throw FileFormatError("missing \"" + name + "\"");
  const json& rows = doc.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != modes) {
    throw FileFormatError("\"" + name + "\" must be an array of " + std::to_string(modes) + " rows");
  }
  CMatrix m(modes, modes);
  for (int i = 0; i < modes; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != modes) {
      throw FileFormatError("\"" + name + "\" row has the wrong length", i);
    }
    for (int j = 0; j < modes; ++j) {
      const json& e = row[static_cast<std::size_t>(j)];
      if (!e.is_object() || !e.contains("re") || !e.contains("im") || !e.at("re").is_number() ||
          !e.at("im").is_number()) {
        throw FileFormatError("\"" + name + "\" entry needs numeric \"re\" and \"im\"", i, j);
      }
      m(i, j) = cplx(e.at("re").get<double>(), e.at("im").get<double>());
    }
  }
  return m;
}

}  // namespace

GaugeCovariantChannel parse_channel_json(const std::string& text, double tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FileFormatError(std::string("not JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FileFormatError("top level must be an object");
  if (!doc.contains("modes") || !doc.at("modes").is_number_integer()) {
    throw FileFormatError("\"modes\" must be an integer");
  }
  const int modes = doc.at("modes").get<int>();
  if (modes < 1) throw FileFormatError("\"modes\" must be positive");
  return build_channel(parse_matrix(doc, "K", modes), parse_matrix(doc, "mu", modes), tol);
}

GaugeCovariantChannel load_channel(const std::string& path, double tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_channel_json(buf.str(), tol);
}

std::string channel_to_json(const GaugeCovariantChannel& ch) {
  auto matrix = [](const CMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({{"im", m(i, j).imag()}, {"re", m(i, j).real()}});
      rows.push_back(std::move(row));
    }
    return rows;
  };
  json doc;
  doc["K"] = matrix(ch.K());
  doc["modes"] = ch.modes();
  doc["mu"] = matrix(ch.mu());
  return doc.dump(2) + "\n";
}

}  // namespace gausslab
