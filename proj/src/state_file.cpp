// Copyright 2026 The weylgme Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weylgme/state_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weylgme/report.hpp"

namespace weylgme {

using nlohmann::json;

StateFile parse_state_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("state file: top level must be an object");
  if (!doc.contains("dims") || !doc["dims"].is_array()) {
    throw ParseError("state file: missing 'dims' array");
  }
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw ParseError("state file: missing 'matrix' array");
  }

  Dims dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 2) {
      throw ParseError("state file: dims must be integers >= 2");
    }
    dims.push_back(d.get<int>());
  }
  if (dims.empty()) throw ParseError("state file: 'dims' is empty");

  const auto D = static_cast<Eigen::Index>(total_dim(dims));
  const auto& rows = doc["matrix"];
  if (static_cast<Eigen::Index>(rows.size()) != D) {
    throw ParseError("state file: matrix has " + std::to_string(rows.size()) +
                     " rows, dims require " + std::to_string(D));
  }
  CMatrix m(D, D);
  for (Eigen::Index r = 0; r < D; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != D) {
      throw ParseError("state file: row " + std::to_string(r) + " must hold " +
                       std::to_string(D) + " entries");
    }
    for (Eigen::Index c = 0; c < D; ++c) {
      const auto& entry = row[static_cast<std::size_t>(c)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw ParseError("state file: entry (" + std::to_string(r) + ", " +
                         std::to_string(c) + ") must be a [re, im] pair");
      }
      m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }

  StateFile file{DensityMatrix(std::move(dims), std::move(m)), std::nullopt,
                 std::nullopt};
  for (const char* key : {"name", "source"}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_string()) {
      throw ParseError(std::string("state file: '") + key + "' must be a string");
    }
    (std::string(key) == "name" ? file.name : file.source) = doc[key].get<std::string>();
  }
  require_valid(file.state);
  return file;
}

std::string serialize_state_file(const StateFile& file) {
  std::ostringstream out;
  out << "{\n  \"dims\": [";
  const Dims& dims = file.state.dims();
  for (std::size_t s = 0; s < dims.size(); ++s) out << (s ? ", " : "") << dims[s];
  out << "],\n";
  if (file.name) out << "  \"name\": " << json(*file.name).dump() << ",\n";
  if (file.source) out << "  \"source\": " << json(*file.source).dump() << ",\n";
  out << "  \"matrix\": [\n";
  const CMatrix& m = file.state.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << "    [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out << (c ? ", " : "") << '[' << format_double(m(r, c).real()) << ", "
          << format_double(m(r, c).imag()) << ']';
    }
    out << (r + 1 < m.rows() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

StateFile load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("state file: cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_file(buffer.str());
}

void save_state_file(const StateFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("state file: cannot write " + path.string());
  out << serialize_state_file(file);
}

}  // namespace weylgme
