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

#ifndef WEYLGME_STATE_FILE_HPP
#define WEYLGME_STATE_FILE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "weylgme/state.hpp"

namespace weylgme {

/// JSON state file:
///
///   {
///     "dims": [2, 2, 2],
///     "name": "...",            (optional)
///     "source": "...",          (optional)
///     "matrix": [
///       [[re, im], [re, im], ...],
///       ...
///     ]
///   }
///
/// Numbers are written with 17 significant digits in the C locale, so
/// serialize(parse(f)) reproduces f byte for byte when f is in this layout.
struct StateFile {
  DensityMatrix state;
  std::optional<std::string> name;
  std::optional<std::string> source;
};

/// Throws ParseError on malformed input and ValidationError when the matrix
/// is not a density matrix.
StateFile parse_state_file(const std::string& text);

std::string serialize_state_file(const StateFile& file);

StateFile load_state_file(const std::filesystem::path& path);
void save_state_file(const StateFile& file, const std::filesystem::path& path);

}  // namespace weylgme

#endif  // WEYLGME_STATE_FILE_HPP
