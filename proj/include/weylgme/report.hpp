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

#ifndef WEYLGME_REPORT_HPP
#define WEYLGME_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "weylgme/criteria.hpp"
#include "weylgme/scan.hpp"

namespace weylgme {

/// Shortest-safe round-trip text: 17 significant digits, C locale.
std::string format_double(double value);

/// Fixed four decimals for human-readable output.
std::string format_fixed4(double value);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table to_table(const CurveTable& curve);
void write_csv(std::ostream& out, const Table& table);

std::string render_text(const CriterionReport& report);
std::string render_json(const CriterionReport& report);
std::string render_text(const ScanResult& result);

enum class ReproTarget { table1, table2, example3, fig1, fig2 };

std::optional<ReproTarget> parse_repro_target(const std::string& text);

/// table1/table2/example3: one row per criterion setting with columns
/// criterion, alpha, beta, slope, bound, threshold. fig1: x, f1, g1, g2.
/// fig2: x, f3, g3.
Table repro(ReproTarget target, int grid = 101);

}  // namespace weylgme

#endif  // WEYLGME_REPORT_HPP
