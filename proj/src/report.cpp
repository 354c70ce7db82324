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

#include "weylgme/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace weylgme {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  return {buf.data(), res.ptr};
}

std::string format_fixed4(double value) {
  std::array<char, 64> buf{};
  // Avoid printing "-0.0000".
  if (std::abs(value) < 5e-5) value = 0.0;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, 4);
  return {buf.data(), res.ptr};
}

Table to_table(const CurveTable& curve) {
  Table table{curve.header, {}};
  for (const auto& row : curve.rows) {
    std::vector<std::string> cells;
    for (double v : row) cells.push_back(format_double(v));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const std::string& cell = cells[k];
      if (k) out << ',';
      if (cell.find_first_of(",\"\n") != std::string::npos) {
        out << '"';
        for (char ch : cell) out << (ch == '"' ? "\"\"" : std::string(1, ch));
        out << '"';
      } else {
        out << cell;
      }
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

namespace {

std::string dims_text(const Dims& dims) {
  std::string out = "(";
  for (std::size_t s = 0; s < dims.size(); ++s) {
    out += (s ? "," : "") + std::to_string(dims[s]);
  }
  return out + ")";
}

}  // namespace

std::string render_text(const CriterionReport& report) {
  std::ostringstream out;
  out << "dims " << dims_text(report.dims) << "  alpha " << format_fixed4(report.alpha)
      << "  beta " << format_fixed4(report.beta) << "  mode " << to_string(report.mode)
      << "\n\n";
  out << std::left << std::setw(14) << "bipartition" << std::setw(12) << "||N||_tr"
      << std::setw(12) << "bound" << "result\n";
  for (const auto& rec : report.records) {
    out << std::setw(14) << rec.bipartition.name() << std::setw(12)
        << format_fixed4(rec.trace_norm) << std::setw(12) << format_fixed4(rec.bound)
        << (rec.violated ? "entangled across split" : "-") << '\n';
  }
  out << "\nT(rho)    = " << format_fixed4(report.score) << '\n'
      << (report.mode == DetectionMode::general ? "K         = " : "J         = ")
      << format_fixed4(report.threshold) << '\n'
      << "verdict   : " << to_string(report.verdict) << '\n';
  return out.str();
}

std::string render_json(const CriterionReport& report) {
  nlohmann::ordered_json doc;
  doc["dims"] = report.dims;
  doc["alpha"] = report.alpha;
  doc["beta"] = report.beta;
  doc["mode"] = to_string(report.mode);
  auto& records = doc["bipartitions"] = nlohmann::ordered_json::array();
  for (const auto& rec : report.records) {
    records.push_back({{"left", rec.bipartition.left()},
                       {"right", rec.bipartition.right()},
                       {"trace_norm", rec.trace_norm},
                       {"bound", rec.bound},
                       {"violated", rec.violated}});
  }
  doc["score"] = report.score;
  doc["threshold"] = report.threshold;
  doc["threshold_kind"] = report.mode == DetectionMode::general ? "K" : "J";
  doc["verdict"] = to_string(report.verdict);
  return doc.dump(2) + "\n";
}

std::string render_text(const ScanResult& result) {
  std::ostringstream out;
  out << "family " << to_string(result.family) << "  alpha "
      << format_fixed4(result.alpha) << "  beta " << format_fixed4(result.beta)
      << "  criterion " << to_string(result.criterion) << '\n';
  if (!result.samples.empty()) {
    const auto& last = result.samples.back();
    out << "score at x=1 " << format_fixed4(last.score) << "  bound "
        << format_fixed4(last.bound) << '\n';
  }
  if (!result.monotone) {
    out << "non-monotone family; sign changes at";
    for (double x : result.crossings) out << ' ' << format_fixed4(x);
    out << '\n';
  }
  if (result.threshold_x) {
    out << "detected for " << format_fixed4(*result.threshold_x) << " < x <= 1\n";
  } else {
    out << "not detected\n";
  }
  return out.str();
}

std::optional<ReproTarget> parse_repro_target(const std::string& text) {
  if (text == "table1") return ReproTarget::table1;
  if (text == "table2") return ReproTarget::table2;
  if (text == "example3") return ReproTarget::example3;
  if (text == "fig1") return ReproTarget::fig1;
  if (text == "fig2") return ReproTarget::fig2;
  return std::nullopt;
}

namespace {

struct Setting {
  Criterion criterion;
  double alpha;
  double beta;
};

Table threshold_table(FamilyName family_name, const std::vector<Setting>& settings) {
  const FamilySpec family(family_name);
  Table table{{"criterion", "alpha", "beta", "slope", "bound", "threshold"}, {}};
  for (const auto& s : settings) {
    // White-noise families: score(x) = x * score(1).
    const auto at_one =
        evaluate_criterion(family.state_at(1.0), s.alpha, s.beta, s.criterion, 1.0);
    const auto result = scan(family, s.alpha, s.beta, s.criterion);
    table.rows.push_back({to_string(s.criterion), format_double(s.alpha),
                          format_double(s.beta), format_double(at_one.score),
                          format_double(at_one.bound),
                          result.threshold_x ? format_double(*result.threshold_x) : ""});
  }
  return table;
}

Table curve_columns(const CurveTable& curve, const std::vector<std::string>& keep,
                    const std::vector<std::string>& rename) {
  Table table{rename, {}};
  std::vector<std::size_t> cols;
  for (const auto& name : keep) {
    for (std::size_t k = 0; k < curve.header.size(); ++k) {
      if (curve.header[k] == name) cols.push_back(k);
    }
  }
  for (const auto& row : curve.rows) {
    std::vector<std::string> cells;
    for (std::size_t k : cols) cells.push_back(format_double(row[k]));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

}  // namespace

Table repro(ReproTarget target, int grid) {
  switch (target) {
    case ReproTarget::table1:
      return threshold_table(FamilyName::w3_noise, {{GmeGeneral{}, 1.0, 1.0},
                                                    {GmeGeneral{}, 0.5, 2.0},
                                                    {GmeGeneral{}, 0.1, 2.0}});
    case ReproTarget::table2: {
      const Bipartition split(3, {2});
      return threshold_table(FamilyName::example2_noise, {{split, 1.0, 1.0},
                                                          {split, 0.5, 2.0},
                                                          {split, 0.0, 1.0},
                                                          {GmeGeneral{}, 1.0, 1.0}});
    }
    case ReproTarget::example3:
      return threshold_table(FamilyName::ghz4_noise,
                             {{Bipartition(4, {1}), 1.0, 1.0},
                              {GmePermInvariant{}, 1.0, 1.0},
                              {GmeGeneral{}, 1.0, 1.0}});
    case ReproTarget::fig1:
      return curve_columns(emit_curve(FamilySpec(FamilyName::w3_noise), 0.1, 2.0,
                                      GmeGeneral{}, grid),
                           {"x", "f", "g1", "g2"}, {"x", "f1", "g1", "g2"});
    case ReproTarget::fig2:
      return curve_columns(emit_curve(FamilySpec(FamilyName::ghz4_noise), 1.0, 1.0,
                                      Bipartition(4, {1}), grid),
                           {"x", "f", "g3"}, {"x", "f3", "g3"});
  }
  throw ArgumentError("repro: unknown target");
}

}  // namespace weylgme
