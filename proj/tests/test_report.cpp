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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "weylgme/zoo.hpp"

using namespace weylgme;

TEST(format, numbers) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.33333333333333331");
  EXPECT_EQ(std::stod(format_double(std::sqrt(2.0))), std::sqrt(2.0));
  EXPECT_EQ(format_fixed4(3.71769), "3.7177");
  EXPECT_EQ(format_fixed4(-1e-9), "0.0000");
}

TEST(csv, quoting) {
  std::ostringstream out;
  write_csv(out, {{"a", "b"}, {{"1", "x,y"}, {"say \"hi\"", "2"}}});
  EXPECT_EQ(out.str(), "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",2\n");
}

TEST(render, report_text_and_json) {
  const auto report = detect(w3(), 1, 1, DetectionMode::general);
  const auto text = render_text(report);
  EXPECT_NE(text.find("T(rho)    = 3.7177"), std::string::npos) << text;
  EXPECT_NE(text.find("GME-certified"), std::string::npos);
  EXPECT_NE(text.find("1|23"), std::string::npos);

  const auto doc = nlohmann::json::parse(render_json(report));
  EXPECT_EQ(doc["verdict"], "GME-certified");
  EXPECT_EQ(doc["threshold_kind"], "K");
  EXPECT_EQ(doc["bipartitions"].size(), 3u);
  EXPECT_NEAR(doc["score"].get<double>(), 3.7177, 5e-4);
  EXPECT_NEAR(doc["threshold"].get<double>(), 1 + std::sqrt(3.0), 1e-12);
}

TEST(repro, table1_rows) {
  const auto table = repro(ReproTarget::table1);
  ASSERT_EQ(table.rows.size(), 3u);
  const double slopes[] = {3.7177, 6.5825, 6.5225};
  const double thresholds[] = {0.7349, 0.6022, 0.5464};
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(std::stod(table.rows[k][3]), slopes[k], 5e-4);
    EXPECT_NEAR(std::stod(table.rows[k][5]), thresholds[k], 1e-3);
  }
}

TEST(repro, fig2_columns) {
  const auto table = repro(ReproTarget::fig2, 3);
  EXPECT_EQ(table.header, (std::vector<std::string>{"x", "f3", "g3"}));
  ASSERT_EQ(table.rows.size(), 3u);
  EXPECT_NEAR(std::stod(table.rows[2][1]), 4 + std::sqrt(2.0) - 1 - std::sqrt(5.5), 1e-9);
  EXPECT_EQ(table.rows[2][2], "5");
}

TEST(repro, deterministic) {
  std::ostringstream a, b;
  write_csv(a, repro(ReproTarget::example3));
  write_csv(b, repro(ReproTarget::example3));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(parse_repro_target("fig1"), ReproTarget::fig1);
  EXPECT_EQ(parse_repro_target("table9"), std::nullopt);
}
