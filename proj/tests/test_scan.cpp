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

#include "weylgme/scan.hpp"

#include <cmath>

#include <gtest/gtest.h>

using namespace weylgme;

TEST(find_crossings, linear_gap) {
  const auto r = find_crossings([](double x) { return 4.0 * x - 1.0; }, 11, 1e-9);
  EXPECT_TRUE(r.monotone);
  ASSERT_TRUE(r.threshold);
  EXPECT_NEAR(*r.threshold, 0.25, 1e-9);
}

TEST(find_crossings, never_or_always_fires) {
  const auto never = find_crossings([](double x) { return x - 2.0; }, 11, 1e-6);
  EXPECT_FALSE(never.threshold);
  EXPECT_TRUE(never.crossings.empty());
  const auto always = find_crossings([](double x) { return x + 1.0; }, 11, 1e-6);
  ASSERT_TRUE(always.threshold);
  EXPECT_EQ(*always.threshold, 0.0);
}

TEST(find_crossings, non_monotone_reports_every_sign_change) {
  // Positive on (0.23, 0.41) and (0.77, 1].
  const auto gap = [](double x) { return (x - 0.23) * (x - 0.41) * (x - 0.77); };
  const auto r = find_crossings(gap, 101, 1e-9);
  EXPECT_FALSE(r.monotone);
  ASSERT_EQ(r.crossings.size(), 3u);
  EXPECT_NEAR(r.crossings[0], 0.23, 1e-8);
  EXPECT_NEAR(r.crossings[1], 0.41, 1e-8);
  EXPECT_NEAR(r.crossings[2], 0.77, 1e-8);
  ASSERT_TRUE(r.threshold);
  EXPECT_NEAR(*r.threshold, 0.77, 1e-8);

  const auto falls = find_crossings([&](double x) { return -gap(x); }, 101, 1e-9);
  EXPECT_EQ(falls.crossings.size(), 3u);
  EXPECT_FALSE(falls.threshold);
}

TEST(find_crossings, rejects_bad_arguments) {
  const auto gap = [](double x) { return x; };
  EXPECT_THROW(find_crossings(gap, 1, 1e-6), ArgumentError);
  EXPECT_THROW(find_crossings(gap, 11, 0.0), ArgumentError);
}

TEST(scan, w_state_gme) {
  const auto r = scan(FamilySpec(FamilyName::w3_noise), 1, 1, GmeGeneral{});
  ASSERT_TRUE(r.threshold_x);
  EXPECT_NEAR(*r.threshold_x, 0.7349, 1e-3);
  EXPECT_TRUE(r.monotone);
  EXPECT_EQ(r.samples.size(), 101u);
}

TEST(scan, example2_bipartition) {
  const auto r = scan(FamilySpec(FamilyName::example2_noise), 0.5, 2,
                      Bipartition(3, {2}));
  ASSERT_TRUE(r.threshold_x);
  EXPECT_NEAR(*r.threshold_x, 0.3909, 1e-3);
}

TEST(scan, ghz4_perm_invariant) {
  const auto r = scan(FamilySpec(FamilyName::ghz4_noise), 1, 1, GmePermInvariant{});
  ASSERT_TRUE(r.threshold_x);
  EXPECT_NEAR(*r.threshold_x, 0.8087, 1e-3);
  EXPECT_THROW(scan(FamilySpec(FamilyName::example2_noise), 1, 1, GmePermInvariant{}),
               PreconditionError);
}

TEST(scan, threshold_is_bound_over_slope_and_grid_independent) {
  const FamilySpec family(FamilyName::example2_noise);
  const auto at_one = evaluate_criterion(family.state_at(1.0), 1, 1, GmeGeneral{}, 1.0);
  const double exact = at_one.bound / at_one.score;
  for (int grid : {2, 11, 101}) {
    const auto r = scan(family, 1, 1, GmeGeneral{}, 1e-7, grid);
    ASSERT_TRUE(r.threshold_x);
    EXPECT_NEAR(*r.threshold_x, exact, 1e-7);
  }
}

TEST(scan, samples_lie_on_a_line) {
  const FamilySpec family(FamilyName::w3_noise);
  const auto r = scan(family, 0.5, 2, GmeGeneral{});
  const double slope = r.samples.back().score;
  for (const auto& s : r.samples) {
    EXPECT_NEAR(s.score, slope * s.x, 1e-9 * slope);
    EXPECT_DOUBLE_EQ(s.bound, r.samples.front().bound);
  }
}

TEST(scan, undetected_family) {
  // |000> is a product state; no criterion can fire on its noisy family.
  CVector ket = CVector::Zero(8);
  ket(0) = 1.0;
  const auto family = FamilySpec::custom(DensityMatrix::pure({2, 2, 2}, ket));
  EXPECT_FALSE(scan(family, 1, 1, GmeGeneral{}).threshold_x);
  EXPECT_FALSE(scan(family, 0.5, 2, Bipartition(3, {1})).threshold_x);
}

TEST(emit_curve, w_family_columns_and_gap) {
  const auto c = emit_curve(FamilySpec(FamilyName::w3_noise), 0.1, 2, GmeGeneral{}, 11);
  EXPECT_EQ(c.header, (std::vector<std::string>{"x", "score", "bound", "f", "g1", "g2"}));
  ASSERT_EQ(c.rows.size(), 11u);
  const double k1 = 0.1 + 2 * std::sqrt(3.0);
  EXPECT_NEAR(c.rows.front()[3], -k1, 1e-12);
  EXPECT_NEAR(c.rows.back()[3], 6.5225 - k1, 5e-4);
  EXPECT_NEAR(c.rows[5][4], (std::sqrt(66.0) * 0.5 - 6) / 12, 1e-15);
}

TEST(emit_curve, ghz_family_gap) {
  const auto c =
      emit_curve(FamilySpec(FamilyName::ghz4_noise), 1, 1, Bipartition(4, {1}), 5);
  EXPECT_EQ(c.header.back(), "g3");
  const double slope = 4 + std::sqrt(2.0), bound = 1 + std::sqrt(5.5);
  for (const auto& row : c.rows) EXPECT_NEAR(row[3], slope * row[0] - bound, 1e-9);
}

TEST(criterion, names) {
  EXPECT_EQ(to_string(Criterion{Bipartition(3, {2})}), "bipartition 2|13");
  EXPECT_EQ(to_string(Criterion{GmeGeneral{}}), "gme_general");
  EXPECT_EQ(to_string(Criterion{GmePermInvariant{}}), "gme_perm_invariant");
}
