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

#include "weylgme/zoo.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "weylgme/correlation.hpp"
#include "weylgme/criteria.hpp"

using namespace weylgme;

namespace {

double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(zoo, w3) {
  const auto w = w3();
  EXPECT_EQ(w.dims(), (Dims{2, 2, 2}));
  EXPECT_NEAR(w.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(purity(w), 1.0, 1e-14);
  // |001>, |010>, |100> sit at rows 1, 2, 4.
  EXPECT_NEAR(w.matrix()(1, 2).real(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(w.matrix()(4, 4).real(), 1.0 / 3.0, 1e-15);
  EXPECT_NO_THROW(require_permutation_invariant(w));
}

TEST(zoo, example2_phi) {
  const auto phi = example2_phi();
  EXPECT_EQ(phi.dims(), (Dims{3, 3, 2}));
  EXPECT_TRUE(validate(phi).ok());
  EXPECT_NEAR(purity(phi), 1.0, 1e-14);
  // |100> -> row 6, |001> -> row 1; each amplitude 1/sqrt(5).
  EXPECT_NEAR(phi.matrix()(6, 1).real(), 0.2, 1e-15);
  const auto t = corr_tensor(phi);
  EXPECT_NEAR(trace_norm(n_matrix(t, Bipartition(3, {2}), 0, 1).matrix), 9.1321, 5e-4);
}

TEST(zoo, ghz) {
  const auto bell = ghz(2);
  EXPECT_LE(max_diff(partial_trace(bell, {2}).matrix(), CMatrix::Identity(2, 2) / 2.0),
            1e-15);
  const auto g4 = ghz(4);
  EXPECT_EQ(g4.dims(), (Dims{2, 2, 2, 2}));
  EXPECT_NEAR(g4.matrix()(0, 15).real(), 0.5, 1e-15);
  EXPECT_NO_THROW(require_permutation_invariant(g4));
  EXPECT_TRUE(validate(ghz(3, 3)).ok());
  EXPECT_THROW(ghz(1), ArgumentError);
}

TEST(zoo, white_noise) {
  const auto w = w3();
  EXPECT_LE(max_diff(white_noise(w, 0.0).matrix(), CMatrix::Identity(8, 8) / 8.0), 1e-16);
  EXPECT_LE(max_diff(white_noise(w, 1.0).matrix(), w.matrix()), 0.0);
  EXPECT_THROW(white_noise(w, -0.1), ArgumentError);
  EXPECT_THROW(white_noise(w, 1.1), ArgumentError);

  const double x = 0.5;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(white_noise(w, x).matrix());
  const auto& ev = eig.eigenvalues();  // ascending
  for (int k = 0; k < 7; ++k) EXPECT_NEAR(ev(k), (1 - x) / 8, 1e-14);
  EXPECT_NEAR(ev(7), (1 - x) / 8 + x, 1e-14);
}

TEST(zoo, white_noise_scales_coefficients) {
  const auto base = example2_phi();
  const auto t1 = corr_tensor(base);
  const auto tx = corr_tensor(white_noise(base, 0.37));
  EXPECT_NEAR(std::abs(tx.coeffs()[0] - Complex(1.0)), 0.0, 1e-14);
  for (std::size_t k = 1; k < t1.coeffs().size(); ++k) {
    EXPECT_LE(std::abs(tx.coeffs()[k] - 0.37 * t1.coeffs()[k]), 1e-14);
  }
}

TEST(zoo, baselines_roots) {
  EXPECT_NEAR(baselines(6.0 / std::sqrt(66.0)).g1, 0.0, 1e-15);
  EXPECT_NEAR(6.0 / std::sqrt(66.0), 0.7385, 1e-4);
  const double root2 = (6.0 + std::sqrt(3.0)) / 3.0 / 3.26;
  EXPECT_NEAR(baselines(root2).g2, 0.0, 1e-15);
  EXPECT_NEAR(root2, 0.791, 1e-3);
  EXPECT_NEAR(baselines(2.0 / 3.0).g3, 0.0, 1e-15);
}

TEST(zoo, family_spec) {
  const FamilySpec w(FamilyName::w3_noise);
  EXPECT_LE(max_diff(w.state_at(1.0).matrix(), w3().matrix()), 0.0);
  EXPECT_LE(max_diff(w.state_at(0.0).matrix(), CMatrix::Identity(8, 8) / 8.0), 1e-16);
  EXPECT_EQ(FamilySpec(FamilyName::ghz4_noise).base().dims(), (Dims{2, 2, 2, 2}));
  EXPECT_THROW(FamilySpec(FamilyName::custom), ArgumentError);
  const auto custom = FamilySpec::custom(ghz(3));
  EXPECT_EQ(custom.name(), FamilyName::custom);
  EXPECT_EQ(parse_family_name("example2_noise"), FamilyName::example2_noise);
  EXPECT_EQ(parse_family_name("bogus"), std::nullopt);
}

TEST(zoo, random_states_are_valid) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    EXPECT_TRUE(validate(random_pure_state({3, 2}, rng)).ok());
    EXPECT_TRUE(validate(random_mixed_state({2, 2, 2}, 1 + k % 8, rng)).ok());
  }
  EXPECT_THROW(random_mixed_state({2}, 3, rng), ArgumentError);
}
