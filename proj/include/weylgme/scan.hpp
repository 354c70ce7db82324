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

#ifndef WEYLGME_SCAN_HPP
#define WEYLGME_SCAN_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weylgme/criteria.hpp"
#include "weylgme/zoo.hpp"

namespace weylgme {

struct GmeGeneral {};
struct GmePermInvariant {};

/// Which score/bound pair a scan tracks: a single bipartition's
/// ||N||_tr against bound_M, or the averaged score against K or J.
using Criterion = std::variant<Bipartition, GmeGeneral, GmePermInvariant>;

std::string to_string(const Criterion& criterion);

struct ScanSample {
  double x;
  double score;
  double bound;
};

struct ScanResult {
  FamilyName family;
  double alpha;
  double beta;
  Criterion criterion;
  /// Smallest x beyond which the criterion fires up to x = 1; empty when it
  /// never fires.
  std::optional<double> threshold_x;
  /// Every sign change of score - bound found on the grid, refined by
  /// bisection. Holds a single entry for monotone families.
  std::vector<double> crossings;
  bool monotone = true;
  std::vector<ScanSample> samples;
};

/// Score and bound of `criterion` for one state. In permutation-invariant
/// mode the caller is responsible for the invariance check.
ScanSample evaluate_criterion(const DensityMatrix& state, double alpha,
                              double beta, const Criterion& criterion,
                              double x = 0.0);

/// Root finding on a gap function over [0, 1]. Bisects directly when the
/// gap is non-decreasing on the grid, otherwise brackets every sign change
/// on the grid and refines each one.
struct CrossingSearch {
  std::optional<double> threshold;
  std::vector<double> crossings;
  bool monotone;
};

CrossingSearch find_crossings(const std::function<double(double)>& gap,
                              int grid, double tol);

ScanResult scan(const FamilySpec& family, double alpha, double beta,
                const Criterion& criterion, double tol = 1e-6, int grid = 101);

struct CurveTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Columns: x, score, bound, f = score - bound, then g1, g2 for the W family
/// or g3 for the four-qubit GHZ family.
CurveTable emit_curve(const FamilySpec& family, double alpha, double beta,
                      const Criterion& criterion, int grid = 101);

}  // namespace weylgme

#endif  // WEYLGME_SCAN_HPP
