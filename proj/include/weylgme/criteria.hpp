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

#ifndef WEYLGME_CRITERIA_HPP
#define WEYLGME_CRITERIA_HPP

#include <string>
#include <vector>

#include "weylgme/correlation.hpp"
#include "weylgme/state.hpp"
#include "weylgme/types.hpp"

namespace weylgme {

/// Split L | R of the labels 1..n. L is nonempty with |L| <= n/2, R is its
/// ascending complement.
class Bipartition {
 public:
  Bipartition(int parties, LabelSet left);

  /// Parses "1,3|2,4". The right-hand side must be the complement of the
  /// left-hand side.
  static Bipartition parse(const std::string& text, int parties);

  int parties() const { return parties_; }
  const LabelSet& left() const { return left_; }
  const LabelSet& right() const { return right_; }

  /// Compact form used in reports, e.g. "2|13"; labels above 9 are comma
  /// separated.
  std::string name() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  int parties_;
  LabelSet left_;
  LabelSet right_;
};

/// Every bipartition entering the averaged score: all left sets of size
/// 1..floor(n/2), by size then lexicographically.
std::vector<Bipartition> score_bipartitions(int parties);

struct NMatrix {
  Bipartition bipartition;
  double alpha;
  double beta;
  CMatrix matrix;
};

/// S^{L|R}: flat block of the coefficients with rows over L and columns
/// over R. Overlapping or empty label sets throw ArgumentError.
CMatrix s_matrix(const CorrelationTensor& t, const LabelSet& left,
                 const LabelSet& right);

/// alpha * [S^{L|r1} 0] + beta * S^{L|R}, r1 = min(R). The alpha block
/// fills the first d_{r1}^2 - 1 columns.
NMatrix n_matrix(const CorrelationTensor& t, const Bipartition& bp,
                 double alpha, double beta);

/// Sum of singular values. Singular values below 1e-12 * max are dropped.
double trace_norm(const CMatrix& m);

/// Separability bound on ||N^{L|R}||_tr.
double bound_M(const Dims& dims, const Bipartition& bp, double alpha,
               double beta);

/// Average of ||N^{L|R}||_tr over score_bipartitions(n).
double score_T(const CorrelationTensor& t, double alpha, double beta);

/// Max of bound_M over score_bipartitions(n).
double threshold_K(const Dims& dims, double alpha, double beta);

/// Mean of bound_M over score_bipartitions(n); valid for
/// permutation-invariant states.
double threshold_J(const Dims& dims, double alpha, double beta);

enum class DetectionMode { general, permutation_invariant };
enum class Verdict { gme_certified, inconclusive };

const char* to_string(DetectionMode mode);
const char* to_string(Verdict verdict);

struct BipartitionRecord {
  Bipartition bipartition;
  double trace_norm;
  double bound;
  bool violated;  // trace_norm > bound: entangled across this split
};

struct CriterionReport {
  Dims dims;
  double alpha = 0.0;
  double beta = 0.0;
  DetectionMode mode = DetectionMode::general;
  std::vector<BipartitionRecord> records;
  double score = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

/// Checks rho = P rho P^dagger for every transposition of subsystems.
/// All dims must be equal. Throws PreconditionError naming the first
/// failing transposition.
void require_permutation_invariant(const DensityMatrix& state,
                                   double tol = 1e-9);

/// Runs the per-bipartition tests and the averaged GME test. The state is
/// validated first; n must be >= 3.
CriterionReport detect(const DensityMatrix& state, double alpha, double beta,
                       DetectionMode mode);

}  // namespace weylgme

#endif  // WEYLGME_CRITERIA_HPP
