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

#ifndef WEYLGME_CORRELATION_HPP
#define WEYLGME_CORRELATION_HPP

#include <span>
#include <vector>

#include "weylgme/state.hpp"
#include "weylgme/types.hpp"

namespace weylgme {

/// Coefficients t_{u1..un} = tr(rho A_{u1}^dagger (x) ... (x) A_{un}^dagger)
/// of a state in the generalized Pauli basis, so that
/// rho = (1/D) sum_u t_u A_{u1} (x) ... (x) A_{un}.
///
/// Stored flat, row-major over (u1, ..., un) with un fastest.
class CorrelationTensor {
 public:
  CorrelationTensor(Dims dims, std::vector<Complex> coeffs);

  const Dims& dims() const { return dims_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// Extent of axis s (0-based): d_s^2.
  int extent(int axis) const { return dims_[axis] * dims_[axis]; }

  /// Coefficient at the multi-index (u1, ..., un).
  Complex at(std::span<const int> index) const;

  std::size_t flat_index(std::span<const int> index) const;

 private:
  Dims dims_;
  std::vector<Complex> coeffs_;
};

/// Vector T^(S) of coefficients with every label in S nonzero and every
/// label outside S zero. Entries are ordered row-major over the ascending
/// labels of S (last label fastest), each index running over 1..d^2-1.
struct SubsetVector {
  LabelSet labels;
  CVector entries;

  double norm_squared() const { return entries.squaredNorm(); }
  double norm() const { return entries.norm(); }
};

CorrelationTensor corr_tensor(const DensityMatrix& state);

SubsetVector subset_vector(const CorrelationTensor& t, const LabelSet& labels);

/// Inverse of corr_tensor.
DensityMatrix reconstruct(const CorrelationTensor& t);

/// Coefficients restricted to `left` and `right` (both nonempty, disjoint),
/// all other positions zero, flattened to a matrix with rows over `left`'s
/// multi-index and columns over `right`'s, both last-label-fastest.
CMatrix flatten_block(const CorrelationTensor& t, const LabelSet& left,
                      const LabelSet& right);

/// Upper bound d - 1 on ||T^(s)||^2 for a single d-level subsystem.
double bound_single(int d);

/// Upper bound on ||T^(12)||^2 for a (d1, d2) bipartite state.
double bound_pair(int d1, int d2);

/// Upper bound on ||T^(1..n)||^2 for an n-partite state, n >= 2.
double bound_multi(const Dims& dims);

}  // namespace weylgme

#endif  // WEYLGME_CORRELATION_HPP
