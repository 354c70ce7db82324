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

#ifndef WEYLGME_STATE_HPP
#define WEYLGME_STATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "weylgme/types.hpp"

namespace weylgme {

/// Dense density matrix on H_{d1} (x) ... (x) H_{dn}.
///
/// Rows and columns follow the tensor-product ordering: the basis ket
/// |a1 ... an> sits at index a1*d2*...*dn + ... + an (last subsystem fastest).
/// Construction only checks shapes; physical validity is checked by
/// `validate` / `require_valid`.
class DensityMatrix {
 public:
  DensityMatrix(Dims dims, CMatrix entries);

  const Dims& dims() const { return dims_; }
  const CMatrix& matrix() const { return entries_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }

  /// I_D / D.
  static DensityMatrix maximally_mixed(const Dims& dims);

  /// |psi><psi| for a normalized copy of `ket`.
  static DensityMatrix pure(const Dims& dims, const CVector& ket);

 private:
  Dims dims_;
  CMatrix entries_;
};

struct ValidationTolerances {
  double hermiticity = 1e-9;
  double trace = 1e-9;
  double eigenvalue_floor = -1e-9;
};

struct ValidationReport {
  double hermiticity_defect = 0.0;  // max |rho - rho^dagger| entry
  double trace_defect = 0.0;        // |tr rho - 1|
  double min_eigenvalue = 0.0;
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;

  bool ok() const { return hermitian && unit_trace && positive; }
  std::string describe() const;
};

ValidationReport validate(const DensityMatrix& state,
                          const ValidationTolerances& tol = {});

/// Throws ValidationError carrying the report text when `validate` fails.
void require_valid(const DensityMatrix& state,
                   const ValidationTolerances& tol = {});

/// Kronecker product; dims are concatenated.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

struct MixtureSpec {
  std::vector<std::pair<double, DensityMatrix>> components;
};

/// Convex combination. Weights must lie in (0, 1] and sum to 1 within 1e-12.
DensityMatrix mix(const MixtureSpec& spec);

/// Reduced state on the 1-based labels in `keep` (sorted ascending).
DensityMatrix partial_trace(const DensityMatrix& state, const LabelSet& keep);

/// tr(rho^2).
double purity(const DensityMatrix& state);

/// Reorders subsystems: subsystem s of the result is subsystem perm[s-1] of
/// the input (perm is a 1-based permutation of 1..n). The permutation
/// operator P acts as P|a_1..a_n> = |a_perm(1) .. a_perm(n)>.
DensityMatrix permute_subsystems(const DensityMatrix& state,
                                 const std::vector<int>& perm);

/// Splits a flat basis index into per-subsystem digits (last fastest).
std::vector<int> digits_of(std::size_t index, const Dims& dims);

/// Inverse of `digits_of`.
std::size_t index_of(const std::vector<int>& digits, const Dims& dims);

}  // namespace weylgme

#endif  // WEYLGME_STATE_HPP
