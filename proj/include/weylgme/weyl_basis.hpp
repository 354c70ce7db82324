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

#ifndef WEYLGME_WEYL_BASIS_HPP
#define WEYLGME_WEYL_BASIS_HPP

#include <vector>

#include "weylgme/types.hpp"

namespace weylgme {

/// One generalized Pauli (clock-and-shift) operator A_u of a d-level system.
///
/// With u = d*i + j the matrix is sum_m w^(i*m) |m><m+j mod d|, where
/// w = exp(2*pi*i/d). Index 0 is the identity.
struct PauliOp {
  int dim = 0;
  int index = 0;
  int clock = 0;  // i
  int shift = 0;  // j
  CMatrix matrix;
};

/// A basis operator expressed as w^phase_exponent * A_index.
struct PhasedIndex {
  int phase_exponent = 0;
  int index = 0;

  friend bool operator==(const PhasedIndex&, const PhasedIndex&) = default;
};

/// w^k for the principal d-th root of unity; k is reduced mod d first so the
/// result is exact at k = 0.
Complex root_of_unity(int d, int k);

/// All d^2 operators for dimension d. Built once per d and shared; the
/// returned reference stays valid for the life of the program.
const std::vector<PauliOp>& pauli_basis(int d);

/// Throws ArgumentError for d < 2 or u outside [0, d^2 - 1].
const PauliOp& pauli_op(int d, int u);

/// A_u * A_v = w^(j*k) A_{d((i+k) mod d) + (j+l) mod d}, u = d*i+j, v = d*k+l.
PhasedIndex pauli_mul_index(int d, int u, int v);

/// A_u^dagger = w^(i*j) A_{d((d-i) mod d) + (d-j) mod d}.
PhasedIndex pauli_dagger_index(int d, int u);

}  // namespace weylgme

#endif  // WEYLGME_WEYL_BASIS_HPP
