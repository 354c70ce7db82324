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

#include "weylgme/weyl_basis.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace weylgme {
namespace {

void check_index(int d, int u) {
  if (d < 2) {
    throw ArgumentError("pauli: dimension must be >= 2, got " + std::to_string(d));
  }
  if (u < 0 || u >= d * d) {
    throw ArgumentError("pauli: index " + std::to_string(u) +
                        " outside [0, " + std::to_string(d * d - 1) + "]");
  }
}

int mod(int a, int d) { return ((a % d) + d) % d; }

std::vector<PauliOp> build_basis(int d) {
  std::vector<PauliOp> ops;
  ops.reserve(static_cast<std::size_t>(d * d));
  for (int u = 0; u < d * d; ++u) {
    PauliOp op;
    op.dim = d;
    op.index = u;
    op.clock = u / d;
    op.shift = u % d;
    op.matrix = CMatrix::Zero(d, d);
    for (int m = 0; m < d; ++m) {
      op.matrix(m, (m + op.shift) % d) = root_of_unity(d, op.clock * m);
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

}  // namespace

Complex root_of_unity(int d, int k) {
  const int r = mod(k, d);
  if (r == 0) return {1.0, 0.0};
  if (2 * r == d) return {-1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * r / d;
  return {std::cos(angle), std::sin(angle)};
}

const std::vector<PauliOp>& pauli_basis(int d) {
  check_index(d, 0);
  static std::mutex lock;
  static std::map<int, std::unique_ptr<const std::vector<PauliOp>>> cache;
  std::lock_guard guard(lock);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<const std::vector<PauliOp>>(build_basis(d));
  return *slot;
}

const PauliOp& pauli_op(int d, int u) {
  check_index(d, u);
  return pauli_basis(d)[static_cast<std::size_t>(u)];
}

PhasedIndex pauli_mul_index(int d, int u, int v) {
  check_index(d, u);
  check_index(d, v);
  const int i = u / d, j = u % d;
  const int k = v / d, l = v % d;
  return {mod(j * k, d), d * mod(i + k, d) + mod(j + l, d)};
}

PhasedIndex pauli_dagger_index(int d, int u) {
  check_index(d, u);
  const int i = u / d, j = u % d;
  return {mod(i * j, d), d * mod(d - i, d) + mod(d - j, d)};
}

}  // namespace weylgme
