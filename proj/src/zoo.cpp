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
#include <initializer_list>

namespace weylgme {
namespace {

CVector ket_sum(const Dims& dims, std::initializer_list<std::vector<int>> terms) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(total_dim(dims)));
  for (const auto& digits : terms) {
    v(static_cast<Eigen::Index>(index_of(digits, dims))) += 1.0;
  }
  return v;
}

}  // namespace

DensityMatrix w3() {
  const Dims dims{2, 2, 2};
  return DensityMatrix::pure(dims, ket_sum(dims, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

DensityMatrix example2_phi() {
  const Dims dims{3, 3, 2};
  return DensityMatrix::pure(
      dims, ket_sum(dims, {{1, 0, 0}, {2, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, 2, 1}}));
}

DensityMatrix ghz(int n, int d) {
  if (n < 2) throw ArgumentError("ghz: needs n >= 2");
  const Dims dims(static_cast<std::size_t>(n), d);
  check_dims(dims);
  CVector v = CVector::Zero(static_cast<Eigen::Index>(total_dim(dims)));
  for (int level = 0; level < d; ++level) {
    v(static_cast<Eigen::Index>(
        index_of(std::vector<int>(static_cast<std::size_t>(n), level), dims))) = 1.0;
  }
  return DensityMatrix::pure(dims, v);
}

DensityMatrix white_noise(const DensityMatrix& base, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ArgumentError("white_noise: x = " + std::to_string(x) + " outside [0, 1]");
  }
  const auto D = static_cast<Eigen::Index>(base.size());
  CMatrix m = x * base.matrix();
  m.diagonal().array() += (1.0 - x) / static_cast<double>(D);
  return {base.dims(), std::move(m)};
}

Baselines baselines(double x) {
  return {
      (std::sqrt(66.0) * x - 6.0) / 12.0,
      3.26 * x - (6.0 + std::sqrt(3.0)) / 3.0,
      9.0 * x * x - 4.0,
  };
}

const char* to_string(FamilyName name) {
  switch (name) {
    case FamilyName::w3_noise: return "w3_noise";
    case FamilyName::example2_noise: return "example2_noise";
    case FamilyName::ghz4_noise: return "ghz4_noise";
    case FamilyName::custom: return "custom";
  }
  return "?";
}

std::optional<FamilyName> parse_family_name(const std::string& text) {
  for (auto name : {FamilyName::w3_noise, FamilyName::example2_noise,
                    FamilyName::ghz4_noise, FamilyName::custom}) {
    if (text == to_string(name)) return name;
  }
  return std::nullopt;
}

namespace {

DensityMatrix named_base(FamilyName name) {
  switch (name) {
    case FamilyName::w3_noise: return w3();
    case FamilyName::example2_noise: return example2_phi();
    case FamilyName::ghz4_noise: return ghz(4, 2);
    case FamilyName::custom: break;
  }
  throw ArgumentError("family: custom families need a base state");
}

}  // namespace

FamilySpec::FamilySpec(FamilyName name) : FamilySpec(name, named_base(name)) {}

FamilySpec::FamilySpec(FamilyName name, DensityMatrix base)
    : name_(name), base_(std::move(base)) {}

FamilySpec FamilySpec::custom(DensityMatrix base) {
  require_valid(base);
  return {FamilyName::custom, std::move(base)};
}

DensityMatrix FamilySpec::state_at(double x) const { return white_noise(base_, x); }

DensityMatrix random_pure_state(const Dims& dims, std::mt19937_64& rng) {
  check_dims(dims);
  std::normal_distribution<double> normal;
  CVector v(static_cast<Eigen::Index>(total_dim(dims)));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = Complex(normal(rng), normal(rng));
  return DensityMatrix::pure(dims, v);
}

DensityMatrix random_mixed_state(const Dims& dims, int rank, std::mt19937_64& rng) {
  check_dims(dims);
  const auto D = static_cast<Eigen::Index>(total_dim(dims));
  if (rank < 1 || rank > D) {
    throw ArgumentError("random_mixed_state: rank must lie in 1..D");
  }
  std::normal_distribution<double> normal;
  CMatrix g(D, rank);
  for (Eigen::Index r = 0; r < D; ++r) {
    for (Eigen::Index c = 0; c < rank; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  }
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Symmetrize away rounding so the result is Hermitian to machine precision.
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return {dims, std::move(rho)};
}

}  // namespace weylgme
