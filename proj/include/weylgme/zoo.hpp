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

#ifndef WEYLGME_ZOO_HPP
#define WEYLGME_ZOO_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "weylgme/state.hpp"

namespace weylgme {

/// Three-qubit W state (|001> + |010> + |100>)/sqrt(3).
DensityMatrix w3();

/// Qutrit-qutrit-qubit state
/// [(|10> + |21>)|0> + (|00> + |11> + |22>)|1>] / sqrt(5).
DensityMatrix example2_phi();

/// (|0..0> + |1..1> + ... + |d-1..d-1>)/sqrt(d) on n subsystems of dimension d.
DensityMatrix ghz(int n, int d = 2);

/// x * base + (1 - x) I / D for x in [0, 1].
DensityMatrix white_noise(const DensityMatrix& base, double x);

/// Comparison lines from earlier correlation-tensor criteria: g1, g2 for the
/// noisy W state and g3 for the noisy four-qubit GHZ state. Positive values
/// mean the respective criterion detects entanglement.
struct Baselines {
  double g1;
  double g2;
  double g3;
};

Baselines baselines(double x);

enum class FamilyName { w3_noise, example2_noise, ghz4_noise, custom };

const char* to_string(FamilyName name);
std::optional<FamilyName> parse_family_name(const std::string& text);

/// White-noise family rho(x) = x * base + (1 - x) I / D.
class FamilySpec {
 public:
  /// One of the named families; `custom` needs the base-state overload.
  explicit FamilySpec(FamilyName name);
  static FamilySpec custom(DensityMatrix base);

  FamilyName name() const { return name_; }
  const DensityMatrix& base() const { return base_; }
  DensityMatrix state_at(double x) const;

 private:
  FamilySpec(FamilyName name, DensityMatrix base);
  FamilyName name_;
  DensityMatrix base_;
};

/// Haar-random pure state from a normalized complex Gaussian vector.
DensityMatrix random_pure_state(const Dims& dims, std::mt19937_64& rng);

/// G G^dagger / tr, G a D x rank complex Gaussian matrix.
DensityMatrix random_mixed_state(const Dims& dims, int rank,
                                 std::mt19937_64& rng);

}  // namespace weylgme

#endif  // WEYLGME_ZOO_HPP
