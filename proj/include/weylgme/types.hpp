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

#ifndef WEYLGME_TYPES_HPP
#define WEYLGME_TYPES_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace weylgme {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Subsystem dimensions (d1, ..., dn), each >= 2.
using Dims = std::vector<int>;

/// Sorted set of 1-based subsystem labels.
using LabelSet = std::vector<int>;

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state or matrix that fails the density-matrix checks.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's stated precondition on its input state does
/// not hold (e.g. permutation invariance).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Product of all entries of `dims`.
std::size_t total_dim(const Dims& dims);

/// Throws ArgumentError unless every dimension is >= 2 and the list is nonempty.
void check_dims(const Dims& dims);

/// Throws ArgumentError unless `labels` is nonempty, strictly ascending and
/// within 1..n.
void check_labels(const LabelSet& labels, int n);

/// Labels 1..n not in `labels`, ascending.
LabelSet complement(const LabelSet& labels, int n);

std::string format_labels(const LabelSet& labels);

}  // namespace weylgme

#endif  // WEYLGME_TYPES_HPP
