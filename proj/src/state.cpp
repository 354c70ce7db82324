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

#include "weylgme/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace weylgme {

std::size_t total_dim(const Dims& dims) {
  std::size_t total = 1;
  for (int d : dims) total *= static_cast<std::size_t>(d);
  return total;
}

void check_dims(const Dims& dims) {
  if (dims.empty()) throw ArgumentError("dims: empty dimension list");
  for (int d : dims) {
    if (d < 2) {
      throw ArgumentError("dims: every subsystem dimension must be >= 2, got " +
                          std::to_string(d));
    }
  }
}

void check_labels(const LabelSet& labels, int n) {
  if (labels.empty()) throw ArgumentError("labels: empty label set");
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] < 1 || labels[k] > n) {
      throw ArgumentError("labels: " + std::to_string(labels[k]) +
                          " outside 1.." + std::to_string(n));
    }
    if (k > 0 && labels[k] <= labels[k - 1]) {
      throw ArgumentError("labels: " + format_labels(labels) +
                          " is not strictly ascending");
    }
  }
}

LabelSet complement(const LabelSet& labels, int n) {
  LabelSet out;
  for (int s = 1; s <= n; ++s) {
    if (std::find(labels.begin(), labels.end(), s) == labels.end()) {
      out.push_back(s);
    }
  }
  return out;
}

std::string format_labels(const LabelSet& labels) {
  std::string out = "{";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(labels[k]);
  }
  return out + "}";
}

std::vector<int> digits_of(std::size_t index, const Dims& dims) {
  std::vector<int> digits(dims.size());
  for (std::size_t s = dims.size(); s-- > 0;) {
    const auto d = static_cast<std::size_t>(dims[s]);
    digits[s] = static_cast<int>(index % d);
    index /= d;
  }
  return digits;
}

std::size_t index_of(const std::vector<int>& digits, const Dims& dims) {
  std::size_t index = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    index = index * static_cast<std::size_t>(dims[s]) +
            static_cast<std::size_t>(digits[s]);
  }
  return index;
}

DensityMatrix::DensityMatrix(Dims dims, CMatrix entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  check_dims(dims_);
  const auto D = static_cast<Eigen::Index>(total_dim(dims_));
  if (entries_.rows() != entries_.cols()) {
    throw ArgumentError("density matrix: matrix is not square");
  }
  if (entries_.rows() != D) {
    throw ArgumentError("density matrix: matrix size " +
                        std::to_string(entries_.rows()) +
                        " does not match product of dims " + std::to_string(D));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(const Dims& dims) {
  check_dims(dims);
  const auto D = static_cast<Eigen::Index>(total_dim(dims));
  return {dims, CMatrix::Identity(D, D) / static_cast<double>(D)};
}

DensityMatrix DensityMatrix::pure(const Dims& dims, const CVector& ket) {
  check_dims(dims);
  if (ket.size() != static_cast<Eigen::Index>(total_dim(dims))) {
    throw ArgumentError("pure state: ket length does not match dims");
  }
  const double norm = ket.norm();
  if (norm == 0.0) throw ArgumentError("pure state: zero ket");
  const CVector v = ket / norm;
  return {dims, v * v.adjoint()};
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  out << "hermiticity defect " << hermiticity_defect
      << (hermitian ? " (ok)" : " (FAIL)") << ", trace defect " << trace_defect
      << (unit_trace ? " (ok)" : " (FAIL)") << ", min eigenvalue "
      << min_eigenvalue << (positive ? " (ok)" : " (FAIL)");
  return out.str();
}

ValidationReport validate(const DensityMatrix& state,
                          const ValidationTolerances& tol) {
  const CMatrix& m = state.matrix();
  ValidationReport report;
  report.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  report.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
  const CMatrix herm = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.hermitian = report.hermiticity_defect <= tol.hermiticity;
  report.unit_trace = report.trace_defect <= tol.trace;
  report.positive = report.min_eigenvalue >= tol.eigenvalue_floor;
  return report;
}

void require_valid(const DensityMatrix& state, const ValidationTolerances& tol) {
  const auto report = validate(state, tol);
  if (!report.ok()) {
    throw ValidationError("invalid density matrix: " + report.describe());
  }
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const CMatrix& x = a.matrix();
  const CMatrix& y = b.matrix();
  CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      out.block(r * y.rows(), c * y.cols(), y.rows(), y.cols()) = x(r, c) * y;
    }
  }
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return {std::move(dims), std::move(out)};
}

DensityMatrix mix(const MixtureSpec& spec) {
  if (spec.components.empty()) throw ArgumentError("mix: no components");
  const Dims& dims = spec.components.front().second.dims();
  double total = 0.0;
  CMatrix acc = CMatrix::Zero(spec.components.front().second.matrix().rows(),
                              spec.components.front().second.matrix().cols());
  for (const auto& [weight, state] : spec.components) {
    if (!(weight > 0.0 && weight <= 1.0)) {
      throw ArgumentError("mix: weight " + std::to_string(weight) +
                          " outside (0, 1]");
    }
    if (state.dims() != dims) throw ArgumentError("mix: components differ in dims");
    total += weight;
    acc += weight * state.matrix();
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ArgumentError("mix: weights sum to " + std::to_string(total) +
                        ", expected 1");
  }
  return {dims, std::move(acc)};
}

DensityMatrix partial_trace(const DensityMatrix& state, const LabelSet& keep) {
  const int n = state.parties();
  check_labels(keep, n);
  const Dims& dims = state.dims();
  const LabelSet traced = complement(keep, n);

  Dims kept_dims, traced_dims;
  for (int s : keep) kept_dims.push_back(dims[s - 1]);
  for (int s : traced) traced_dims.push_back(dims[s - 1]);
  const std::size_t K = total_dim(kept_dims);
  const std::size_t T = traced.empty() ? 1 : total_dim(traced_dims);

  // Full index for (kept digits, traced digits) pairs.
  std::vector<std::size_t> full(K * T);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < K; ++k) {
    const auto kd = digits_of(k, kept_dims);
    for (std::size_t s = 0; s < keep.size(); ++s) digits[keep[s] - 1] = kd[s];
    for (std::size_t t = 0; t < T; ++t) {
      if (!traced.empty()) {
        const auto td = digits_of(t, traced_dims);
        for (std::size_t s = 0; s < traced.size(); ++s) digits[traced[s] - 1] = td[s];
      }
      full[k * T + t] = index_of(digits, dims);
    }
  }

  const CMatrix& m = state.matrix();
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(K));
  for (std::size_t r = 0; r < K; ++r) {
    for (std::size_t c = 0; c < K; ++c) {
      Complex sum = 0.0;
      for (std::size_t t = 0; t < T; ++t) {
        sum += m(static_cast<Eigen::Index>(full[r * T + t]),
                 static_cast<Eigen::Index>(full[c * T + t]));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = sum;
    }
  }
  return {std::move(kept_dims), std::move(out)};
}

double purity(const DensityMatrix& state) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return (state.matrix().cwiseProduct(state.matrix().transpose())).sum().real();
}

DensityMatrix permute_subsystems(const DensityMatrix& state,
                                 const std::vector<int>& perm) {
  const int n = state.parties();
  if (static_cast<int>(perm.size()) != n) {
    throw ArgumentError("permute: permutation length does not match parties");
  }
  LabelSet sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (int s = 0; s < n; ++s) {
    if (sorted[static_cast<std::size_t>(s)] != s + 1) {
      throw ArgumentError("permute: not a permutation of 1..n");
    }
  }
  const Dims& dims = state.dims();
  Dims out_dims(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) out_dims[s] = dims[perm[s] - 1];

  const std::size_t D = state.size();
  std::vector<Eigen::Index> target(D);
  std::vector<int> out_digits(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < D; ++r) {
    const auto a = digits_of(r, dims);
    for (int s = 0; s < n; ++s) out_digits[s] = a[perm[s] - 1];
    target[r] = static_cast<Eigen::Index>(index_of(out_digits, out_dims));
  }
  const CMatrix& m = state.matrix();
  CMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < D; ++r) {
    for (std::size_t c = 0; c < D; ++c) {
      out(target[r], target[c]) =
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return {std::move(out_dims), std::move(out)};
}

}  // namespace weylgme
