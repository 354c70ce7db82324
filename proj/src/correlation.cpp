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

#include "weylgme/correlation.hpp"

#include <algorithm>

#include "weylgme/weyl_basis.hpp"

namespace weylgme {
namespace {

// Row structure of A_u: row m has its single nonzero at column col[m] with
// value phase[m].
struct RowAction {
  std::vector<int> col;
  std::vector<Complex> phase;
};

RowAction row_action(int d, int u) {
  const int i = u / d, j = u % d;
  RowAction action;
  action.col.resize(static_cast<std::size_t>(d));
  action.phase.resize(static_cast<std::size_t>(d));
  for (int m = 0; m < d; ++m) {
    action.col[m] = (m + j) % d;
    action.phase[m] = root_of_unity(d, i * m);
  }
  return action;
}

// Per-subsystem tables of row actions, indexed [s][u].
std::vector<std::vector<RowAction>> action_tables(const Dims& dims) {
  std::vector<std::vector<RowAction>> tables;
  for (int d : dims) {
    std::vector<RowAction> per_u;
    for (int u = 0; u < d * d; ++u) per_u.push_back(row_action(d, u));
    tables.push_back(std::move(per_u));
  }
  return tables;
}

// Advances a row-major multi-index with per-axis ranges [lo, hi); returns
// false after the last one.
bool next_index(std::vector<int>& index, const std::vector<int>& lo,
                const std::vector<int>& hi) {
  for (std::size_t s = index.size(); s-- > 0;) {
    if (++index[s] < hi[s]) return true;
    index[s] = lo[s];
  }
  return false;
}

std::vector<int> extents(const Dims& dims) {
  std::vector<int> out;
  for (int d : dims) out.push_back(d * d);
  return out;
}

// Column and phase of the tensor-product operator A_{u1} (x) ... (x) A_{un}
// for the row with digits `row_digits`.
std::pair<std::size_t, Complex> product_entry(
    const std::vector<std::vector<RowAction>>& tables, const Dims& dims,
    const std::vector<int>& u, const std::vector<int>& row_digits) {
  std::size_t col = 0;
  Complex phase = 1.0;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    const RowAction& a = tables[s][static_cast<std::size_t>(u[s])];
    col = col * static_cast<std::size_t>(dims[s]) +
          static_cast<std::size_t>(a.col[row_digits[s]]);
    phase *= a.phase[row_digits[s]];
  }
  return {col, phase};
}

}  // namespace

CorrelationTensor::CorrelationTensor(Dims dims, std::vector<Complex> coeffs)
    : dims_(std::move(dims)), coeffs_(std::move(coeffs)) {
  check_dims(dims_);
  std::size_t expected = 1;
  for (int d : dims_) expected *= static_cast<std::size_t>(d * d);
  if (coeffs_.size() != expected) {
    throw ArgumentError("correlation tensor: expected " +
                        std::to_string(expected) + " coefficients, got " +
                        std::to_string(coeffs_.size()));
  }
}

std::size_t CorrelationTensor::flat_index(std::span<const int> index) const {
  if (index.size() != dims_.size()) {
    throw ArgumentError("correlation tensor: index rank mismatch");
  }
  std::size_t flat = 0;
  for (std::size_t s = 0; s < dims_.size(); ++s) {
    const int ext = dims_[s] * dims_[s];
    if (index[s] < 0 || index[s] >= ext) {
      throw ArgumentError("correlation tensor: index out of range");
    }
    flat = flat * static_cast<std::size_t>(ext) + static_cast<std::size_t>(index[s]);
  }
  return flat;
}

Complex CorrelationTensor::at(std::span<const int> index) const {
  return coeffs_[flat_index(index)];
}

CorrelationTensor corr_tensor(const DensityMatrix& state) {
  // t_u = tr(rho B_u^dagger) with B_u^dagger = prod_s w_s^{p_s} B_{u'},
  // u'_s the dagger index. tr(rho C) = sum_r C(r, col(r)) rho(col(r), r).
  const Dims& dims = state.dims();
  const std::size_t n = dims.size();
  const auto tables = action_tables(dims);
  const std::size_t D = state.size();
  std::vector<std::vector<int>> row_digits(D);
  for (std::size_t r = 0; r < D; ++r) row_digits[r] = digits_of(r, dims);

  const CMatrix& rho = state.matrix();
  const auto hi = extents(dims);
  const std::vector<int> lo(n, 0);
  std::vector<int> u(n, 0), u_dag(n, 0);
  std::vector<Complex> coeffs;
  do {
    Complex prefactor = 1.0;
    for (std::size_t s = 0; s < n; ++s) {
      const auto dag = pauli_dagger_index(dims[s], u[s]);
      u_dag[s] = dag.index;
      prefactor *= root_of_unity(dims[s], dag.phase_exponent);
    }
    Complex sum = 0.0;
    for (std::size_t r = 0; r < D; ++r) {
      const auto [c, phase] = product_entry(tables, dims, u_dag, row_digits[r]);
      sum += phase * rho(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r));
    }
    coeffs.push_back(prefactor * sum);
  } while (next_index(u, lo, hi));
  return {dims, std::move(coeffs)};
}

DensityMatrix reconstruct(const CorrelationTensor& t) {
  const Dims& dims = t.dims();
  const std::size_t n = dims.size();
  const auto tables = action_tables(dims);
  const std::size_t D = total_dim(dims);
  std::vector<std::vector<int>> row_digits(D);
  for (std::size_t r = 0; r < D; ++r) row_digits[r] = digits_of(r, dims);

  CMatrix rho = CMatrix::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
  const auto hi = extents(dims);
  const std::vector<int> lo(n, 0);
  std::vector<int> u(n, 0);
  std::size_t flat = 0;
  do {
    const Complex coeff = t.coeffs()[flat++];
    if (coeff == Complex(0.0, 0.0)) continue;
    for (std::size_t r = 0; r < D; ++r) {
      const auto [c, phase] = product_entry(tables, dims, u, row_digits[r]);
      rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += coeff * phase;
    }
  } while (next_index(u, lo, hi));
  rho /= static_cast<double>(D);
  return {dims, std::move(rho)};
}

CMatrix flatten_block(const CorrelationTensor& t, const LabelSet& left,
                      const LabelSet& right) {
  const int n = t.parties();
  check_labels(left, n);
  check_labels(right, n);
  for (int s : left) {
    if (std::find(right.begin(), right.end(), s) != right.end()) {
      throw ArgumentError("block: label sets " + format_labels(left) + " and " +
                          format_labels(right) + " overlap");
    }
  }
  const Dims& dims = t.dims();
  auto side_extent = [&](const LabelSet& labels) {
    Eigen::Index size = 1;
    for (int s : labels) size *= dims[s - 1] * dims[s - 1] - 1;
    return size;
  };
  auto side_ranges = [&](const LabelSet& labels, std::vector<int>& lo,
                         std::vector<int>& hi) {
    lo.assign(labels.size(), 1);
    hi.clear();
    for (int s : labels) hi.push_back(dims[s - 1] * dims[s - 1]);
  };

  CMatrix out(side_extent(left), side_extent(right));
  std::vector<int> full(static_cast<std::size_t>(n), 0);
  std::vector<int> lo_l, hi_l, lo_r, hi_r;
  side_ranges(left, lo_l, hi_l);
  side_ranges(right, lo_r, hi_r);
  std::vector<int> ul = lo_l;
  Eigen::Index row = 0;
  do {
    for (std::size_t k = 0; k < left.size(); ++k) full[left[k] - 1] = ul[k];
    std::vector<int> ur = lo_r;
    Eigen::Index col = 0;
    do {
      for (std::size_t k = 0; k < right.size(); ++k) full[right[k] - 1] = ur[k];
      out(row, col++) = t.at(full);
    } while (next_index(ur, lo_r, hi_r));
    ++row;
  } while (next_index(ul, lo_l, hi_l));
  return out;
}

SubsetVector subset_vector(const CorrelationTensor& t, const LabelSet& labels) {
  const int n = t.parties();
  check_labels(labels, n);
  const Dims& dims = t.dims();
  std::vector<int> lo(labels.size(), 1), hi;
  Eigen::Index size = 1;
  for (int s : labels) {
    hi.push_back(dims[s - 1] * dims[s - 1]);
    size *= dims[s - 1] * dims[s - 1] - 1;
  }
  CVector entries(size);
  std::vector<int> full(static_cast<std::size_t>(n), 0);
  std::vector<int> u = lo;
  Eigen::Index k = 0;
  do {
    for (std::size_t s = 0; s < labels.size(); ++s) full[labels[s] - 1] = u[s];
    entries(k++) = t.at(full);
  } while (next_index(u, lo, hi));
  return {labels, std::move(entries)};
}

double bound_single(int d) {
  check_dims({d});
  return d - 1.0;
}

double bound_pair(int d1, int d2) {
  check_dims({d1, d2});
  const double a = d1, b = d2;
  return a * b * (1.0 - 1.0 / (a * a) - 1.0 / (b * b)) + 1.0;
}

double bound_multi(const Dims& dims) {
  if (dims.size() < 2) {
    throw ArgumentError("bound_multi: needs at least two subsystems");
  }
  check_dims(dims);
  const double n = static_cast<double>(dims.size());
  double product = 1.0, inverse_squares = 0.0;
  for (int d : dims) {
    product *= d;
    inverse_squares += 1.0 / (static_cast<double>(d) * d);
  }
  return (product * (n - 1.0 - inverse_squares) + 1.0) / (n - 1.0);
}

}  // namespace weylgme
