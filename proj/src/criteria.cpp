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

#include "weylgme/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace weylgme {
namespace {

LabelSet parse_side(const std::string& text, int parties) {
  LabelSet labels;
  const bool compact = text.find(',') == std::string::npos && parties <= 9;
  if (compact) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw ArgumentError("partition: unexpected character in '" + text + "'");
      }
      labels.push_back(ch - '0');
    }
  } else {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() ||
          item.find_first_not_of("0123456789") != std::string::npos) {
        throw ArgumentError("partition: bad label '" + item + "' in '" + text + "'");
      }
      labels.push_back(std::stoi(item));
    }
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

// sqrt of the bound on ||T^(side)||^2 for one side of a split.
double side_factor(const Dims& dims, const LabelSet& labels) {
  if (labels.size() == 1) return std::sqrt(bound_single(dims[labels[0] - 1]));
  Dims sub;
  for (int s : labels) sub.push_back(dims[s - 1]);
  return std::sqrt(bound_multi(sub));
}

void require_multipartite(int parties, const char* what) {
  if (parties < 3) {
    throw ArgumentError(std::string(what) + ": needs at least three subsystems, got " +
                        std::to_string(parties));
  }
}

}  // namespace

Bipartition::Bipartition(int parties, LabelSet left)
    : parties_(parties), left_(std::move(left)) {
  if (parties_ < 2) throw ArgumentError("bipartition: needs at least two parties");
  check_labels(left_, parties_);
  if (static_cast<int>(left_.size()) > parties_ / 2) {
    throw ArgumentError("bipartition: left side " + format_labels(left_) +
                        " larger than n/2; put the smaller side on the left");
  }
  right_ = complement(left_, parties_);
}

Bipartition Bipartition::parse(const std::string& text, int parties) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos) {
    throw ArgumentError("partition: expected 'L|R', got '" + text + "'");
  }
  Bipartition bp(parties, parse_side(text.substr(0, bar), parties));
  const LabelSet right = parse_side(text.substr(bar + 1), parties);
  if (right != bp.right()) {
    throw ArgumentError("partition: right side of '" + text +
                        "' is not the complement of the left side");
  }
  return bp;
}

std::string Bipartition::name() const {
  const bool compact = parties_ <= 9;
  auto side = [&](const LabelSet& labels) {
    std::string out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (k && !compact) out += ',';
      out += std::to_string(labels[k]);
    }
    return out;
  };
  return side(left_) + "|" + side(right_);
}

std::vector<Bipartition> score_bipartitions(int parties) {
  std::vector<Bipartition> out;
  for (int size = 1; size <= parties / 2; ++size) {
    // Lexicographic k-subsets of 1..n.
    LabelSet pick(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) pick[k] = k + 1;
    while (true) {
      out.emplace_back(parties, pick);
      int k = size - 1;
      while (k >= 0 && pick[k] == parties - size + k + 1) --k;
      if (k < 0) break;
      ++pick[k];
      for (int m = k + 1; m < size; ++m) pick[m] = pick[m - 1] + 1;
    }
  }
  return out;
}

CMatrix s_matrix(const CorrelationTensor& t, const LabelSet& left,
                 const LabelSet& right) {
  return flatten_block(t, left, right);
}

NMatrix n_matrix(const CorrelationTensor& t, const Bipartition& bp, double alpha,
                 double beta) {
  if (bp.parties() != t.parties()) {
    throw ArgumentError("n_matrix: bipartition is for " +
                        std::to_string(bp.parties()) + " parties, state has " +
                        std::to_string(t.parties()));
  }
  CMatrix m = beta * s_matrix(t, bp.left(), bp.right());
  if (alpha != 0.0) {
    const CMatrix s0 = s_matrix(t, bp.left(), {bp.right().front()});
    m.leftCols(s0.cols()) += alpha * s0;
  }
  return {bp, alpha, beta, std::move(m)};
}

double trace_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0.0;
  const double cutoff = 1e-12 * sv.maxCoeff();
  double sum = 0.0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff) sum += sv(k);
  }
  return sum;
}

double bound_M(const Dims& dims, const Bipartition& bp, double alpha, double beta) {
  check_dims(dims);
  if (static_cast<int>(dims.size()) != bp.parties()) {
    throw ArgumentError("bound_M: bipartition does not match dims");
  }
  const double left = side_factor(dims, bp.left());
  const double first_right = std::sqrt(bound_single(dims[bp.right().front() - 1]));
  const double right = side_factor(dims, bp.right());
  return left * (std::abs(alpha) * first_right + std::abs(beta) * right);
}

double score_T(const CorrelationTensor& t, double alpha, double beta) {
  require_multipartite(t.parties(), "score_T");
  const auto splits = score_bipartitions(t.parties());
  double sum = 0.0;
  for (const auto& bp : splits) sum += trace_norm(n_matrix(t, bp, alpha, beta).matrix);
  return sum / static_cast<double>(splits.size());
}

double threshold_K(const Dims& dims, double alpha, double beta) {
  require_multipartite(static_cast<int>(dims.size()), "threshold_K");
  double best = 0.0;
  for (const auto& bp : score_bipartitions(static_cast<int>(dims.size()))) {
    best = std::max(best, bound_M(dims, bp, alpha, beta));
  }
  return best;
}

double threshold_J(const Dims& dims, double alpha, double beta) {
  require_multipartite(static_cast<int>(dims.size()), "threshold_J");
  const auto splits = score_bipartitions(static_cast<int>(dims.size()));
  double sum = 0.0;
  for (const auto& bp : splits) sum += bound_M(dims, bp, alpha, beta);
  return sum / static_cast<double>(splits.size());
}

const char* to_string(DetectionMode mode) {
  return mode == DetectionMode::general ? "general" : "perm-invariant";
}

const char* to_string(Verdict verdict) {
  return verdict == Verdict::gme_certified ? "GME-certified" : "inconclusive";
}

void require_permutation_invariant(const DensityMatrix& state, double tol) {
  const Dims& dims = state.dims();
  if (std::adjacent_find(dims.begin(), dims.end(), std::not_equal_to<>()) !=
      dims.end()) {
    std::string shown;
    for (int d : dims) shown += (shown.empty() ? "" : ",") + std::to_string(d);
    throw PreconditionError(
        "permutation-invariant mode needs equal subsystem dimensions, got (" +
        shown + ")");
  }
  const int n = state.parties();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int s = 0; s < n; ++s) perm[s] = s + 1;
      std::swap(perm[a - 1], perm[b - 1]);
      const double defect =
          (permute_subsystems(state, perm).matrix() - state.matrix()).cwiseAbs().maxCoeff();
      if (defect > tol) {
        std::ostringstream msg;
        msg << "state is not invariant under the subsystem transposition (" << a
            << " " << b << "): max deviation " << defect;
        throw PreconditionError(msg.str());
      }
    }
  }
}

CriterionReport detect(const DensityMatrix& state, double alpha, double beta,
                       DetectionMode mode) {
  require_valid(state);
  require_multipartite(state.parties(), "detect");
  if (mode == DetectionMode::permutation_invariant) {
    require_permutation_invariant(state);
  }
  const auto t = corr_tensor(state);

  CriterionReport report;
  report.dims = state.dims();
  report.alpha = alpha;
  report.beta = beta;
  report.mode = mode;
  double sum = 0.0;
  for (const auto& bp : score_bipartitions(state.parties())) {
    const double norm = trace_norm(n_matrix(t, bp, alpha, beta).matrix);
    const double bound = bound_M(state.dims(), bp, alpha, beta);
    report.records.push_back({bp, norm, bound, norm > bound});
    sum += norm;
  }
  report.score = sum / static_cast<double>(report.records.size());
  report.threshold = mode == DetectionMode::general
                         ? threshold_K(state.dims(), alpha, beta)
                         : threshold_J(state.dims(), alpha, beta);
  report.verdict = report.score > report.threshold ? Verdict::gme_certified
                                                   : Verdict::inconclusive;
  return report;
}

}  // namespace weylgme
