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

#include "weylgme/scan.hpp"

#include <algorithm>
#include <cmath>

namespace weylgme {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double bisect(const std::function<double(double)>& gap, double lo, double hi,
              double tol) {
  // Invariant: gap(lo) and gap(hi) have opposite signs (<= 0 vs > 0).
  const bool rising = gap(hi) > 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if ((gap(mid) > 0.0) == rising) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> grid_points(int grid) {
  if (grid < 2) throw ArgumentError("grid: needs at least 2 points");
  std::vector<double> xs(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) xs[k] = static_cast<double>(k) / (grid - 1);
  return xs;
}

}  // namespace

std::string to_string(const Criterion& criterion) {
  return std::visit(
      overloaded{
          [](const Bipartition& bp) { return "bipartition " + bp.name(); },
          [](const GmeGeneral&) { return std::string("gme_general"); },
          [](const GmePermInvariant&) { return std::string("gme_perm_invariant"); },
      },
      criterion);
}

ScanSample evaluate_criterion(const DensityMatrix& state, double alpha,
                              double beta, const Criterion& criterion, double x) {
  const auto t = corr_tensor(state);
  return std::visit(
      overloaded{
          [&](const Bipartition& bp) {
            return ScanSample{x, trace_norm(n_matrix(t, bp, alpha, beta).matrix),
                              bound_M(state.dims(), bp, alpha, beta)};
          },
          [&](const GmeGeneral&) {
            return ScanSample{x, score_T(t, alpha, beta),
                              threshold_K(state.dims(), alpha, beta)};
          },
          [&](const GmePermInvariant&) {
            return ScanSample{x, score_T(t, alpha, beta),
                              threshold_J(state.dims(), alpha, beta)};
          },
      },
      criterion);
}

CrossingSearch find_crossings(const std::function<double(double)>& gap, int grid,
                              double tol) {
  if (!(tol > 0.0)) throw ArgumentError("scan: tolerance must be positive");
  const auto xs = grid_points(grid);
  std::vector<double> gs;
  gs.reserve(xs.size());
  for (double x : xs) gs.push_back(gap(x));

  double scale = 0.0;
  for (double g : gs) scale = std::max(scale, std::abs(g));
  const double slack = 1e-12 * std::max(scale, 1.0);
  bool monotone = true;
  for (std::size_t k = 1; k < gs.size(); ++k) {
    if (gs[k] < gs[k - 1] - slack) monotone = false;
  }

  CrossingSearch result{std::nullopt, {}, monotone};
  if (monotone) {
    if (gs.back() <= 0.0) return result;
    if (gs.front() > 0.0) {
      result.threshold = 0.0;
      return result;
    }
    const double root = bisect(gap, 0.0, 1.0, tol);
    result.threshold = root;
    result.crossings.push_back(root);
    return result;
  }

  for (std::size_t k = 1; k < gs.size(); ++k) {
    if ((gs[k - 1] > 0.0) != (gs[k] > 0.0)) {
      result.crossings.push_back(bisect(gap, xs[k - 1], xs[k], tol));
    }
  }
  if (gs.back() > 0.0) {
    // Positive on the last cell: the criterion holds from the last crossing on.
    result.threshold = result.crossings.empty() ? 0.0 : result.crossings.back();
  }
  return result;
}

ScanResult scan(const FamilySpec& family, double alpha, double beta,
                const Criterion& criterion, double tol, int grid) {
  if (std::holds_alternative<GmePermInvariant>(criterion)) {
    require_permutation_invariant(family.base());
  }
  auto sample = [&](double x) {
    return evaluate_criterion(family.state_at(x), alpha, beta, criterion, x);
  };
  const auto search = find_crossings(
      [&](double x) {
        const auto s = sample(x);
        return s.score - s.bound;
      },
      grid, tol);

  ScanResult result{family.name(), alpha, beta, criterion, search.threshold,
                    search.crossings, search.monotone, {}};
  for (double x : grid_points(grid)) result.samples.push_back(sample(x));
  return result;
}

CurveTable emit_curve(const FamilySpec& family, double alpha, double beta,
                      const Criterion& criterion, int grid) {
  if (std::holds_alternative<GmePermInvariant>(criterion)) {
    require_permutation_invariant(family.base());
  }
  CurveTable table;
  table.header = {"x", "score", "bound", "f"};
  const bool w_family = family.name() == FamilyName::w3_noise;
  const bool ghz_family = family.name() == FamilyName::ghz4_noise;
  if (w_family) {
    table.header.push_back("g1");
    table.header.push_back("g2");
  }
  if (ghz_family) table.header.push_back("g3");

  for (double x : grid_points(grid)) {
    const auto s = evaluate_criterion(family.state_at(x), alpha, beta, criterion, x);
    std::vector<double> row{x, s.score, s.bound, s.score - s.bound};
    const auto g = baselines(x);
    if (w_family) {
      row.push_back(g.g1);
      row.push_back(g.g2);
    }
    if (ghz_family) row.push_back(g.g3);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace weylgme
