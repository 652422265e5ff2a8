// Copyright 2026 The jamgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jamgame/stoch_game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "jamgame/errors.h"
#include "jamgame/matrix_game.h"

namespace jamgame {
namespace {

constexpr int kMaxOracleIterations = 10'000'000;
constexpr double kProbabilitySumTolerance = 1e-10;

// A candidate equilibrium in sorted-cost positions.
struct SortedSolution {
  double value = 0.0;
  std::vector<double> p;
  std::vector<double> q;
  SolutionCase case_label = SolutionCase::kA;
  int support_m = 0;
  std::optional<int> k_index;
};

std::vector<int> AttackableColumns(const CostVector& costs) {
  if (costs.attackable()) return *costs.attackable();
  std::vector<int> cols(costs.size());
  std::iota(cols.begin(), cols.end(), 0);
  return cols;
}

Eigen::MatrixXd RestrictedPayoff(const CostVector& costs,
                                 const GameParameters& params, double v,
                                 const std::vector<int>& cols) {
  const Eigen::MatrixXd full = PayoffMatrix(costs, params, v);
  Eigen::MatrixXd restricted(full.rows(), static_cast<Eigen::Index>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    restricted.col(static_cast<Eigen::Index>(c)) = full.col(cols[c]);
  }
  return restricted;
}

std::optional<SortedSolution> CaseA(const std::vector<double>& l,
                                    const GameParameters& params) {
  const int n = static_cast<int>(l.size());
  const double c = params.hiding_cost();
  const double g = params.gamma();
  // Column j >= 2 stays priced at >= l_1 only while p_j stays below its bound;
  // an equilibrium with V = l_1 exists iff the bounds can cover a full
  // distribution.
  std::vector<double> bound(n, 0.0);
  double total = 0.0;
  for (int i = 1; i < n; ++i) {
    const double denom = l[i] - c - g * l[0];
    if (!(denom > 0.0)) return std::nullopt;
    bound[i] = (l[i] - l[0]) / denom;
    total += bound[i];
  }
  if (n < 2 || total < 1.0) return std::nullopt;

  SortedSolution s;
  s.value = l[0];
  s.p.assign(n, 0.0);
  for (int i = 1; i < n; ++i) s.p[i] = bound[i] / total;
  s.q.assign(n, 0.0);
  s.q[0] = 1.0;
  s.case_label = SolutionCase::kA;
  s.support_m = 0;
  return s;
}

SortedSolution CaseB(const std::vector<double>& l,
                     const GameParameters& params) {
  const int n = static_cast<int>(l.size());
  SortedSolution s;
  s.value = params.HidingValue();
  s.p.assign(n, 0.0);
  s.q.assign(n, 0.0);
  s.p[0] = 1.0;
  s.q[0] = 1.0;
  s.case_label = SolutionCase::kB;
  s.support_m = 1;
  return s;
}

double SolveSupportEquation(const std::vector<double>& l,
                            const GameParameters& params,
                            const SupportAnalysis& analysis) {
  const int m = analysis.m;
  const double c = params.hiding_cost();
  if (params.gamma() == 0.0) {
    // F_m is affine in v when gamma = 0.
    double numerator = 1.0;
    double denominator = 0.0;
    for (int i = 0; i < m; ++i) {
      numerator += l[i] / (c - l[i]);
      denominator += 1.0 / (c - l[i]);
    }
    return numerator / denominator;
  }
  double lo = analysis.bracket_lo;
  double hi = analysis.bracket_hi;
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (SupportEquation(l, params, m, mid) <= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double err_lo = std::abs(SupportEquation(l, params, m, lo) - 1.0);
  const double err_hi = std::abs(SupportEquation(l, params, m, hi) - 1.0);
  return err_lo <= err_hi ? lo : hi;
}

SortedSolution CaseC(const std::vector<double>& l, const GameParameters& params,
                     const SupportAnalysis& analysis) {
  const int n = static_cast<int>(l.size());
  const int m = analysis.m;
  const double c = params.hiding_cost();
  const double g = params.gamma();
  const double v = SolveSupportEquation(l, params, analysis);

  SortedSolution s;
  s.value = v;
  s.p.assign(n, 0.0);
  s.q.assign(n, 0.0);
  double p_total = 0.0;
  double q_total = 0.0;
  for (int i = 0; i < m; ++i) {
    const double denom = c + g * v - l[i];
    s.p[i] = std::max(0.0, (v - l[i]) / denom);
    s.q[i] = 1.0 / denom;
    p_total += s.p[i];
    q_total += s.q[i];
  }
  for (int i = 0; i < m; ++i) {
    s.p[i] /= p_total;
    s.q[i] /= q_total;
  }
  s.case_label = SolutionCase::kC;
  s.support_m = m;
  s.k_index = analysis.k;
  return s;
}

bool IsDistribution(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x) && x >= 0.0; });
}

std::optional<SortedSolution> ClosedFormCases(const std::vector<double>& l,
                                              const GameParameters& params) {
  const int n = static_cast<int>(l.size());
  const double threshold = params.HidingValue();
  if (threshold < l[0]) return CaseA(l, params);
  if (n == 1 || threshold < l[1]) return CaseB(l, params);
  auto analysis = AnalyzeSupport(l, params);
  if (!analysis) return std::nullopt;
  return CaseC(l, params, *analysis);
}

std::optional<SortedSolution> ClosedFormSorted(const std::vector<double>& l,
                                               const GameParameters& params) {
  auto s = ClosedFormCases(l, params);
  if (s && (!std::isfinite(s->value) || !IsDistribution(s->p) ||
            !IsDistribution(s->q))) {
    return std::nullopt;
  }
  return s;
}

int CommonSupport(const std::vector<double>& p, const std::vector<double>& q) {
  int m = 0;
  for (size_t i = 0; i < p.size(); ++i) m += (p[i] > 0.0 && q[i] > 0.0);
  return m;
}

void CheckProbabilityVector(const std::vector<double>& v, int n,
                            const char* name) {
  if (static_cast<int>(v.size()) != n) {
    throw std::invalid_argument(std::string(name) + ": expected length " +
                                std::to_string(n));
  }
  double total = 0.0;
  for (double x : v) {
    if (!std::isfinite(x) || x < 0.0) {
      throw std::invalid_argument(std::string(name) +
                                  ": entries must be finite and >= 0");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
    throw std::invalid_argument(std::string(name) + ": must sum to 1");
  }
}

}  // namespace

GameParameters::GameParameters(double hiding_cost, double gamma,
                               std::optional<double> alpha,
                               std::optional<double> delta)
    : hiding_cost_(hiding_cost), gamma_(gamma), alpha_(alpha), delta_(delta) {
  if (!std::isfinite(hiding_cost_) || hiding_cost_ < 0.0) {
    throw std::invalid_argument("C_h: hiding cost must be finite and >= 0");
  }
  if (!(gamma_ >= 0.0 && gamma_ < 1.0)) {
    throw std::invalid_argument("gamma: continuation probability must lie in "
                                "[0, 1)");
  }
}

GameParameters GameParameters::FromGamma(double hiding_cost, double gamma) {
  return GameParameters(hiding_cost, gamma, std::nullopt, std::nullopt);
}

GameParameters GameParameters::FromDetection(double hiding_cost, double alpha,
                                             double delta) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha: must lie in [0, 1]");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("delta: must lie in [0, 1]");
  }
  return GameParameters(hiding_cost, (1.0 - alpha) * delta, alpha, delta);
}

GameParameters GameParameters::WithHidingCost(double hiding_cost) const {
  return GameParameters(hiding_cost, gamma_, alpha_, delta_);
}

GameParameters GameParameters::WithGamma(double gamma) const {
  return GameParameters(hiding_cost_, gamma, std::nullopt, std::nullopt);
}

std::string_view CaseLabel(SolutionCase c) {
  switch (c) {
    case SolutionCase::kA:
      return "A";
    case SolutionCase::kB:
      return "B";
    case SolutionCase::kC:
      return "C";
    case SolutionCase::kOracleFallback:
      return "OracleFallback";
  }
  return "?";
}

std::optional<SolutionCase> ParseCaseLabel(std::string_view label) {
  for (auto c : {SolutionCase::kA, SolutionCase::kB, SolutionCase::kC,
                 SolutionCase::kOracleFallback}) {
    if (CaseLabel(c) == label) return c;
  }
  return std::nullopt;
}

Eigen::MatrixXd PayoffMatrix(const CostVector& costs,
                             const GameParameters& params, double v) {
  const int n = costs.size();
  Eigen::MatrixXd a(n, n);
  const double diagonal = params.hiding_cost() + params.gamma() * v;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = i == j ? diagonal : costs[j];
  }
  return a;
}

GameSolution SolveOracle(const CostVector& costs, const GameParameters& params,
                         double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("oracle tolerance must be > 0");
  const double g = params.gamma();
  const std::vector<int> cols = AttackableColumns(costs);

  double v = 0.0;
  int iterations = 0;
  while (true) {
    const double next =
        SolveMatrixGame(RestrictedPayoff(costs, params, v, cols)).value;
    const double step = std::abs(next - v);
    v = next;
    ++iterations;
    if (g * step <= tol * (1.0 - g)) break;
    // Below this the iteration is limited by rounding, not contraction.
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() *
                    std::max(1.0, std::abs(v))) {
      break;
    }
    if (iterations >= kMaxOracleIterations) {
      throw SolverError("value iteration did not converge within " +
                        std::to_string(kMaxOracleIterations) + " steps");
    }
  }

  const MatrixGameSolution stage =
      SolveMatrixGame(RestrictedPayoff(costs, params, v, cols));
  GameSolution sol;
  sol.value = stage.value;
  sol.p = stage.row_strategy;
  sol.q.assign(costs.size(), 0.0);
  for (size_t c = 0; c < cols.size(); ++c) sol.q[cols[c]] = stage.col_strategy[c];
  sol.case_label = SolutionCase::kOracleFallback;
  sol.support_m = CommonSupport(sol.p, sol.q);
  sol.iterations = iterations;
  sol.residual = VerifyShapley(costs, params, sol).max_violation;
  return sol;
}

GameSolution SolveClosedForm(const CostVector& costs,
                             const GameParameters& params,
                             const SolverOptions& options) {
  if (costs.AllAttackable()) {
    const AscendingView view = MakeAscendingView(costs);
    if (auto sorted = ClosedFormSorted(view.sorted, params)) {
      GameSolution sol;
      sol.value = sorted->value;
      sol.p = view.ToOriginal(sorted->p);
      sol.q = view.ToOriginal(sorted->q);
      sol.case_label = sorted->case_label;
      sol.support_m = sorted->support_m;
      sol.k_index = sorted->k_index;
      sol.residual = VerifyShapley(costs, params, sol).max_violation;
      if (sol.residual <= options.certification_tol) return sol;
    }
  }
  return SolveOracle(costs, params, options.oracle_tol);
}

GameSolution SolveOneShot(const CostVector& costs, double hiding_cost,
                          const SolverOptions& options) {
  return SolveClosedForm(costs, GameParameters::FromGamma(hiding_cost, 0.0),
                         options);
}

double SupportEquation(const std::vector<double>& sorted_costs,
                       const GameParameters& params, int m, double v) {
  const double diagonal = params.hiding_cost() + params.gamma() * v;
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    total += (v - sorted_costs[i]) / (diagonal - sorted_costs[i]);
  }
  return total;
}

std::optional<SupportAnalysis> AnalyzeSupport(
    const std::vector<double>& sorted_costs, const GameParameters& params) {
  const auto& l = sorted_costs;
  const int n = static_cast<int>(l.size());
  const double threshold = params.HidingValue();
  if (n < 2 || threshold < l[0] || threshold < l[1]) return std::nullopt;
  // A cost sitting exactly on C_h / (1 - gamma) matches no case.
  for (int i = 1; i < n; ++i) {
    if (l[i] == threshold) return std::nullopt;
  }

  SupportAnalysis a;
  a.k = static_cast<int>(
      std::count_if(l.begin(), l.end(), [&](double x) { return x < threshold; }));
  // Rounding can put a cost just below the threshold while its diagonal
  // margin C_h + gamma l_i - l_i is already zero.
  for (int i = 0; i < a.k; ++i) {
    if (!(params.hiding_cost() + params.gamma() * l[i] - l[i] > 0.0)) {
      return std::nullopt;
    }
  }
  a.phi.resize(a.k);
  for (int s = 1; s <= a.k; ++s) {
    a.phi[s - 1] = SupportEquation(l, params, s, l[s - 1]);
  }
  a.m = 1;
  for (int s = 1; s <= a.k; ++s) {
    if (a.phi[s - 1] <= 1.0) a.m = s;
  }
  a.bracket_lo = l[a.m - 1];
  a.bracket_hi = a.m < n ? std::min(l[a.m], threshold) : threshold;
  return a;
}

IterationResult ValueByIteration(const CostVector& costs,
                                 const GameParameters& params, double tol,
                                 int max_iterations) {
  const double g = params.gamma();
  const double c = params.hiding_cost();
  if (!(g > 0.0)) {
    throw std::invalid_argument("value iteration needs gamma in (0, 1)");
  }
  IterationResult result;
  double x = c;
  result.trace.push_back(x);
  while (true) {
    const double next = g * SolveOneShot(costs, x).value + c;
    result.trace.push_back(next);
    ++result.iterations;
    const double step = std::abs(next - x);
    x = next;
    if (step <= tol) break;
    if (result.iterations >= max_iterations) {
      throw SolverError("fixed-point iteration exceeded " +
                        std::to_string(max_iterations) +
                        " steps; last step " + std::to_string(step));
    }
  }
  result.value = (x - c) / g;
  return result;
}

double ValueByBisection(const CostVector& costs, const GameParameters& params,
                        double tol) {
  const double g = params.gamma();
  const double c = params.hiding_cost();
  if (!(g > 0.0)) throw std::invalid_argument("bisection needs gamma in (0, 1)");
  auto residual = [&](double x) {
    return (x - c) / g - SolveOneShot(costs, x).value;
  };
  const double largest =
      *std::max_element(costs.values().begin(), costs.values().end());
  double lo = c;
  double hi = c + g * std::max(largest, params.HidingValue()) + 1.0;
  const double f_lo = residual(lo);
  const double f_hi = residual(hi);
  if (!(f_lo <= 0.0 && f_hi > 0.0)) {
    throw SolverError("bisection bracket failure: g(" + std::to_string(lo) +
                      ") = " + std::to_string(f_lo) + ", g(" +
                      std::to_string(hi) + ") = " + std::to_string(f_hi));
  }
  for (int it = 0; it < 2000 && hi - lo > g * tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (residual(mid) <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (0.5 * (lo + hi) - c) / g;
}

ShapleyReport VerifyShapley(const CostVector& costs,
                            const GameParameters& params,
                            const GameSolution& sol, double tol) {
  const int n = costs.size();
  CheckProbabilityVector(sol.p, n, "p");
  CheckProbabilityVector(sol.q, n, "q");

  const double v = sol.value;
  const double diagonal = params.hiding_cost() + params.gamma() * v;
  double expected_cost = 0.0;
  for (int j = 0; j < n; ++j) expected_cost += costs[j] * sol.q[j];

  ShapleyReport report;
  report.row_violation.resize(n);
  report.col_violation.resize(n);
  for (int i = 0; i < n; ++i) {
    const double row = (diagonal - costs[i]) * sol.q[i] + expected_cost;
    report.row_violation[i] =
        sol.p[i] > 0.0 ? std::abs(row - v) : std::max(0.0, row - v);
  }
  for (int j = 0; j < n; ++j) {
    if (!costs.IsAttackable(j)) {
      report.col_violation[j] = sol.q[j];
      continue;
    }
    const double col = (diagonal - costs[j]) * sol.p[j] + costs[j];
    report.col_violation[j] =
        sol.q[j] > 0.0 ? std::abs(col - v) : std::max(0.0, v - col);
  }
  report.max_violation =
      std::max(*std::max_element(report.row_violation.begin(),
                                 report.row_violation.end()),
               *std::max_element(report.col_violation.begin(),
                                 report.col_violation.end()));
  report.passed = report.max_violation <= tol;
  return report;
}

}  // namespace jamgame
