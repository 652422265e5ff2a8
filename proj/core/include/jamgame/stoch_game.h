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

#ifndef JAMGAME_STOCH_GAME_H_
#define JAMGAME_STOCH_GAME_H_

#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "jamgame/costs.h"

namespace jamgame {

// Hiding cost C_h and continuation probability gamma of the recursive
// scan-vs-jam game. gamma is either given directly or derived as
// (1 - alpha) * delta from the detection and persistence probabilities.
class GameParameters {
 public:
  static GameParameters FromGamma(double hiding_cost, double gamma);
  static GameParameters FromDetection(double hiding_cost, double alpha,
                                      double delta);

  double hiding_cost() const { return hiding_cost_; }
  double gamma() const { return gamma_; }
  const std::optional<double>& alpha() const { return alpha_; }
  const std::optional<double>& delta() const { return delta_; }

  // C_h / (1 - gamma): the value of hiding forever on a single node.
  double HidingValue() const { return hiding_cost_ / (1.0 - gamma_); }

  GameParameters WithHidingCost(double hiding_cost) const;
  GameParameters WithGamma(double gamma) const;

 private:
  GameParameters(double hiding_cost, double gamma,
                 std::optional<double> alpha, std::optional<double> delta);

  double hiding_cost_;
  double gamma_;
  std::optional<double> alpha_;
  std::optional<double> delta_;
};

enum class SolutionCase { kA, kB, kC, kOracleFallback };

// "A", "B", "C", "OracleFallback".
std::string_view CaseLabel(SolutionCase c);
std::optional<SolutionCase> ParseCaseLabel(std::string_view label);

struct GameSolution {
  double value = 0.0;
  std::vector<double> p;  // authority scan distribution, node indexing
  std::vector<double> q;  // jammer attack distribution, node indexing
  SolutionCase case_label = SolutionCase::kOracleFallback;
  int support_m = 0;               // common support size (0 in case A)
  std::optional<int> k_index;      // case C: number of costs below C_h/(1-g)
  double residual = 0.0;           // VerifyShapley max violation
  int iterations = 0;              // oracle iterations, 0 for closed forms
};

struct SolverOptions {
  // Closed-form answers whose Shapley residual exceeds this are discarded in
  // favour of the oracle.
  double certification_tol = 1e-9;
  // Stopping tolerance of the value-iteration oracle (certified error bar).
  double oracle_tol = 1e-12;
};

// Instantaneous payoff of the stage game at continuation value v: rows are
// scanned nodes, columns attacked nodes; C_h + gamma v on the diagonal and
// the attacked node's cost off it.
Eigen::MatrixXd PayoffMatrix(const CostVector& costs,
                             const GameParameters& params, double v);

// Value iteration V <- val(A(V)) from V = 0 until the contraction bound
// gamma |dV| / (1 - gamma) drops below tol. Handles attackable masks.
GameSolution SolveOracle(const CostVector& costs, const GameParameters& params,
                         double tol = 1e-12);

// Explicit equilibrium by case analysis on the sorted costs against
// C_h / (1 - gamma). Every answer is certified with VerifyShapley; anything
// uncertifiable (infeasible case A, boundary ties, masks) is answered by the
// oracle and labelled kOracleFallback.
GameSolution SolveClosedForm(const CostVector& costs,
                             const GameParameters& params,
                             const SolverOptions& options = {});

// Single-slot game with hiding cost c (gamma = 0).
GameSolution SolveOneShot(const CostVector& costs, double hiding_cost,
                          const SolverOptions& options = {});

// Support analysis for case C on ascending costs. phi[s-1] holds phi_s for
// s = 1..k; F_m(bracket_lo) <= 1 < F_m(bracket_hi).
struct SupportAnalysis {
  int k = 0;
  int m = 0;
  std::vector<double> phi;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

// nullopt unless the sorted costs fall in case C (k >= 2, no cost equal to
// C_h / (1 - gamma)).
std::optional<SupportAnalysis> AnalyzeSupport(
    const std::vector<double>& sorted_costs, const GameParameters& params);

// F_m(v) = sum_{i<=m} (v - l_i) / (C_h + gamma v - l_i) on ascending costs.
double SupportEquation(const std::vector<double>& sorted_costs,
                       const GameParameters& params, int m, double v);

struct IterationResult {
  double value = 0.0;           // (x - C_h) / gamma at the last iterate
  std::vector<double> trace;    // x_0 = C_h, x_1, ...
  int iterations = 0;
};

// x_{i+1} = gamma V(x_i) + C_h with V the one-shot value; stops when
// |x_{i+1} - x_i| <= tol. Requires 0 < gamma < 1.
IterationResult ValueByIteration(const CostVector& costs,
                                 const GameParameters& params, double tol,
                                 int max_iterations = 1'000'000);

// Bisection on g(x) = (x - C_h) / gamma - V(x) over
// [C_h, C_h + gamma max(l_n, C_h / (1 - gamma)) + 1]. Requires 0 < gamma < 1.
double ValueByBisection(const CostVector& costs, const GameParameters& params,
                        double tol);

struct ShapleyReport {
  double max_violation = 0.0;
  std::vector<double> row_violation;  // per scanned node
  std::vector<double> col_violation;  // per attacked node
  bool passed = false;                // max_violation <= tol
};

// Complementary-slackness residuals of the Shapley equation at sol.value:
// supported rows must pay exactly V and unsupported rows at most V;
// supported columns exactly V and unsupported columns at least V.
ShapleyReport VerifyShapley(const CostVector& costs,
                            const GameParameters& params,
                            const GameSolution& sol, double tol = 1e-9);

}  // namespace jamgame

#endif  // JAMGAME_STOCH_GAME_H_
