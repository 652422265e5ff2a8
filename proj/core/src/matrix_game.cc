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

#include "jamgame/matrix_game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "jamgame/errors.h"

namespace jamgame {
namespace {

constexpr double kPivotTolerance = 1e-12;

// Clears rounding debris below 1e-13 of the mass, then rescales to sum 1.
void Normalize(std::vector<double>& v) {
  double total = 0.0;
  for (double x : v) total += std::max(x, 0.0);
  double kept = 0.0;
  for (double& x : v) {
    if (x <= 1e-13 * total) x = 0.0;
    kept += x;
  }
  for (double& x : v) x /= kept;
}

}  // namespace

MatrixGameSolution SolveMatrixGame(const Eigen::MatrixXd& payoff) {
  const int rows = static_cast<int>(payoff.rows());
  const int cols = static_cast<int>(payoff.cols());
  if (rows == 0 || cols == 0) throw std::invalid_argument("empty payoff matrix");
  if (!payoff.allFinite()) {
    throw std::invalid_argument("payoff matrix has non-finite entries");
  }

  // Shift so every entry is >= 1; the game value shifts by the same amount.
  const double shift = 1.0 - payoff.minCoeff();

  // Tableau: rows x (cols + rows + 1), plus objective row. Columns
  // [0, cols) are y, [cols, cols + rows) are slacks, last is the rhs.
  const int width = cols + rows + 1;
  Eigen::MatrixXd tableau = Eigen::MatrixXd::Zero(rows + 1, width);
  tableau.block(0, 0, rows, cols) = payoff.array() + shift;
  tableau.block(0, cols, rows, rows).setIdentity();
  tableau.block(0, width - 1, rows, 1).setOnes();
  tableau.block(rows, 0, 1, cols).setConstant(-1.0);

  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = cols + i;

  const int max_pivots = 50 * (rows + cols) + 1000;
  int pivots = 0;
  while (true) {
    // Bland's rule: lowest-index variable with negative reduced cost.
    int entering = -1;
    for (int j = 0; j < cols + rows; ++j) {
      if (tableau(rows, j) < -kPivotTolerance) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows; ++i) {
      const double a = tableau(i, entering);
      if (a > kPivotTolerance) {
        best_ratio = std::min(best_ratio, tableau(i, width - 1) / a);
      }
    }
    // Ratio ties go to the lowest-index basic variable.
    int leaving = -1;
    for (int i = 0; i < rows; ++i) {
      const double a = tableau(i, entering);
      if (a <= kPivotTolerance) continue;
      if (tableau(i, width - 1) / a > best_ratio + kPivotTolerance) continue;
      if (leaving < 0 || basis[i] < basis[leaving]) leaving = i;
    }
    // The feasible region is bounded because the shifted payoff is positive.
    if (leaving < 0) throw SolverError("matrix game simplex: unbounded pivot");

    tableau.row(leaving) /= tableau(leaving, entering);
    for (int i = 0; i <= rows; ++i) {
      if (i == leaving) continue;
      const double factor = tableau(i, entering);
      if (factor != 0.0) tableau.row(i) -= factor * tableau.row(leaving);
    }
    basis[leaving] = entering;
    if (++pivots > max_pivots) {
      throw SolverError("matrix game simplex: pivot limit exceeded");
    }
  }

  std::vector<double> y(cols, 0.0);
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < cols) y[basis[i]] = tableau(i, width - 1);
  }
  std::vector<double> x(rows, 0.0);
  for (int i = 0; i < rows; ++i) x[i] = tableau(rows, cols + i);

  const double objective = tableau(rows, width - 1);
  if (!(objective > 0.0)) throw SolverError("matrix game simplex: bad optimum");

  MatrixGameSolution solution;
  solution.value = 1.0 / objective - shift;
  solution.row_strategy = std::move(x);
  solution.col_strategy = std::move(y);
  Normalize(solution.row_strategy);
  Normalize(solution.col_strategy);
  return solution;
}

double EquilibriumGap(const Eigen::MatrixXd& payoff,
                      const std::vector<double>& row_strategy,
                      const std::vector<double>& col_strategy) {
  const Eigen::Map<const Eigen::VectorXd> p(row_strategy.data(),
                                            payoff.rows());
  const Eigen::Map<const Eigen::VectorXd> q(col_strategy.data(),
                                            payoff.cols());
  return (payoff * q).maxCoeff() - (payoff.transpose() * p).minCoeff();
}

}  // namespace jamgame
