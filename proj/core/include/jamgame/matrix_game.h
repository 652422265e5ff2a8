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

#ifndef JAMGAME_MATRIX_GAME_H_
#define JAMGAME_MATRIX_GAME_H_

#include <vector>

#include <Eigen/Core>

namespace jamgame {

struct MatrixGameSolution {
  double value = 0.0;
  std::vector<double> row_strategy;  // maximizer
  std::vector<double> col_strategy;  // minimizer
};

// Solves the zero-sum game with the given payoff to the row player, who
// maximizes; the column player minimizes. Rectangular matrices are allowed.
//
// The payoff is shifted to be strictly positive and the column player's
// program  max 1'y  s.t.  A y <= 1, y >= 0  is solved by a dense tableau
// simplex with Bland's rule; the row strategy is read off the slack duals.
// Output is deterministic for a given matrix.
MatrixGameSolution SolveMatrixGame(const Eigen::MatrixXd& payoff);

// Max over rows of (A q)_i minus min over columns of (p' A)_j: zero exactly at
// an equilibrium, positive otherwise.
double EquilibriumGap(const Eigen::MatrixXd& payoff,
                      const std::vector<double>& row_strategy,
                      const std::vector<double>& col_strategy);

}  // namespace jamgame

#endif  // JAMGAME_MATRIX_GAME_H_
