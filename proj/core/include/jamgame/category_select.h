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

#ifndef JAMGAME_CATEGORY_SELECT_H_
#define JAMGAME_CATEGORY_SELECT_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "jamgame/stoch_game.h"

namespace jamgame {

// Expected number of slots until an attack succeeds when the authority scans
// with p, the jammer attacks with q and a collision recurs with probability
// gamma: 1 / (1 - gamma p'q).
double ExpectedDuration(std::span<const double> p, std::span<const double> q,
                        double gamma);

// Equilibrium scan/attack pair of one attack category.
struct CategoryStrategy {
  std::string label;  // "c", "t", ...
  std::vector<double> p;
  std::vector<double> q;
};

// Expected-duration game over attack categories. Entry (r, c) is the duration
// when the authority defends with category r's scan strategy and the jammer
// attacks with category c's strategy. Rows maximize, columns minimize.
class DurationMatrix {
 public:
  // Builds every T(p_row, q_col) from the category strategies.
  DurationMatrix(std::vector<CategoryStrategy> categories, double gamma);

  // Raw entries without generating strategies, e.g. for audits of the 2x2
  // solver. Entries must be finite and >= 1.
  static DurationMatrix FromEntries(std::vector<std::string> labels,
                                    Eigen::MatrixXd entries);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(int row, int col) const { return entries_(row, col); }
  // Empty when built with FromEntries.
  const std::vector<CategoryStrategy>& categories() const {
    return categories_;
  }
  const std::optional<double>& gamma() const { return gamma_; }

 private:
  DurationMatrix() = default;

  std::vector<std::string> labels_;
  Eigen::MatrixXd entries_;
  std::vector<CategoryStrategy> categories_;
  std::optional<double> gamma_;
};

// Connectivity ("c") versus throughput ("t") duration matrix.
DurationMatrix BuildDurationMatrix(const GameSolution& connectivity,
                                   const GameSolution& throughput,
                                   double gamma);

struct CategorySelection {
  bool pure = false;
  std::optional<std::pair<int, int>> cell;  // (row, col) when pure
  std::vector<double> x;  // authority category probabilities
  std::vector<double> y;  // jammer category probabilities
  double value = 0.0;     // expected duration in slots

  double x_c() const { return x.at(0); }
  double x_t() const { return x.at(1); }
  double y_c() const { return y.at(0); }
  double y_t() const { return y.at(1); }
};

// Pure saddle cells are tried first in row-major order, so ties resolve to
// the lexicographically first cell. Without a saddle, 2x2 games use the
// indifference formulas; larger games go through the matrix-game kernel.
CategorySelection SolveDurationGame(const DurationMatrix& durations);

// Largest gain available to either player from a pure deviation; <= 0 (up to
// rounding) at an equilibrium.
double BestResponseGain(const DurationMatrix& durations,
                        const CategorySelection& selection);

}  // namespace jamgame

#endif  // JAMGAME_CATEGORY_SELECT_H_
