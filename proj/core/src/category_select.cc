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

#include "jamgame/category_select.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jamgame/errors.h"
#include "jamgame/matrix_game.h"

namespace jamgame {
namespace {

constexpr double kDegenerateDenominator = 1e-12;
constexpr double kSaddleTolerance = 1e-12;

// Durations come from dot products of computed strategies, so cells that
// are equal in exact arithmetic can differ in the last bits.
bool IsSaddle(const Eigen::MatrixXd& d, int row, int col) {
  const double v = d(row, col);
  const double slack = kSaddleTolerance * std::max(1.0, std::abs(v));
  for (int c = 0; c < d.cols(); ++c) {
    if (d(row, c) < v - slack) return false;
  }
  for (int r = 0; r < d.rows(); ++r) {
    if (d(r, col) > v + slack) return false;
  }
  return true;
}

}  // namespace

double ExpectedDuration(std::span<const double> p, std::span<const double> q,
                        double gamma) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("duration: strategy lengths differ");
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("duration: gamma must lie in [0, 1)");
  }
  double overlap = 0.0;
  for (size_t i = 0; i < p.size(); ++i) overlap += p[i] * q[i];
  return 1.0 / (1.0 - gamma * overlap);
}

DurationMatrix::DurationMatrix(std::vector<CategoryStrategy> categories,
                               double gamma)
    : categories_(std::move(categories)), gamma_(gamma) {
  const int k = static_cast<int>(categories_.size());
  if (k == 0) throw std::invalid_argument("duration: no categories");
  const size_t n = categories_.front().p.size();
  for (const auto& c : categories_) {
    if (c.p.size() != n || c.q.size() != n) {
      throw std::invalid_argument(
          "duration: category strategies cover different node sets");
    }
    labels_.push_back(c.label);
  }
  entries_.resize(k, k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      entries_(r, c) =
          ExpectedDuration(categories_[r].p, categories_[c].q, gamma);
    }
  }
}

DurationMatrix DurationMatrix::FromEntries(std::vector<std::string> labels,
                                           Eigen::MatrixXd entries) {
  const auto k = static_cast<Eigen::Index>(labels.size());
  if (k == 0 || entries.rows() != k || entries.cols() != k) {
    throw std::invalid_argument("duration: entries must be k x k");
  }
  if (!entries.allFinite() || entries.minCoeff() < 1.0) {
    throw std::invalid_argument("duration: entries must be finite and >= 1");
  }
  DurationMatrix d;
  d.labels_ = std::move(labels);
  d.entries_ = std::move(entries);
  return d;
}

DurationMatrix BuildDurationMatrix(const GameSolution& connectivity,
                                   const GameSolution& throughput,
                                   double gamma) {
  return DurationMatrix({{"c", connectivity.p, connectivity.q},
                         {"t", throughput.p, throughput.q}},
                        gamma);
}

CategorySelection SolveDurationGame(const DurationMatrix& durations) {
  const Eigen::MatrixXd& d = durations.entries();
  const int k = durations.size();

  CategorySelection sel;
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      if (!IsSaddle(d, r, c)) continue;
      sel.pure = true;
      sel.cell = {r, c};
      sel.x.assign(k, 0.0);
      sel.y.assign(k, 0.0);
      sel.x[r] = 1.0;
      sel.y[c] = 1.0;
      sel.value = d(r, c);
      return sel;
    }
  }

  if (k == 2) {
    const double denominator = d(0, 0) + d(1, 1) - d(0, 1) - d(1, 0);
    if (std::abs(denominator) < kDegenerateDenominator) {
      throw SolverError("duration game: degenerate 2x2 matrix");
    }
    const double x_c = (d(1, 1) - d(1, 0)) / denominator;
    const double y_c = (d(1, 1) - d(0, 1)) / denominator;
    sel.x = {x_c, 1.0 - x_c};
    sel.y = {y_c, 1.0 - y_c};
    sel.value = (d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0)) / denominator;
    return sel;
  }

  const MatrixGameSolution mixed = SolveMatrixGame(d);
  sel.x = mixed.row_strategy;
  sel.y = mixed.col_strategy;
  sel.value = mixed.value;
  return sel;
}

double BestResponseGain(const DurationMatrix& durations,
                        const CategorySelection& selection) {
  const Eigen::MatrixXd& d = durations.entries();
  const Eigen::Map<const Eigen::VectorXd> x(selection.x.data(), d.rows());
  const Eigen::Map<const Eigen::VectorXd> y(selection.y.data(), d.cols());
  const double achieved = x.dot(d * y);
  // Authority deviating to a pure row against y; jammer to a pure column.
  const double row_gain = (d * y).maxCoeff() - achieved;
  const double col_gain = achieved - (d.transpose() * x).minCoeff();
  return std::max(row_gain, col_gain);
}

}  // namespace jamgame
