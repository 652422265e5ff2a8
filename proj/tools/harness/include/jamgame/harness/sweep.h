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

#ifndef JAMGAME_HARNESS_SWEEP_H_
#define JAMGAME_HARNESS_SWEEP_H_

#include <optional>
#include <string>
#include <vector>

#include "jamgame/category_select.h"
#include "jamgame/costs.h"
#include "jamgame/harness/csv.h"
#include "jamgame/harness/scenario.h"
#include "jamgame/net_model.h"
#include "jamgame/stoch_game.h"

namespace jamgame::harness {

struct RunOptions {
  double tol = 1e-9;          // certification tolerance
  double oracle_tol = 1e-12;  // value-iteration stopping tolerance
  bool oracle_only = false;   // skip the closed form
  int jobs = 1;               // worker threads for grid sweeps
};

struct CategoryOutcome {
  CostCategory category = CostCategory::kConnectivity;
  std::optional<CostVector> costs;
  std::optional<GameParameters> params;
  std::optional<GameSolution> solution;
  std::string error;  // empty on success
};

// Everything computed at one parameter point.
struct Evaluation {
  std::optional<TopologyGraph> topology;
  std::vector<CategoryOutcome> categories;
  std::optional<DurationMatrix> durations;
  std::optional<CategorySelection> selection;
  std::string error;  // duration-game failure

  bool HasError() const;
  // Largest Shapley residual over solved categories.
  double MaxResidual() const;
};

GameSolution SolveCategory(const CostVector& costs,
                           const GameParameters& params,
                           const RunOptions& options);

// Rebuilds topology and costs for the scenario's base values and solves.
Evaluation Evaluate(const Scenario& scenario, const RunOptions& options);

// Pairs (i, j), i < j, in lexicographic order: '1' when linked.
std::string EdgeSetString(const TopologyGraph& graph);

struct SweepResult {
  ResultTable table;
  int error_rows = 0;
  int certification_failures = 0;  // rows with a residual above tol
};

// Grid sweep, or the iterate trace in trace mode. Rows come out in grid
// order whatever the number of jobs.
SweepResult RunSweep(const Scenario& scenario, const RunOptions& options);

}  // namespace jamgame::harness

#endif  // JAMGAME_HARNESS_SWEEP_H_
