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

#include "jamgame/harness/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace jamgame::harness {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int NumNodes(const Scenario& s) {
  return s.network ? s.network->n : static_cast<int>(s.costs->values.size());
}

std::string SelectionLabel(const DurationMatrix& d, const CategorySelection& s) {
  if (!s.pure) return "mixed";
  return "pure_" + d.labels()[s.cell->first] + d.labels()[s.cell->second];
}

std::vector<std::string> GridColumns(const Scenario& s) {
  std::vector<std::string> columns;
  if (s.sweep) {
    for (const SweepAxis& axis : s.sweep->axes) columns.push_back(axis.param);
  }
  if (s.network) {
    columns.push_back("edges");
    columns.push_back("edge_set");
  }
  const auto categories = s.Categories();
  for (CostCategory c : categories) {
    const std::string name(CategoryName(c));
    for (const char* prefix : {"V_", "case_", "m_", "residual_"}) {
      columns.push_back(prefix + name);
    }
  }
  const int n = NumNodes(s);
  for (CostCategory c : categories) {
    const std::string label(CategoryLabel(c));
    for (const char* vec : {"p_", "q_"}) {
      for (int i = 1; i <= n; ++i) {
        columns.push_back(vec + label + "_" + std::to_string(i));
      }
    }
  }
  if (categories.size() == 2) {
    for (const char* name : {"T_cc", "T_ct", "T_tc", "T_tt", "x_c", "y_c",
                             "duration_value", "selection"}) {
      columns.push_back(name);
    }
  }
  columns.push_back("error");
  return columns;
}

std::vector<Cell> GridRow(const Scenario& s, const std::vector<double>& coords,
                          const Evaluation& ev) {
  std::vector<Cell> row(coords.begin(), coords.end());
  if (s.network) {
    if (ev.topology) {
      row.emplace_back(static_cast<std::int64_t>(ev.topology->NumEdges()));
      row.emplace_back(EdgeSetString(*ev.topology));
    } else {
      row.emplace_back(kNaN);
      row.emplace_back(std::string("error"));
    }
  }
  std::string error;
  auto add_error = [&](const std::string& where, const std::string& what) {
    if (what.empty()) return;
    if (!error.empty()) error += "; ";
    error += where + ": " + what;
  };
  for (const CategoryOutcome& c : ev.categories) {
    if (c.solution) {
      row.emplace_back(c.solution->value);
      row.emplace_back(std::string(CaseLabel(c.solution->case_label)));
      row.emplace_back(static_cast<std::int64_t>(c.solution->support_m));
      row.emplace_back(c.solution->residual);
    } else {
      row.emplace_back(kNaN);
      row.emplace_back(std::string("error"));
      row.emplace_back(kNaN);
      row.emplace_back(kNaN);
    }
    add_error(std::string(CategoryName(c.category)), c.error);
  }
  const int n = NumNodes(s);
  for (const CategoryOutcome& c : ev.categories) {
    for (int which = 0; which < 2; ++which) {
      for (int i = 0; i < n; ++i) {
        if (c.solution) {
          row.emplace_back(which == 0 ? c.solution->p[i] : c.solution->q[i]);
        } else {
          row.emplace_back(kNaN);
        }
      }
    }
  }
  if (ev.categories.size() == 2) {
    if (ev.durations && ev.selection) {
      const DurationMatrix& d = *ev.durations;
      for (int k = 0; k < 4; ++k) row.emplace_back(d(k / 2, k % 2));
      row.emplace_back(ev.selection->x_c());
      row.emplace_back(ev.selection->y_c());
      row.emplace_back(ev.selection->value);
      row.emplace_back(SelectionLabel(d, *ev.selection));
    } else {
      for (int k = 0; k < 7; ++k) row.emplace_back(kNaN);
      row.emplace_back(std::string("error"));
    }
    add_error("duration", ev.error);
  }
  row.emplace_back(error);
  return row;
}

SweepResult RunGrid(const Scenario& s, const RunOptions& options) {
  std::vector<const SweepAxis*> axes;
  if (s.sweep) {
    for (const SweepAxis& axis : s.sweep->axes) axes.push_back(&axis);
  }
  size_t total = 1;
  for (const SweepAxis* axis : axes) total *= axis->values.size();

  SweepResult result;
  result.table.columns = GridColumns(s);
  result.table.rows.resize(total);
  std::vector<char> errors(total, 0);
  std::vector<char> uncertified(total, 0);

  auto evaluate = [&](size_t index) {
    // Last axis varies fastest.
    std::vector<double> coords(axes.size());
    size_t rest = index;
    for (size_t a = axes.size(); a-- > 0;) {
      const size_t size = axes[a]->values.size();
      coords[a] = axes[a]->values[rest % size];
      rest /= size;
    }
    Scenario point = s;
    Evaluation ev;
    try {
      for (size_t a = 0; a < axes.size(); ++a) {
        ApplyParameter(point, axes[a]->param, coords[a]);
      }
      ev = Evaluate(point, options);
    } catch (const std::exception& e) {
      ev = Evaluation{};
      for (CostCategory c : s.Categories()) {
        CategoryOutcome out;
        out.category = c;
        out.error = e.what();
        ev.categories.push_back(std::move(out));
      }
    }
    errors[index] = ev.HasError();
    uncertified[index] = ev.MaxResidual() > options.tol;
    result.table.rows[index] = GridRow(point, coords, ev);
  };

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(total)));
  if (jobs == 1) {
    for (size_t i = 0; i < total; ++i) evaluate(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (size_t i = next++; i < total; i = next++) evaluate(i);
      });
    }
    for (std::thread& t : workers) t.join();
  }
  result.error_rows = static_cast<int>(std::count(errors.begin(), errors.end(), 1));
  result.certification_failures =
      static_cast<int>(std::count(uncertified.begin(), uncertified.end(), 1));
  return result;
}

SweepResult RunTrace(const Scenario& s) {
  const CostCategory category = s.sweep->category;
  const GameParameters params = s.game.For(category).Resolve();
  std::optional<CostVector> costs;
  if (s.costs) {
    costs.emplace(category, s.costs->values);
  } else {
    const NetworkModel model = s.BuildNetwork();
    costs.emplace(category == CostCategory::kConnectivity
                      ? ConnectivityCostVector(BuildTopology(model))
                      : ThroughputCostVector(model,
                                             s.flags.throughput_on_links_only));
    if (auto jammer = s.BuildJammer()) {
      costs.emplace(costs->WithAttackable(AttackableSet(model, *jammer)));
    }
  }
  const IterationResult trace = ValueByIteration(*costs, params, s.sweep->tol);

  SweepResult result;
  result.table.columns = {"iteration", "x", "one_shot_value", "V_estimate"};
  for (size_t i = 0; i < trace.trace.size(); ++i) {
    const double x = trace.trace[i];
    result.table.rows.push_back(
        {static_cast<std::int64_t>(i), x, SolveOneShot(*costs, x).value,
         (x - params.hiding_cost()) / params.gamma()});
  }
  return result;
}

}  // namespace

bool Evaluation::HasError() const {
  if (!error.empty()) return true;
  return std::any_of(categories.begin(), categories.end(),
                     [](const CategoryOutcome& c) { return !c.error.empty(); });
}

double Evaluation::MaxResidual() const {
  double worst = 0.0;
  for (const CategoryOutcome& c : categories) {
    if (c.solution) worst = std::max(worst, c.solution->residual);
  }
  return worst;
}

GameSolution SolveCategory(const CostVector& costs,
                           const GameParameters& params,
                           const RunOptions& options) {
  if (options.oracle_only) return SolveOracle(costs, params, options.oracle_tol);
  SolverOptions solver;
  solver.certification_tol = options.tol;
  solver.oracle_tol = options.oracle_tol;
  return SolveClosedForm(costs, params, solver);
}

Evaluation Evaluate(const Scenario& s, const RunOptions& options) {
  Evaluation ev;
  std::optional<NetworkModel> model;
  std::optional<std::vector<int>> attackable;
  if (s.network) {
    model.emplace(s.BuildNetwork());
    ev.topology = BuildTopology(*model);
    if (auto jammer = s.BuildJammer()) attackable = AttackableSet(*model, *jammer);
  }
  for (CostCategory category : s.Categories()) {
    CategoryOutcome out;
    out.category = category;
    try {
      out.params = s.game.For(category).Resolve();
      if (s.costs) {
        out.costs.emplace(category, s.costs->values);
      } else if (category == CostCategory::kConnectivity) {
        out.costs.emplace(ConnectivityCostVector(*ev.topology));
      } else {
        out.costs.emplace(
            ThroughputCostVector(*model, s.flags.throughput_on_links_only));
      }
      if (attackable) out.costs.emplace(out.costs->WithAttackable(*attackable));
      out.solution = SolveCategory(*out.costs, *out.params, options);
    } catch (const std::exception& e) {
      out.error = e.what();
    }
    ev.categories.push_back(std::move(out));
  }
  if (ev.categories.size() == 2 && ev.categories[0].solution &&
      ev.categories[1].solution) {
    try {
      ev.durations = BuildDurationMatrix(*ev.categories[0].solution,
                                         *ev.categories[1].solution,
                                         ev.categories[0].params->gamma());
      ev.selection = SolveDurationGame(*ev.durations);
    } catch (const std::exception& e) {
      ev.error = e.what();
    }
  } else if (ev.categories.size() == 2) {
    ev.error = "needs both category solutions";
  }
  return ev;
}

std::string EdgeSetString(const TopologyGraph& graph) {
  std::string out;
  const int n = graph.NumVertices();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out += graph.HasEdge(i, j) ? '1' : '0';
  }
  return out;
}

SweepResult RunSweep(const Scenario& scenario, const RunOptions& options) {
  if (scenario.sweep && scenario.sweep->mode == SweepMode::kTrace) {
    return RunTrace(scenario);
  }
  return RunGrid(scenario, options);
}

}  // namespace jamgame::harness
