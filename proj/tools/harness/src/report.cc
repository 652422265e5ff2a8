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

#include "jamgame/harness/report.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "jamgame/category_select.h"

namespace jamgame::harness {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

template <typename T>
T Get(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(path + "." + key, "missing");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ScenarioError(path + "." + key, "wrong type");
  }
}

std::optional<CostCategory> CategoryFromName(const std::string& name) {
  for (CostCategory c : {CostCategory::kConnectivity, CostCategory::kThroughput}) {
    if (CategoryName(c) == name) return c;
  }
  return std::nullopt;
}

}  // namespace

ordered_json EvaluationToJson(const Evaluation& ev) {
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  if (ev.topology) {
    out["topology"] = {{"edges", ev.topology->NumEdges()},
                       {"edge_set", EdgeSetString(*ev.topology)}};
  }
  ordered_json categories = ordered_json::array();
  for (const CategoryOutcome& c : ev.categories) {
    ordered_json entry;
    entry["category"] = std::string(CategoryName(c.category));
    if (c.costs) {
      entry["costs"] = c.costs->values();
      if (c.costs->attackable()) entry["attackable"] = *c.costs->attackable();
    }
    if (c.params) {
      entry["C_h"] = c.params->hiding_cost();
      entry["gamma"] = c.params->gamma();
    }
    if (c.solution) {
      const GameSolution& s = *c.solution;
      entry["value"] = s.value;
      entry["case"] = std::string(CaseLabel(s.case_label));
      entry["support_m"] = s.support_m;
      if (s.k_index) entry["k"] = *s.k_index;
      entry["iterations"] = s.iterations;
      entry["residual"] = s.residual;
      entry["p"] = s.p;
      entry["q"] = s.q;
    }
    if (!c.error.empty()) entry["error"] = c.error;
    categories.push_back(std::move(entry));
  }
  out["categories"] = std::move(categories);
  if (ev.durations && ev.selection) {
    const DurationMatrix& d = *ev.durations;
    ordered_json duration;
    duration["labels"] = d.labels();
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < d.size(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < d.size(); ++c) row.push_back(d(r, c));
      rows.push_back(std::move(row));
    }
    duration["T"] = std::move(rows);
    duration["pure"] = ev.selection->pure;
    duration["x"] = ev.selection->x;
    duration["y"] = ev.selection->y;
    duration["value"] = ev.selection->value;
    out["duration"] = std::move(duration);
  }
  if (!ev.error.empty()) out["error"] = ev.error;
  return out;
}

VerifyOutcome VerifySolution(const json& doc, double tol) {
  if (!doc.is_object()) throw ScenarioError("", "expected a solution object");
  if (Get<int>(doc, "", "schema_version") != kSchemaVersion) {
    throw ScenarioError("schema_version", "unsupported version");
  }
  const auto it = doc.find("categories");
  if (it == doc.end() || !it->is_array()) {
    throw ScenarioError("categories", "expected an array");
  }

  VerifyOutcome outcome;
  outcome.passed = true;
  ordered_json checks = ordered_json::array();
  std::vector<CategoryStrategy> strategies;
  std::optional<double> shared_gamma;
  for (size_t i = 0; i < it->size(); ++i) {
    const json& entry = (*it)[i];
    const std::string path = "categories[" + std::to_string(i) + "]";
    const auto name = Get<std::string>(entry, path, "category");
    const auto category = CategoryFromName(name);
    if (!category) throw ScenarioError(path + ".category", "unknown category");
    ordered_json check;
    check["category"] = name;
    if (entry.contains("error")) {
      check["passed"] = false;
      check["error"] = entry["error"];
      outcome.passed = false;
      checks.push_back(std::move(check));
      continue;
    }
    GameSolution sol;
    sol.value = Get<double>(entry, path, "value");
    sol.p = Get<std::vector<double>>(entry, path, "p");
    sol.q = Get<std::vector<double>>(entry, path, "q");
    try {
      std::optional<std::vector<int>> attackable;
      if (entry.contains("attackable")) {
        attackable = Get<std::vector<int>>(entry, path, "attackable");
      }
      const CostVector costs(*category,
                             Get<std::vector<double>>(entry, path, "costs"),
                             attackable);
      const GameParameters params = GameParameters::FromGamma(
          Get<double>(entry, path, "C_h"), Get<double>(entry, path, "gamma"));
      const ShapleyReport report = VerifyShapley(costs, params, sol, tol);
      check["max_violation"] = report.max_violation;
      check["passed"] = report.passed;
      outcome.passed = outcome.passed && report.passed;
      shared_gamma = params.gamma();
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(path, e.what());
    }
    strategies.push_back({std::string(CategoryLabel(*category)), sol.p, sol.q});
    checks.push_back(std::move(check));
  }
  outcome.report["categories"] = std::move(checks);

  if (const auto d = doc.find("duration"); d != doc.end()) {
    if (strategies.size() != 2 || !shared_gamma) {
      throw ScenarioError("duration", "needs two solved categories");
    }
    const DurationMatrix rebuilt(strategies, *shared_gamma);
    const auto stored = Get<std::vector<std::vector<double>>>(*d, "duration", "T");
    double entry_error = 0.0;
    for (int r = 0; r < rebuilt.size(); ++r) {
      for (int c = 0; c < rebuilt.size(); ++c) {
        entry_error = std::max(entry_error,
                               std::abs(stored.at(r).at(c) - rebuilt(r, c)));
      }
    }
    CategorySelection sel;
    sel.x = Get<std::vector<double>>(*d, "duration", "x");
    sel.y = Get<std::vector<double>>(*d, "duration", "y");
    if (static_cast<int>(sel.x.size()) != rebuilt.size() ||
        static_cast<int>(sel.y.size()) != rebuilt.size()) {
      throw ScenarioError("duration", "strategy length mismatch");
    }
    const double gain = BestResponseGain(rebuilt, sel);
    const bool passed = entry_error <= tol && gain <= tol;
    outcome.report["duration"] = {{"entry_error", entry_error},
                                  {"best_response_gain", gain},
                                  {"passed", passed}};
    outcome.passed = outcome.passed && passed;
  }
  outcome.report["passed"] = outcome.passed;
  return outcome;
}

}  // namespace jamgame::harness
