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

#ifndef JAMGAME_HARNESS_SCENARIO_H_
#define JAMGAME_HARNESS_SCENARIO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include "json.hpp"

#include "jamgame/costs.h"
#include "jamgame/net_model.h"
#include "jamgame/stoch_game.h"

namespace jamgame::harness {

inline constexpr int kSchemaVersion = 1;

// Invalid scenario content. field() is the dotted path of the offending key.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RandomGainSpec {
  std::uint64_t seed = 0;
  std::string distribution = "uniform";  // "uniform" or "exponential"
  double low = 0.0;                      // uniform
  double high = 2.0;                     // uniform
  double mean = 1.0;                     // exponential
  bool symmetric = true;
};

// Seeded gain matrix with a zero diagonal. Uses its own transforms of the
// raw mt19937_64 stream so results do not depend on the standard library.
Eigen::MatrixXd GenerateGains(int n, const RandomGainSpec& spec);

struct NetworkSpec {
  int n = 0;
  std::vector<Point> positions;
  Eigen::MatrixXd h;                       // always materialized
  std::optional<RandomGainSpec> h_random;  // set when h was generated
  std::optional<std::vector<double>> node_powers;
  Eigen::MatrixXd powers;                  // always expanded
  double sigma2 = 1.0;
  double omega = 1.0;
};

struct JammerSpec {
  Point position;
  double J = 0.0;
  std::vector<double> g;  // per-node jammer gains
};

struct CategoryGame {
  double C_h = 0.0;
  std::optional<double> gamma;
  std::optional<double> alpha;
  std::optional<double> delta;

  GameParameters Resolve() const;
};

struct GameSpec {
  CategoryGame connectivity;
  CategoryGame throughput;

  const CategoryGame& For(CostCategory category) const;
  CategoryGame& For(CostCategory category);
};

struct Flags {
  bool include_interference = false;
  bool throughput_on_links_only = false;
};

// Costs supplied directly instead of derived from a network.
struct InjectedCosts {
  CostCategory category = CostCategory::kConnectivity;
  std::vector<double> values;
};

struct SweepAxis {
  std::string param;        // omega, gamma, C_h, sigma2, J, P<i>
  std::string kind;         // values, linspace, logspace
  std::vector<double> args;  // raw list, or [start, stop, count]
  std::vector<double> values;
};

enum class SweepMode { kGrid, kTrace };

struct SweepSpec {
  SweepMode mode = SweepMode::kGrid;
  std::vector<SweepAxis> axes;  // first axis varies slowest
  CostCategory category = CostCategory::kConnectivity;  // trace mode
  double tol = 1e-12;                                   // trace mode
};

struct Scenario {
  int schema_version = kSchemaVersion;
  std::optional<NetworkSpec> network;
  std::optional<InjectedCosts> costs;
  std::optional<JammerSpec> jammer;
  GameSpec game;
  Flags flags;
  std::optional<SweepSpec> sweep;

  NetworkModel BuildNetwork() const;
  std::optional<JammerModel> BuildJammer() const;
  // Categories solved for this scenario, in output order.
  std::vector<CostCategory> Categories() const;
};

Scenario ParseScenario(std::string_view text);
Scenario LoadScenario(const std::filesystem::path& path);
Scenario ScenarioFromJson(const nlohmann::json& doc);

// Normalized echo: every default filled in, keys in a fixed order.
nlohmann::ordered_json ScenarioToJson(const Scenario& scenario);

// Two-space indented JSON with scalar arrays kept on one line, LF-terminated.
std::string DumpJson(const nlohmann::ordered_json& doc);

// Whole-scenario invariants; throws ScenarioError naming the field.
void ValidateScenario(const Scenario& scenario);

std::vector<double> ExpandAxis(const std::string& kind,
                               const std::vector<double>& args,
                               const std::string& field);

// Applies one sweep coordinate; throws ScenarioError for unknown names.
void ApplyParameter(Scenario& scenario, const std::string& param, double value);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view content);

}  // namespace jamgame::harness

#endif  // JAMGAME_HARNESS_SCENARIO_H_
