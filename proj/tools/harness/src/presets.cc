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

#include "jamgame/harness/presets.h"

#include <stdexcept>

namespace jamgame::harness {
namespace {

SweepAxis Axis(std::string param, std::string kind, std::vector<double> args) {
  SweepAxis axis;
  axis.param = std::move(param);
  axis.kind = std::move(kind);
  axis.args = std::move(args);
  axis.values = ExpandAxis(axis.kind, axis.args, "sweep.axes");
  return axis;
}

// Hiding costs are not given for the network figures; these keep both
// categories in the range of their costs.
GameSpec NetworkGame(double gamma) {
  GameSpec game;
  game.connectivity.C_h = 1.0;
  game.connectivity.gamma = gamma;
  game.throughput.C_h = 10.0;
  game.throughput.gamma = gamma;
  return game;
}

Scenario NetworkScenario(double p1, double p2, double omega, double gamma,
                         std::vector<SweepAxis> axes) {
  Scenario s;
  s.network = SimulationNetwork(p1, p2, omega);
  s.game = NetworkGame(gamma);
  s.flags.throughput_on_links_only = true;
  s.sweep = SweepSpec{};
  s.sweep->axes = std::move(axes);
  return s;
}

}  // namespace

Eigen::MatrixXd SimulationGains() {
  Eigen::MatrixXd h(6, 6);
  h << 0, 0.3128, 1.1790, 1.6488, 1.6335, 0.8458,  //
      0.3128, 0, 0.4524, 1.9653, 0.5215, 0.1885,    //
      1.1790, 0.4524, 0, 1.4605, 1.1887, 1.1970,    //
      1.6488, 1.9653, 1.4605, 0, 0.0450, 0.9418,    //
      1.6355, 0.5215, 1.1887, 0.0450, 0, 1.3919,    //
      0.8458, 0.1885, 1.1970, 0.9418, 1.3919, 0;
  return h;
}

NetworkSpec SimulationNetwork(double p1, double p2, double omega) {
  NetworkSpec net;
  net.n = 6;
  net.h = SimulationGains();
  net.node_powers = std::vector<double>{p1, p2, 11, 10, 9, 8};
  net.powers = NetworkModel::UniformPowerMatrix(*net.node_powers);
  net.sigma2 = 1.0;
  net.omega = omega;
  return net;
}

std::vector<std::string> PresetNames() {
  return {"fig3", "fig4", "fig5", "fig6", "fig7"};
}

Scenario FigurePreset(std::string_view name) {
  Scenario s;
  if (name == "fig3") {
    s.costs = InjectedCosts{CostCategory::kConnectivity,
                            {1.11, 4.31, 6.12, 8.31, 9.11}};
    s.game.connectivity.C_h = 1.0;
    s.game.connectivity.gamma = 0.7;
    s.game.throughput = s.game.connectivity;
    s.sweep = SweepSpec{};
    s.sweep->mode = SweepMode::kTrace;
    s.sweep->category = CostCategory::kConnectivity;
    s.sweep->tol = 1e-12;
  } else if (name == "fig4") {
    s = NetworkScenario(5, 5, 1, 0.5,
                        {Axis("omega", "logspace", {-2, 0, 25}),
                         Axis("gamma", "linspace", {0, 0.9, 10})});
  } else if (name == "fig5") {
    s = NetworkScenario(5, 5, 1, 0.5, {Axis("gamma", "linspace", {0, 0.9, 10})});
  } else if (name == "fig6") {
    s = NetworkScenario(5, 5, 1, 0.5,
                        {Axis("P1", "linspace", {0, 20, 21}),
                         Axis("P2", "linspace", {0, 20, 21})});
  } else if (name == "fig7") {
    s = NetworkScenario(10, 5, 1, 0.5,
                        {Axis("gamma", "values", {0.3, 0.6, 0.9}),
                         Axis("P2", "linspace", {0, 20, 81})});
  } else {
    throw std::invalid_argument("unknown preset \"" + std::string(name) +
                                "\"; expected fig3, fig4, fig5, fig6 or fig7");
  }
  ValidateScenario(s);
  return s;
}

}  // namespace jamgame::harness
