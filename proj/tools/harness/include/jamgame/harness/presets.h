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

#ifndef JAMGAME_HARNESS_PRESETS_H_
#define JAMGAME_HARNESS_PRESETS_H_

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "jamgame/harness/scenario.h"

namespace jamgame::harness {

// The six-node simulation network: gains as printed, P = (P1, P2, 11, 10, 9,
// 8), sigma2 = 1.
Eigen::MatrixXd SimulationGains();
NetworkSpec SimulationNetwork(double p1, double p2, double omega);

std::vector<std::string> PresetNames();

// Throws std::invalid_argument for an unknown name.
Scenario FigurePreset(std::string_view name);

}  // namespace jamgame::harness

#endif  // JAMGAME_HARNESS_PRESETS_H_
