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

#ifndef JAMGAME_SPECTRAL_H_
#define JAMGAME_SPECTRAL_H_

#include <vector>

#include <Eigen/Core>

#include "jamgame/net_model.h"

namespace jamgame {

// Eigenvalues below this are treated as zero for connectivity decisions.
inline constexpr double kZeroEigenvalueTolerance = 1e-9;

// L = D - A over the graph's vertices in local order; integer valued.
Eigen::MatrixXd Laplacian(const TopologyGraph& graph);

// Laplacian eigenvalues, ascending. Eigenvalues only; no eigenvectors.
std::vector<double> LaplacianSpectrum(const TopologyGraph& graph);

// Algebraic connectivity: the second-smallest Laplacian eigenvalue, clamped
// to exactly 0 when it lies within kZeroEigenvalueTolerance of 0.
// Requires at least 2 vertices.
double FiedlerValue(const TopologyGraph& graph);

// Connected components by breadth-first traversal.
int ComponentCount(const TopologyGraph& graph);

// Induced subgraph on V \ {label}; remaining vertices keep their labels.
// Requires at least 3 vertices so the result still has a Fiedler value.
TopologyGraph RemoveNode(const TopologyGraph& graph, int label);

}  // namespace jamgame

#endif  // JAMGAME_SPECTRAL_H_
