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

#include "jamgame/spectral.h"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace jamgame {

Eigen::MatrixXd Laplacian(const TopologyGraph& graph) {
  const int m = graph.NumVertices();
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(m, m);
  for (const auto& [u, v] : graph.Edges()) {
    laplacian(u, v) = -1.0;
    laplacian(v, u) = -1.0;
    laplacian(u, u) += 1.0;
    laplacian(v, v) += 1.0;
  }
  return laplacian;
}

std::vector<double> LaplacianSpectrum(const TopologyGraph& graph) {
  const int m = graph.NumVertices();
  if (m == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      Laplacian(graph), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Laplacian eigenvalue computation failed");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  std::vector<double> spectrum(values.data(), values.data() + m);
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

double FiedlerValue(const TopologyGraph& graph) {
  if (graph.NumVertices() < 2) {
    throw std::invalid_argument("Fiedler value needs at least 2 vertices");
  }
  const double lambda = LaplacianSpectrum(graph)[1];
  return lambda < kZeroEigenvalueTolerance ? 0.0 : lambda;
}

int ComponentCount(const TopologyGraph& graph) {
  const int m = graph.NumVertices();
  std::vector<char> seen(m, 0);
  int components = 0;
  for (int start = 0; start < m; ++start) {
    if (seen[start]) continue;
    ++components;
    std::queue<int> frontier;
    frontier.push(start);
    seen[start] = 1;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v = 0; v < m; ++v) {
        if (!seen[v] && graph.HasEdge(u, v)) {
          seen[v] = 1;
          frontier.push(v);
        }
      }
    }
  }
  return components;
}

TopologyGraph RemoveNode(const TopologyGraph& graph, int label) {
  const int removed = graph.PositionOf(label);
  if (removed < 0) {
    throw std::out_of_range("node " + std::to_string(label) +
                            " is not a vertex of the graph");
  }
  if (graph.NumVertices() < 3) {
    throw std::invalid_argument(
        "removing a node from a graph with fewer than 3 vertices leaves no "
        "Fiedler value");
  }
  std::vector<int> keep;
  std::vector<int> labels;
  for (int u = 0; u < graph.NumVertices(); ++u) {
    if (u == removed) continue;
    keep.push_back(u);
    labels.push_back(graph.labels()[u]);
  }
  TopologyGraph sub(std::move(labels));
  for (size_t a = 0; a < keep.size(); ++a) {
    for (size_t b = a + 1; b < keep.size(); ++b) {
      if (graph.HasEdge(keep[a], keep[b])) {
        sub.AddEdge(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return sub;
}

}  // namespace jamgame
