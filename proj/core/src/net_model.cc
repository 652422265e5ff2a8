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

#include "jamgame/net_model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "jamgame/errors.h"

namespace jamgame {
namespace {

void CheckMatrix(const Eigen::MatrixXd& m, int n, const char* name) {
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument(std::string(name) + ": expected " +
                                std::to_string(n) + "x" + std::to_string(n) +
                                " matrix");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(m(i, j)) || m(i, j) < 0.0) {
        throw std::invalid_argument(std::string(name) +
                                    ": entries must be finite and >= 0");
      }
    }
  }
}

}  // namespace

NetworkModel::NetworkModel(Eigen::MatrixXd gains, Eigen::MatrixXd powers,
                           double noise_power, double sinr_threshold,
                           bool include_interference,
                           std::vector<Point> positions)
    : gains_(std::move(gains)),
      powers_(std::move(powers)),
      noise_power_(noise_power),
      sinr_threshold_(sinr_threshold),
      include_interference_(include_interference),
      positions_(std::move(positions)) {
  const int n = static_cast<int>(gains_.rows());
  if (n < 2) throw std::invalid_argument("n: network needs at least 2 nodes");
  CheckMatrix(gains_, n, "h");
  CheckMatrix(powers_, n, "P");
  for (int i = 0; i < n; ++i) {
    if (gains_(i, i) != 0.0) {
      throw std::invalid_argument("h: diagonal entries must be 0");
    }
  }
  if (!(noise_power_ > 0.0) || !std::isfinite(noise_power_)) {
    throw std::invalid_argument("sigma2: must be > 0");
  }
  if (!(sinr_threshold_ > 0.0) || !std::isfinite(sinr_threshold_)) {
    throw std::invalid_argument("omega: must be > 0");
  }
  if (!positions_.empty() && static_cast<int>(positions_.size()) != n) {
    throw std::invalid_argument("positions: expected one point per node");
  }
}

Eigen::MatrixXd NetworkModel::UniformPowerMatrix(
    std::span<const double> node_powers) {
  const auto n = static_cast<Eigen::Index>(node_powers.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j) p(i, j) = node_powers[i];
    }
  }
  return p;
}

NetworkModel NetworkModel::WithSinrThreshold(double sinr_threshold) const {
  return NetworkModel(gains_, powers_, noise_power_, sinr_threshold,
                      include_interference_, positions_);
}

NetworkModel NetworkModel::WithPowers(Eigen::MatrixXd powers) const {
  return NetworkModel(gains_, std::move(powers), noise_power_,
                      sinr_threshold_, include_interference_, positions_);
}

void NetworkModel::CheckNode(int node) const {
  if (node < 0 || node >= NumNodes()) {
    throw std::out_of_range("node index " + std::to_string(node) +
                            " out of range");
  }
}

void NetworkModel::CheckLink(int sender, int receiver) const {
  CheckNode(sender);
  CheckNode(receiver);
  if (sender == receiver) {
    throw std::invalid_argument("a node has no link to itself");
  }
}

double NetworkModel::SignalPower(int sender, int receiver) const {
  return gains_(sender, receiver) * powers_(sender, receiver);
}

double NetworkModel::Interference(int sender, int receiver) const {
  if (!include_interference_) return 0.0;
  double total = 0.0;
  for (int k = 0; k < NumNodes(); ++k) {
    if (k == sender || k == receiver) continue;
    total += SignalPower(k, receiver);
  }
  return total;
}

double NetworkModel::Sinr(int sender, int receiver) const {
  CheckLink(sender, receiver);
  return SignalPower(sender, receiver) /
         (noise_power_ + Interference(sender, receiver));
}

JammerModel::JammerModel(Point position, double power_budget,
                         std::vector<double> gains)
    : position_(position), power_budget_(power_budget),
      gains_(std::move(gains)) {
  if (!(power_budget_ >= 0.0) || !std::isfinite(power_budget_)) {
    throw std::invalid_argument("J: jamming budget must be finite and >= 0");
  }
  for (double g : gains_) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
      throw std::invalid_argument("g: jammer gains must be finite and >= 0");
    }
  }
}

double JammerModel::DistanceTo(const NetworkModel& model, int node) const {
  model.CheckNode(node);
  if (!model.has_positions()) {
    throw std::invalid_argument(
        "positions: jammer distances need node positions");
  }
  const Point& y = model.positions()[node];
  const double d = std::hypot(position_.x - y.x, position_.y - y.y);
  if (d < kDistanceFloor) {
    throw GeometryError("jammer is within the distance floor of node " +
                        std::to_string(node));
  }
  return d;
}

double JammerModel::ReceivedPower(const NetworkModel& model, int node) const {
  if (static_cast<int>(gains_.size()) != model.NumNodes()) {
    throw std::invalid_argument("g: expected one jammer gain per node");
  }
  const double d = DistanceTo(model, node);
  return gains_[node] * power_budget_ / (d * d);
}

TopologyGraph::TopologyGraph(int num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  labels_.resize(num_vertices);
  for (int i = 0; i < num_vertices; ++i) labels_[i] = i;
  adjacency_.assign(static_cast<size_t>(num_vertices) * num_vertices, 0);
}

TopologyGraph::TopologyGraph(std::vector<int> labels)
    : labels_(std::move(labels)) {
  adjacency_.assign(labels_.size() * labels_.size(), 0);
}

int TopologyGraph::PositionOf(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

void TopologyGraph::CheckVertex(int u) const {
  if (u < 0 || u >= NumVertices()) {
    throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
  }
}

void TopologyGraph::AddEdge(int u, int v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  const int m = NumVertices();
  if (adjacency_[u * m + v]) return;
  adjacency_[u * m + v] = 1;
  adjacency_[v * m + u] = 1;
  ++num_edges_;
}

bool TopologyGraph::HasEdge(int u, int v) const {
  CheckVertex(u);
  CheckVertex(v);
  return adjacency_[u * NumVertices() + v] != 0;
}

int TopologyGraph::Degree(int u) const {
  CheckVertex(u);
  const int m = NumVertices();
  int degree = 0;
  for (int v = 0; v < m; ++v) degree += adjacency_[u * m + v];
  return degree;
}

std::vector<std::pair<int, int>> TopologyGraph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  const int m = NumVertices();
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      if (adjacency_[u * m + v]) edges.emplace_back(u, v);
    }
  }
  return edges;
}

double Throughput(const NetworkModel& model, int sender, int receiver) {
  return std::log1p(model.Sinr(sender, receiver));
}

double JammedSinr(const NetworkModel& model, const JammerModel& jammer,
                  int sender, int receiver) {
  model.CheckLink(sender, receiver);
  return model.SignalPower(sender, receiver) /
         (model.noise_power() + model.Interference(sender, receiver) +
          jammer.ReceivedPower(model, receiver));
}

bool IsLinkBroken(const NetworkModel& model, const JammerModel& jammer,
                  int sender, int receiver) {
  return JammedSinr(model, jammer, sender, receiver) < model.sinr_threshold();
}

bool LinkExists(const NetworkModel& model, int i, int j) {
  const double omega = model.sinr_threshold();
  return model.Sinr(i, j) >= omega && model.Sinr(j, i) >= omega;
}

TopologyGraph BuildTopology(const NetworkModel& model) {
  const int n = model.NumNodes();
  TopologyGraph graph(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (LinkExists(model, i, j)) graph.AddEdge(i, j);
    }
  }
  return graph;
}

double RequiredJammingPower(const NetworkModel& model,
                            const JammerModel& jammer, int node) {
  model.CheckNode(node);
  if (static_cast<int>(jammer.gains().size()) != model.NumNodes()) {
    throw std::invalid_argument("g: expected one jammer gain per node");
  }
  double excess = 0.0;
  for (int i = 0; i < model.NumNodes(); ++i) {
    if (i == node) continue;
    const double clamp = model.SignalPower(i, node) / model.sinr_threshold() -
                         model.noise_power() - model.Interference(i, node);
    excess = std::max(excess, clamp);
  }
  if (excess <= 0.0) return 0.0;
  const double g = jammer.gains()[node];
  if (g == 0.0) return std::numeric_limits<double>::infinity();
  const double d = jammer.DistanceTo(model, node);
  return d * d / g * excess;
}

std::vector<int> AttackableSet(const NetworkModel& model,
                               const JammerModel& jammer) {
  std::vector<int> nodes;
  for (int j = 0; j < model.NumNodes(); ++j) {
    if (RequiredJammingPower(model, jammer, j) <= jammer.power_budget()) {
      nodes.push_back(j);
    }
  }
  return nodes;
}

}  // namespace jamgame
