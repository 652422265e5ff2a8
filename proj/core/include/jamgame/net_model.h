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

#ifndef JAMGAME_NET_MODEL_H_
#define JAMGAME_NET_MODEL_H_

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace jamgame {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Minimum admissible jammer-to-receiver distance. Closer placements would
// make the received jamming power unbounded and are rejected.
inline constexpr double kDistanceFloor = 1e-9;

// Peer-to-peer wireless network: fading gains h(i,j) from sender i to
// receiver j, transmit powers P(i,j), background noise and the receiver SINR
// threshold shared by all nodes.
//
// Interference at receiver j for the link i -> j sums h(k,j) P(k,j) over all
// k other than i and j, and is only applied when include_interference is set.
class NetworkModel {
 public:
  NetworkModel(Eigen::MatrixXd gains, Eigen::MatrixXd powers,
               double noise_power, double sinr_threshold,
               bool include_interference, std::vector<Point> positions = {});

  // Uniform power allocation: every node sends its configured level on all
  // of its outgoing channels, P(i,j) = node_powers[i] for j != i.
  static Eigen::MatrixXd UniformPowerMatrix(std::span<const double> node_powers);

  int NumNodes() const { return static_cast<int>(gains_.rows()); }
  const Eigen::MatrixXd& gains() const { return gains_; }
  const Eigen::MatrixXd& powers() const { return powers_; }
  double noise_power() const { return noise_power_; }
  double sinr_threshold() const { return sinr_threshold_; }
  bool include_interference() const { return include_interference_; }
  bool has_positions() const { return !positions_.empty(); }
  const std::vector<Point>& positions() const { return positions_; }

  NetworkModel WithSinrThreshold(double sinr_threshold) const;
  NetworkModel WithPowers(Eigen::MatrixXd powers) const;

  // Received signal power h(i,j) P(i,j) on the link i -> j.
  double SignalPower(int sender, int receiver) const;
  // Zero when interference is disabled.
  double Interference(int sender, int receiver) const;
  // Unjammed SINR of the link i -> j.
  double Sinr(int sender, int receiver) const;

  // Throws std::out_of_range for bad indices and std::invalid_argument when
  // sender == receiver.
  void CheckLink(int sender, int receiver) const;
  void CheckNode(int node) const;

 private:
  Eigen::MatrixXd gains_;
  Eigen::MatrixXd powers_;
  double noise_power_;
  double sinr_threshold_;
  bool include_interference_;
  std::vector<Point> positions_;
};

class JammerModel {
 public:
  JammerModel(Point position, double power_budget, std::vector<double> gains);

  const Point& position() const { return position_; }
  double power_budget() const { return power_budget_; }
  const std::vector<double>& gains() const { return gains_; }

  // Distance to node j; throws GeometryError below kDistanceFloor and
  // std::invalid_argument when the network has no node positions.
  double DistanceTo(const NetworkModel& model, int node) const;
  // g_j J / d_j^2.
  double ReceivedPower(const NetworkModel& model, int node) const;

 private:
  Point position_;
  double power_budget_;
  std::vector<double> gains_;
};

// Undirected simple graph over a subset of the network's nodes. Vertices are
// addressed by local position; labels() maps positions to node indices.
class TopologyGraph {
 public:
  explicit TopologyGraph(int num_vertices);
  explicit TopologyGraph(std::vector<int> labels);

  int NumVertices() const { return static_cast<int>(labels_.size()); }
  int NumEdges() const { return num_edges_; }
  const std::vector<int>& labels() const { return labels_; }
  // Local position of a node label, or -1 if it is not a vertex.
  int PositionOf(int label) const;

  void AddEdge(int u, int v);
  bool HasEdge(int u, int v) const;
  int Degree(int u) const;
  // Edges as (u, v) local positions with u < v, lexicographic order.
  std::vector<std::pair<int, int>> Edges() const;

  friend bool operator==(const TopologyGraph&, const TopologyGraph&) = default;

 private:
  void CheckVertex(int u) const;

  std::vector<int> labels_;
  std::vector<char> adjacency_;
  int num_edges_ = 0;
};

// Shannon-type throughput ln(1 + SINR) of the link sender -> receiver, in nats.
double Throughput(const NetworkModel& model, int sender, int receiver);

// SINR of sender -> receiver with the jammer's received power added to the
// receiver-side denominator.
double JammedSinr(const NetworkModel& model, const JammerModel& jammer,
                  int sender, int receiver);

// True when the jammed SINR falls below the threshold.
bool IsLinkBroken(const NetworkModel& model, const JammerModel& jammer,
                  int sender, int receiver);

// Duplex rule: both directions must meet the SINR threshold unjammed.
bool LinkExists(const NetworkModel& model, int i, int j);

TopologyGraph BuildTopology(const NetworkModel& model);

// Minimal jamming budget that breaks every incoming link of node j:
// (d_j^2 / g_j) max_i [h(i,j) P(i,j) / omega - sigma^2 - I]_+.
// Returns +infinity when g_j = 0 and some link needs breaking.
double RequiredJammingPower(const NetworkModel& model,
                            const JammerModel& jammer, int node);

// Nodes whose required jamming power fits in the jammer's budget, ascending.
std::vector<int> AttackableSet(const NetworkModel& model,
                               const JammerModel& jammer);

}  // namespace jamgame

#endif  // JAMGAME_NET_MODEL_H_
