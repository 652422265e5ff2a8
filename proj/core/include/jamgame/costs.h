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

#ifndef JAMGAME_COSTS_H_
#define JAMGAME_COSTS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "jamgame/net_model.h"

namespace jamgame {

enum class CostCategory { kConnectivity, kThroughput };

std::string_view CategoryName(CostCategory category);   // "connectivity"
std::string_view CategoryLabel(CostCategory category);  // "c"

// Per-node attack costs in original node indexing, together with the stable
// ascending order the game solver works in. An optional attackable subset
// restricts which nodes the jammer may target.
class CostVector {
 public:
  CostVector(CostCategory category, std::vector<double> values,
             std::optional<std::vector<int>> attackable = std::nullopt);

  CostCategory category() const { return category_; }
  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int node) const { return values_[node]; }

  // order()[k] is the node holding the k-th smallest cost; ties are broken by
  // ascending node index.
  const std::vector<int>& order() const { return order_; }

  const std::optional<std::vector<int>>& attackable() const {
    return attackable_;
  }
  bool IsAttackable(int node) const;
  // True when every node is attackable (no mask, or a mask covering all).
  bool AllAttackable() const;

  CostVector WithAttackable(std::vector<int> nodes) const;

 private:
  CostCategory category_;
  std::vector<double> values_;
  std::vector<int> order_;
  std::optional<std::vector<int>> attackable_;
};

struct AscendingView {
  std::vector<double> sorted;  // sorted[k] = values[order[k]]
  std::vector<int> order;      // sorted position -> original node

  // Scatters a vector laid out in sorted positions back to node indexing.
  std::vector<double> ToOriginal(const std::vector<double>& by_rank) const;
  // Gathers a node-indexed vector into sorted positions.
  std::vector<double> ToSorted(const std::vector<double>& by_node) const;
};

AscendingView MakeAscendingView(const CostVector& costs);

// lambda_i = algebraic connectivity of the graph with node i deleted.
// The graph must cover nodes 0..n-1 and have at least 3 vertices.
CostVector ConnectivityCostVector(const TopologyGraph& graph);

// lambda_i = total throughput over ordered pairs (l, j) avoiding node i. By
// default every ordered pair counts; links_only restricts the sum to pairs
// joined by a duplex link of the unjammed topology.
CostVector ThroughputCostVector(const NetworkModel& model,
                                bool links_only = false);

}  // namespace jamgame

#endif  // JAMGAME_COSTS_H_
