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

#include "jamgame/costs.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "jamgame/spectral.h"

namespace jamgame {

std::string_view CategoryName(CostCategory category) {
  switch (category) {
    case CostCategory::kConnectivity:
      return "connectivity";
    case CostCategory::kThroughput:
      return "throughput";
  }
  return "unknown";
}

std::string_view CategoryLabel(CostCategory category) {
  return category == CostCategory::kConnectivity ? "c" : "t";
}

CostVector::CostVector(CostCategory category, std::vector<double> values,
                       std::optional<std::vector<int>> attackable)
    : category_(category), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("costs: empty cost vector");
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("costs: entries must be finite and >= 0");
    }
  }
  order_.resize(values_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [this](int a, int b) { return values_[a] < values_[b]; });
  if (attackable) {
    auto nodes = std::move(*attackable);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (int node : nodes) {
      if (node < 0 || node >= size()) {
        throw std::out_of_range("attackable: node index out of range");
      }
    }
    if (nodes.empty()) {
      throw std::invalid_argument("attackable: no node can be attacked");
    }
    attackable_ = std::move(nodes);
  }
}

bool CostVector::IsAttackable(int node) const {
  if (!attackable_) return node >= 0 && node < size();
  return std::binary_search(attackable_->begin(), attackable_->end(), node);
}

bool CostVector::AllAttackable() const {
  return !attackable_ || static_cast<int>(attackable_->size()) == size();
}

CostVector CostVector::WithAttackable(std::vector<int> nodes) const {
  return CostVector(category_, values_, std::move(nodes));
}

std::vector<double> AscendingView::ToOriginal(
    const std::vector<double>& by_rank) const {
  std::vector<double> out(by_rank.size());
  for (size_t k = 0; k < by_rank.size(); ++k) out[order[k]] = by_rank[k];
  return out;
}

std::vector<double> AscendingView::ToSorted(
    const std::vector<double>& by_node) const {
  std::vector<double> out(by_node.size());
  for (size_t k = 0; k < by_node.size(); ++k) out[k] = by_node[order[k]];
  return out;
}

AscendingView MakeAscendingView(const CostVector& costs) {
  AscendingView view;
  view.order = costs.order();
  view.sorted.reserve(view.order.size());
  for (int node : view.order) view.sorted.push_back(costs[node]);
  return view;
}

CostVector ConnectivityCostVector(const TopologyGraph& graph) {
  const int n = graph.NumVertices();
  if (n < 3) {
    throw std::invalid_argument(
        "connectivity costs need a graph with at least 3 vertices");
  }
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) {
    const int label = graph.labels()[i];
    if (label != i) {
      throw std::invalid_argument(
          "connectivity costs expect vertices labelled 0..n-1 in order");
    }
    values[i] = FiedlerValue(RemoveNode(graph, label));
  }
  return CostVector(CostCategory::kConnectivity, std::move(values));
}

CostVector ThroughputCostVector(const NetworkModel& model, bool links_only) {
  const int n = model.NumNodes();
  if (n < 3) {
    throw std::invalid_argument(
        "throughput costs need a network with at least 3 nodes");
  }
  std::optional<TopologyGraph> topology;
  if (links_only) topology = BuildTopology(model);

  // Pairwise throughput, computed once.
  std::vector<double> link(static_cast<size_t>(n) * n, 0.0);
  for (int l = 0; l < n; ++l) {
    for (int j = 0; j < n; ++j) {
      if (l == j) continue;
      if (topology && !topology->HasEdge(l, j)) continue;
      link[l * n + j] = Throughput(model, l, j);
    }
  }
  std::vector<double> values(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double total = 0.0;
    for (int l = 0; l < n; ++l) {
      if (l == i) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || j == l) continue;
        total += link[l * n + j];
      }
    }
    values[i] = total;
  }
  return CostVector(CostCategory::kThroughput, std::move(values));
}

}  // namespace jamgame
