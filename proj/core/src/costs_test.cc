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

#include <gtest/gtest.h>

#include "jamgame/spectral.h"
#include "random_instances.h"

namespace jamgame {
namespace {

TEST(ConnectivityCostTest, StarWithChord) {
  TopologyGraph g(4);
  g.AddEdge(0, 1);
  g.AddEdge(0, 2);
  g.AddEdge(0, 3);
  g.AddEdge(1, 2);
  const CostVector costs = ConnectivityCostVector(g);
  EXPECT_EQ(costs.category(), CostCategory::kConnectivity);
  ASSERT_EQ(costs.size(), 4);
  EXPECT_EQ(costs[0], 0.0);
  EXPECT_NEAR(costs[1], 1.0, 1e-12);
  EXPECT_NEAR(costs[2], 1.0, 1e-12);
  EXPECT_NEAR(costs[3], 3.0, 1e-12);
}

TEST(ConnectivityCostTest, CompleteGraphIsUniform) {
  TopologyGraph k4(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.AddEdge(u, v);
  }
  const CostVector costs = ConnectivityCostVector(k4);
  for (double c : costs.values()) EXPECT_NEAR(c, 3, 1e-12);
}

TEST(ConnectivityCostTest, CutVertexCostsZero) {
  // Two triangles sharing vertex 2.
  TopologyGraph g(5);
  g.AddEdge(0, 1);
  g.AddEdge(0, 2);
  g.AddEdge(1, 2);
  g.AddEdge(2, 3);
  g.AddEdge(2, 4);
  g.AddEdge(3, 4);
  const CostVector costs = ConnectivityCostVector(g);
  EXPECT_EQ(costs[2], 0.0);
  for (int i : {0, 1, 3, 4}) EXPECT_GT(costs[i], 0.0);
}

TEST(ConnectivityCostTest, NeedsThreeVertices) {
  TopologyGraph g(2);
  g.AddEdge(0, 1);
  EXPECT_THROW(ConnectivityCostVector(g), std::invalid_argument);
}

TEST(ThroughputCostTest, ThreeEqualLinks) {
  // h P / sigma^2 = 6 on every ordered pair.
  const Eigen::MatrixXd h =
      Eigen::MatrixXd::Constant(3, 3, 2.0) - 2.0 * Eigen::MatrixXd::Identity(3, 3);
  const NetworkModel model(
      h, NetworkModel::UniformPowerMatrix(std::vector{3.0, 3.0, 3.0}), 1.0,
      1.0, false);
  const CostVector costs = ThroughputCostVector(model);
  EXPECT_EQ(costs.category(), CostCategory::kThroughput);
  for (double c : costs.values()) {
    EXPECT_NEAR(c, 2.0 * std::log(7.0), 1e-12);
    EXPECT_NEAR(c, 3.891820, 1e-6);
  }
}

TEST(ThroughputCostTest, ZeroGainsGiveZeroCosts) {
  const NetworkModel model(Eigen::MatrixXd::Zero(4, 4),
                           Eigen::MatrixXd::Constant(4, 4, 5.0), 1.0, 1.0,
                           false);
  const CostVector costs = ThroughputCostVector(model);
  for (double c : costs.values()) EXPECT_EQ(c, 0.0);
}

TEST(ThroughputCostTest, LinksOnlyDropsPairsWithoutDuplexLink) {
  // Only 0 <-> 1 passes omega = 5; the other pairs still carry throughput.
  Eigen::MatrixXd h{{0, 10, 1}, {10, 0, 1}, {1, 1, 0}};
  const NetworkModel model(h, Eigen::MatrixXd::Constant(3, 3, 1.0), 1.0, 5.0,
                           false);
  const CostVector all = ThroughputCostVector(model);
  const CostVector links = ThroughputCostVector(model, /*links_only=*/true);
  EXPECT_NEAR(links[2], 2.0 * std::log(11.0), 1e-12);
  EXPECT_EQ(links[0], 0.0);
  EXPECT_EQ(links[1], 0.0);
  EXPECT_NEAR(all[0], 2.0 * std::log(2.0), 1e-12);
}

TEST(ThroughputCostTest, SmallestCostRemovesBusiestNode) {
  testing::Rng rng(0x5eed0201);
  const NetworkModel model = testing::RandomNetwork(rng, 7, 1.0, false);
  const CostVector costs = ThroughputCostVector(model);
  // Brute force: throughput touching each node.
  std::vector<double> incident(7, 0.0);
  for (int l = 0; l < 7; ++l) {
    for (int j = 0; j < 7; ++j) {
      if (l == j) continue;
      incident[l] += Throughput(model, l, j);
      incident[j] += Throughput(model, l, j);
    }
  }
  const auto busiest = std::max_element(incident.begin(), incident.end()) -
                       incident.begin();
  EXPECT_EQ(costs.order().front(), busiest);
}

TEST(AscendingViewTest, SortsAndRecordsPermutation) {
  const AscendingView view =
      MakeAscendingView(CostVector(CostCategory::kThroughput, {3.0, 1.0, 2.0}));
  EXPECT_EQ(view.sorted, (std::vector<double>{1.0, 2.0, 3.0}));
  EXPECT_EQ(view.order, (std::vector<int>{1, 2, 0}));
}

TEST(AscendingViewTest, SortedInputGivesIdentity) {
  const AscendingView view =
      MakeAscendingView(CostVector(CostCategory::kThroughput, {1.0, 2.0, 5.0}));
  EXPECT_EQ(view.order, (std::vector<int>{0, 1, 2}));
}

TEST(AscendingViewTest, TiesAreStableByNodeIndex) {
  const AscendingView view =
      MakeAscendingView(CostVector(CostCategory::kThroughput, {2.0, 1.0, 1.0}));
  EXPECT_EQ(view.order, (std::vector<int>{1, 2, 0}));
}

TEST(CostVectorTest, Validation) {
  EXPECT_THROW(CostVector(CostCategory::kConnectivity, {}),
               std::invalid_argument);
  EXPECT_THROW(CostVector(CostCategory::kConnectivity, {1.0, -0.5}),
               std::invalid_argument);
  EXPECT_THROW(CostVector(CostCategory::kConnectivity, {1.0, 2.0},
                          std::vector<int>{2}),
               std::out_of_range);
  EXPECT_THROW(CostVector(CostCategory::kConnectivity, {1.0, 2.0},
                          std::vector<int>{}),
               std::invalid_argument);
  const CostVector masked(CostCategory::kConnectivity, {1.0, 2.0, 3.0},
                          std::vector<int>{2, 0, 2});
  EXPECT_EQ(*masked.attackable(), (std::vector<int>{0, 2}));
  EXPECT_FALSE(masked.IsAttackable(1));
  EXPECT_FALSE(masked.AllAttackable());
}

TEST(CostPropertyTest, ConnectivityCostsFollowRelabelling) {
  testing::Rng rng(0x5eed0202);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.UniformInt(3, 9);
    const TopologyGraph g = testing::RandomGraph(rng, n, rng.Uniform(0.2, 0.9));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    TopologyGraph relabelled(n);
    for (const auto& [u, v] : g.Edges()) relabelled.AddEdge(perm[u], perm[v]);
    const CostVector a = ConnectivityCostVector(g);
    const CostVector b = ConnectivityCostVector(relabelled);
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(a[i], b[perm[i]], 1e-9);
      EXPECT_GE(a[i], 0.0);
      EXPECT_EQ(a[i] == 0.0, ComponentCount(RemoveNode(g, i)) >= 2);
    }
  }
}

TEST(CostPropertyTest, ThroughputConservation) {
  testing::Rng rng(0x5eed0203);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.UniformInt(3, 8);
    const NetworkModel model = testing::RandomNetwork(rng, n, 1.0, false);
    const CostVector costs = ThroughputCostVector(model);
    double total = 0.0;
    std::vector<double> incident(n, 0.0);
    for (int l = 0; l < n; ++l) {
      for (int j = 0; j < n; ++j) {
        if (l == j) continue;
        const double t = Throughput(model, l, j);
        total += t;
        incident[l] += t;
        incident[j] += t;
      }
    }
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(costs[i] + incident[i], total, 1e-9 * std::max(1.0, total));
    }
  }
}

TEST(CostPropertyTest, PermutationRoundTrip) {
  testing::Rng rng(0x5eed0204);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.UniformInt(1, 10);
    std::vector<double> values(n);
    // Coarse values so ties occur.
    for (double& v : values) v = rng.UniformInt(0, 4);
    const CostVector costs(CostCategory::kConnectivity, values);
    const AscendingView view = MakeAscendingView(costs);
    EXPECT_TRUE(std::is_sorted(view.sorted.begin(), view.sorted.end()));
    for (int k = 0; k + 1 < n; ++k) {
      if (view.sorted[k] == view.sorted[k + 1]) {
        EXPECT_LT(view.order[k], view.order[k + 1]);
      }
    }
    EXPECT_EQ(view.ToOriginal(view.ToSorted(values)), values);
    EXPECT_EQ(view.ToOriginal(view.sorted), values);
  }
}

}  // namespace
}  // namespace jamgame
