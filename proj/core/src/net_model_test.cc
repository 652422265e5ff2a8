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

#include <cmath>
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>

#include "jamgame/errors.h"
#include "random_instances.h"

namespace jamgame {
namespace {

// Three nodes on a line, no interference unless requested.
NetworkModel LineModel(const Eigen::MatrixXd& h, const Eigen::MatrixXd& p,
                       bool interference = false, double omega = 1.0) {
  return NetworkModel(h, p, 1.0, omega, interference,
                      {{0.0, 0.0}, {10.0, 0.0}, {20.0, 0.0}});
}

TEST(ThroughputTest, ShannonFormulaWithoutInterference) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(3, 3);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(3, 3);
  h(0, 1) = 2.0;
  p(0, 1) = 3.0;
  const NetworkModel model = LineModel(h, p);
  EXPECT_NEAR(Throughput(model, 0, 1), std::log(7.0), 1e-12);
  EXPECT_NEAR(Throughput(model, 0, 1), 1.945910, 1e-6);
  EXPECT_EQ(Throughput(model, 1, 0), 0.0);
}

TEST(ThroughputTest, InterferenceExcludesSenderAndReceiver) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(3, 3);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(3, 3);
  h(0, 2) = 1.0;
  p(0, 2) = 10.0;
  h(1, 2) = 2.0;
  p(1, 2) = 2.0;  // interferer contributes 4 at node 2
  const NetworkModel on = LineModel(h, p, /*interference=*/true);
  EXPECT_NEAR(Throughput(on, 0, 2), std::log(3.0), 1e-12);
  EXPECT_NEAR(Throughput(on, 0, 2), 1.098612, 1e-6);
  const NetworkModel off = LineModel(h, p, /*interference=*/false);
  EXPECT_NEAR(Throughput(off, 0, 2), std::log(11.0), 1e-12);
}

TEST(ThroughputTest, RejectsBadIndices) {
  const NetworkModel model = LineModel(Eigen::MatrixXd::Zero(3, 3),
                                       Eigen::MatrixXd::Zero(3, 3));
  EXPECT_THROW(Throughput(model, 1, 1), std::invalid_argument);
  EXPECT_THROW(Throughput(model, 0, 3), std::out_of_range);
  EXPECT_THROW(Throughput(model, -1, 0), std::out_of_range);
}

TEST(NetworkModelTest, ValidatesInputs) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(3, 3);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(3, 3);
  Eigen::MatrixXd bad_diag = h;
  bad_diag(1, 1) = 0.5;
  EXPECT_THROW(NetworkModel(bad_diag, p, 1.0, 1.0, false),
               std::invalid_argument);
  Eigen::MatrixXd negative = h;
  negative(0, 1) = -1.0;
  EXPECT_THROW(NetworkModel(negative, p, 1.0, 1.0, false),
               std::invalid_argument);
  EXPECT_THROW(NetworkModel(h, Eigen::MatrixXd::Zero(2, 2), 1.0, 1.0, false),
               std::invalid_argument);
  EXPECT_THROW(NetworkModel(h, p, 0.0, 1.0, false), std::invalid_argument);
  EXPECT_THROW(NetworkModel(h, p, 1.0, 0.0, false), std::invalid_argument);
  EXPECT_THROW(NetworkModel(h, p, 1.0, 1.0, false, {{0, 0}}),
               std::invalid_argument);
}

TEST(NetworkModelTest, UniformPowersExpandPerSender) {
  const std::vector<double> powers = {1.0, 2.0, 3.0};
  const Eigen::MatrixXd p = NetworkModel::UniformPowerMatrix(powers);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(p(i, j), i == j ? 0.0 : powers[i]);
    }
  }
}

class JammedSinrTest : public ::testing::Test {
 protected:
  // Link 0 -> 1 with h P = 10; receiver at the origin, jammer 2 away.
  JammedSinrTest() {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2, 2);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2, 2);
    h(0, 1) = 1.0;
    p(0, 1) = 10.0;
    model_ = std::make_unique<NetworkModel>(
        h, p, 1.0, 2.0, false, std::vector<Point>{{5.0, 5.0}, {0.0, 0.0}});
  }
  std::unique_ptr<NetworkModel> model_;
};

TEST_F(JammedSinrTest, AddsJammingToDenominator) {
  const JammerModel jammer({2.0, 0.0}, 9.0, {0.0, 2.0});
  EXPECT_NEAR(JammedSinr(*model_, jammer, 0, 1), 10.0 / 5.5, 1e-12);
  EXPECT_NEAR(JammedSinr(*model_, jammer, 0, 1), 1.818182, 1e-6);
  EXPECT_TRUE(IsLinkBroken(*model_, jammer, 0, 1));
}

TEST_F(JammedSinrTest, ZeroBudgetIsUnjammed) {
  const JammerModel silent({2.0, 0.0}, 0.0, {0.0, 2.0});
  EXPECT_DOUBLE_EQ(JammedSinr(*model_, silent, 0, 1), 10.0);
  EXPECT_FALSE(IsLinkBroken(*model_, silent, 0, 1));
}

TEST_F(JammedSinrTest, RejectsJammerOnTopOfReceiver) {
  const JammerModel on_top({0.0, 0.0}, 9.0, {0.0, 2.0});
  EXPECT_THROW(JammedSinr(*model_, on_top, 0, 1), GeometryError);
  const JammerModel near({5e-10, 0.0}, 9.0, {0.0, 2.0});
  EXPECT_THROW(JammedSinr(*model_, near, 0, 1), GeometryError);
}

TEST(LinkExistsTest, DuplexRule) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(3, 3);
  Eigen::MatrixXd p = Eigen::MatrixXd::Constant(3, 3, 1.0);
  h(0, 1) = 10.0;
  h(1, 0) = 0.5;
  h(1, 2) = 10.0;
  h(2, 1) = 10.0;
  const NetworkModel model = LineModel(h, p);
  EXPECT_FALSE(LinkExists(model, 0, 1));  // reverse direction fails
  EXPECT_FALSE(LinkExists(model, 0, 2));  // no channel
  EXPECT_TRUE(LinkExists(model, 1, 2));
}

TEST(BuildTopologyTest, TwoNodesAndThresholdDominance) {
  Eigen::MatrixXd h{{0.0, 3.0}, {4.0, 0.0}};
  Eigen::MatrixXd p = NetworkModel::UniformPowerMatrix(std::vector{1.0, 1.0});
  const TopologyGraph g = BuildTopology(NetworkModel(h, p, 1.0, 2.0, false));
  ASSERT_EQ(g.NumEdges(), 1);
  EXPECT_TRUE(g.HasEdge(0, 1));
  const TopologyGraph none =
      BuildTopology(NetworkModel(h, p, 1.0, 100.0, false));
  EXPECT_EQ(none.NumVertices(), 2);
  EXPECT_EQ(none.NumEdges(), 0);
}

TEST(RequiredJammingPowerTest, SingleSender) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2, 2);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2, 2);
  h(0, 1) = 1.0;
  p(0, 1) = 10.0;
  const NetworkModel model(h, p, 1.0, 1.0, false, {{9.0, 9.0}, {0.0, 0.0}});
  const JammerModel jammer({0.0, 2.0}, 1.0, {0.0, 2.0});
  EXPECT_NEAR(RequiredJammingPower(model, jammer, 1), 18.0, 1e-12);
  // Node 0 hears nothing, so the clamp is active.
  EXPECT_EQ(RequiredJammingPower(model, jammer, 0), 0.0);
}

TEST(RequiredJammingPowerTest, MaxOverSendersAndUnjammable) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(3, 3);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(3, 3);
  h(0, 2) = 1.0;
  p(0, 2) = 10.0;  // clamp 9
  h(1, 2) = 1.0;
  p(1, 2) = 4.0;   // clamp 3
  const NetworkModel model(h, p, 1.0, 1.0, false,
                           {{5.0, 5.0}, {6.0, 6.0}, {0.0, 0.0}});
  EXPECT_NEAR(RequiredJammingPower(model, JammerModel({1.0, 0.0}, 1.0,
                                                      {1.0, 1.0, 1.0}),
                                   2),
              9.0, 1e-12);
  EXPECT_EQ(RequiredJammingPower(
                model, JammerModel({1.0, 0.0}, 1.0, {1.0, 1.0, 0.0}), 2),
            std::numeric_limits<double>::infinity());
}

TEST(AttackableSetTest, ThresholdsRequiredPower) {
  // Required powers (18, 5, inf).
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(3, 3);
  h(1, 0) = 1.0;
  h(0, 1) = 1.0;
  h(0, 2) = 1.0;
  const Eigen::MatrixXd p =
      NetworkModel::UniformPowerMatrix(std::vector{6.0, 10.0, 1.0});
  const NetworkModel model(h, p, 1.0, 1.0, false,
                           {{2.0, 0.0}, {0.0, 1.0}, {0.0, -3.0}});
  const std::vector<double> g = {2.0, 1.0, 0.0};
  const JammerModel budget10({0.0, 0.0}, 10.0, g);
  EXPECT_NEAR(RequiredJammingPower(model, budget10, 0), 18.0, 1e-12);
  EXPECT_NEAR(RequiredJammingPower(model, budget10, 1), 5.0, 1e-12);
  EXPECT_TRUE(std::isinf(RequiredJammingPower(model, budget10, 2)));
  EXPECT_EQ(AttackableSet(model, budget10), std::vector<int>{1});
  EXPECT_TRUE(AttackableSet(model, JammerModel({0.0, 0.0}, 0.0, g)).empty());
  EXPECT_EQ(AttackableSet(model, JammerModel({0.0, 0.0}, 18.0, g)),
            (std::vector<int>{0, 1}));
  const JammerModel reachable({0.0, 0.0}, 45.0, {2.0, 1.0, 1.0});
  EXPECT_EQ(AttackableSet(model, reachable), (std::vector<int>{0, 1, 2}));
}

TEST(TopologyGraphTest, SymmetricIrreflexive) {
  TopologyGraph g(3);
  g.AddEdge(0, 2);
  g.AddEdge(2, 0);
  EXPECT_EQ(g.NumEdges(), 1);
  EXPECT_TRUE(g.HasEdge(2, 0));
  EXPECT_THROW(g.AddEdge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.AddEdge(0, 3), std::out_of_range);
}

TEST(NetModelPropertyTest, DuplexSymmetryAndThresholdMonotonicity) {
  testing::Rng rng(0x5eed0001);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.UniformInt(2, 8);
    const bool interference = rng.Bernoulli(0.5);
    const double omega1 = rng.Uniform(0.05, 5.0);
    const double omega2 = omega1 * rng.Uniform(1.0, 3.0);
    const NetworkModel low = testing::RandomNetwork(rng, n, omega1,
                                                    interference);
    const NetworkModel high = low.WithSinrThreshold(omega2);
    const TopologyGraph g_low = BuildTopology(low);
    const TopologyGraph g_high = BuildTopology(high);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        EXPECT_EQ(LinkExists(low, i, j), LinkExists(low, j, i));
        if (g_high.HasEdge(i, j)) EXPECT_TRUE(g_low.HasEdge(i, j));
        EXPECT_GE(Throughput(low, i, j), 0.0);
      }
    }
  }
}

TEST(NetModelPropertyTest, RaisingPowerNeverRemovesEdges) {
  testing::Rng rng(0x5eed0002);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.UniformInt(2, 8);
    const NetworkModel model =
        testing::RandomNetwork(rng, n, rng.Uniform(0.1, 10.0), false);
    Eigen::MatrixXd raised = model.powers();
    const int i = rng.UniformInt(0, n - 1);
    const int j = (i + rng.UniformInt(1, n - 1)) % n;
    raised(i, j) += rng.Uniform(0.0, 10.0);
    const TopologyGraph before = BuildTopology(model);
    const TopologyGraph after = BuildTopology(model.WithPowers(raised));
    for (const auto& [u, v] : before.Edges()) EXPECT_TRUE(after.HasEdge(u, v));
  }
}

TEST(NetModelPropertyTest, RequiredPowerScalingAndMonotonicity) {
  testing::Rng rng(0x5eed0003);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.UniformInt(2, 6);
    const NetworkModel model =
        testing::RandomNetwork(rng, n, rng.Uniform(0.05, 2.0), rng.Bernoulli(0.5));
    std::vector<double> g(n);
    for (double& x : g) x = rng.Uniform(0.1, 2.0);
    const int j = rng.UniformInt(0, n - 1);
    const Point y = model.positions()[j];
    const double dx = rng.Uniform(0.5, 5.0);
    const JammerModel near({y.x + dx, y.y}, 1.0, g);
    const JammerModel far({y.x + 2.0 * dx, y.y}, 1.0, g);
    const double r_near = RequiredJammingPower(model, near, j);
    const double r_far = RequiredJammingPower(model, far, j);
    EXPECT_GE(r_near, 0.0);
    EXPECT_NEAR(r_far, 4.0 * r_near, 1e-9 * std::max(1.0, r_far));
    const NetworkModel stricter =
        model.WithSinrThreshold(model.sinr_threshold() * 1.5);
    EXPECT_LE(RequiredJammingPower(stricter, near, j), r_near + 1e-12);
  }
}

TEST(NetModelPropertyTest, ThroughputDecreasesWithInterference) {
  testing::Rng rng(0x5eed0004);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.UniformInt(3, 6);
    const NetworkModel model = testing::RandomNetwork(rng, n, 1.0, true);
    const int i = 0;
    const int j = 1;
    const int k = 2;
    Eigen::MatrixXd louder = model.powers();
    louder(k, j) += rng.Uniform(0.5, 5.0);
    const double base = Throughput(model, i, j);
    const double jammed = Throughput(model.WithPowers(louder), i, j);
    if (model.SignalPower(i, j) > 0.0 && model.gains()(k, j) > 0.0) {
      EXPECT_LT(jammed, base);
    }
  }
}

}  // namespace
}  // namespace jamgame
