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

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "random_instances.h"

namespace jamgame {
namespace {

TopologyGraph Complete(int m) {
  TopologyGraph g(m);
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) g.AddEdge(u, v);
  }
  return g;
}

TopologyGraph Path(int m) {
  TopologyGraph g(m);
  for (int u = 0; u + 1 < m; ++u) g.AddEdge(u, u + 1);
  return g;
}

// Characteristic polynomial coefficients c[0..m] (c[m] = 1) by the
// Faddeev-LeVerrier recursion; exact for small integer matrices.
std::vector<double> CharacteristicPolynomial(const Eigen::MatrixXd& a) {
  const int m = static_cast<int>(a.rows());
  std::vector<double> c(m + 1, 0.0);
  c[m] = 1.0;
  Eigen::MatrixXd mk = Eigen::MatrixXd::Zero(m, m);
  for (int k = 1; k <= m; ++k) {
    mk = a * mk + c[m - k + 1] * Eigen::MatrixXd::Identity(m, m);
    c[m - k] = -(a * mk).trace() / k;
  }
  return c;
}

// Elementary symmetric polynomials e_0..e_m of the given values.
std::vector<double> ElementarySymmetric(const std::vector<double>& x) {
  std::vector<double> e(x.size() + 1, 0.0);
  e[0] = 1.0;
  for (double v : x) {
    for (size_t k = e.size() - 1; k >= 1; --k) e[k] += v * e[k - 1];
  }
  return e;
}

TEST(LaplacianTest, Triangle) {
  const Eigen::MatrixXd expected{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  EXPECT_EQ(Laplacian(Complete(3)), expected);
}

TEST(LaplacianTest, EdgelessIsZero) {
  EXPECT_EQ(Laplacian(TopologyGraph(3)), Eigen::MatrixXd::Zero(3, 3));
}

TEST(LaplacianTest, PathOfThree) {
  const Eigen::MatrixXd expected{{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  EXPECT_EQ(Laplacian(Path(3)), expected);
}

TEST(FiedlerValueTest, CompleteGraphs) {
  for (int m = 2; m <= 10; ++m) {
    EXPECT_NEAR(FiedlerValue(Complete(m)), m, 1e-9) << "K_" << m;
  }
}

TEST(FiedlerValueTest, PathOfThreeIsOne) {
  EXPECT_NEAR(FiedlerValue(Path(3)), 1.0, 1e-9);
  const std::vector<double> spectrum = LaplacianSpectrum(Path(3));
  EXPECT_NEAR(spectrum[0], 0.0, 1e-12);
  EXPECT_NEAR(spectrum[1], 1.0, 1e-12);
  EXPECT_NEAR(spectrum[2], 3.0, 1e-12);
}

TEST(FiedlerValueTest, DisconnectedIsExactlyZero) {
  TopologyGraph g(5);
  g.AddEdge(0, 1);
  g.AddEdge(1, 2);
  g.AddEdge(3, 4);
  EXPECT_EQ(FiedlerValue(g), 0.0);
  EXPECT_EQ(FiedlerValue(TopologyGraph(4)), 0.0);
}

TEST(FiedlerValueTest, NeedsTwoVertices) {
  EXPECT_THROW(FiedlerValue(TopologyGraph(1)), std::invalid_argument);
}

TEST(ComponentCountTest, Examples) {
  EXPECT_EQ(ComponentCount(Complete(3)), 1);
  EXPECT_EQ(ComponentCount(TopologyGraph(4)), 4);
  TopologyGraph two_edges(4);
  two_edges.AddEdge(0, 1);
  two_edges.AddEdge(2, 3);
  EXPECT_EQ(ComponentCount(two_edges), 2);
}

TEST(RemoveNodeTest, CompleteGraphLosesAVertex) {
  for (int label = 0; label < 4; ++label) {
    const TopologyGraph sub = RemoveNode(Complete(4), label);
    EXPECT_EQ(sub.NumVertices(), 3);
    EXPECT_EQ(sub.NumEdges(), 3);
    EXPECT_EQ(sub.PositionOf(label), -1);
  }
}

TEST(RemoveNodeTest, StarCenterLeavesEdgelessLeaves) {
  TopologyGraph star(4);
  for (int leaf = 1; leaf < 4; ++leaf) star.AddEdge(0, leaf);
  const TopologyGraph sub = RemoveNode(star, 0);
  EXPECT_EQ(sub.labels(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(sub.NumEdges(), 0);
}

TEST(RemoveNodeTest, PathKeepsLabels) {
  const TopologyGraph sub = RemoveNode(Path(4), 1);
  EXPECT_EQ(sub.labels(), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(sub.NumEdges(), 1);
  EXPECT_TRUE(sub.HasEdge(sub.PositionOf(2), sub.PositionOf(3)));
  EXPECT_EQ(sub.Degree(sub.PositionOf(0)), 0);
  // Labels survive a second removal.
  const TopologyGraph again = RemoveNode(sub, 3);
  EXPECT_EQ(again.labels(), (std::vector<int>{0, 2}));
}

TEST(RemoveNodeTest, Errors) {
  EXPECT_THROW(RemoveNode(Path(2), 0), std::invalid_argument);
  EXPECT_THROW(RemoveNode(Path(4), 7), std::out_of_range);
}

TEST(SpectralPropertyTest, ZeroEigenvaluesCountComponents) {
  testing::Rng rng(0x5eed0101);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = rng.UniformInt(2, 12);
    const TopologyGraph g = testing::RandomGraph(rng, m, rng.Uniform(0.0, 0.6));
    const std::vector<double> spectrum = LaplacianSpectrum(g);
    int zeros = 0;
    for (double lambda : spectrum) {
      EXPECT_GE(lambda, -kZeroEigenvalueTolerance);
      zeros += lambda < kZeroEigenvalueTolerance;
    }
    const int components = ComponentCount(g);
    EXPECT_EQ(zeros, components);
    EXPECT_EQ(FiedlerValue(g) == 0.0, components >= 2);
  }
}

TEST(SpectralPropertyTest, AddingAnEdgeNeverLowersFiedlerValue) {
  testing::Rng rng(0x5eed0102);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = rng.UniformInt(2, 12);
    TopologyGraph g = testing::RandomGraph(rng, m, rng.Uniform(0.1, 0.7));
    const double before = FiedlerValue(g);
    const int u = rng.UniformInt(0, m - 1);
    const int v = (u + rng.UniformInt(1, m - 1)) % m;
    g.AddEdge(u, v);
    EXPECT_GE(FiedlerValue(g), before - 1e-12);
  }
}

TEST(SpectralPropertyTest, LaplacianRowSumsAndSymmetryAreExact) {
  testing::Rng rng(0x5eed0103);
  for (int trial = 0; trial < 100; ++trial) {
    const TopologyGraph g =
        testing::RandomGraph(rng, rng.UniformInt(1, 20), rng.Uniform(0, 1));
    const Eigen::MatrixXd l = Laplacian(g);
    EXPECT_EQ(l, l.transpose());
    for (int u = 0; u < l.rows(); ++u) {
      EXPECT_EQ(l.row(u).sum(), 0.0);
      EXPECT_EQ(l(u, u), g.Degree(u));
    }
  }
}

// Every simple graph on up to 4 vertices: the computed spectrum must
// reproduce the coefficients of the characteristic polynomial.
TEST(SpectralPropertyTest, MatchesCharacteristicPolynomialForSmallGraphs) {
  for (int m = 2; m <= 4; ++m) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < m; ++u) {
      for (int v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
    }
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      TopologyGraph g(m);
      for (size_t b = 0; b < pairs.size(); ++b) {
        if (mask & (1u << b)) g.AddEdge(pairs[b].first, pairs[b].second);
      }
      const std::vector<double> c = CharacteristicPolynomial(Laplacian(g));
      const std::vector<double> e = ElementarySymmetric(LaplacianSpectrum(g));
      for (int k = 1; k <= m; ++k) {
        const double expected = (k % 2 == 0 ? 1.0 : -1.0) * c[m - k];
        EXPECT_NEAR(e[k], expected, 1e-9) << "m=" << m << " mask=" << mask;
      }
    }
  }
}

TEST(SpectralPropertyTest, LargeGraphsStayAccurate) {
  // K_64 and the 64-cycle have closed-form spectra.
  EXPECT_NEAR(FiedlerValue(Complete(64)), 64.0, 1e-9);
  TopologyGraph cycle(64);
  for (int u = 0; u < 64; ++u) cycle.AddEdge(u, (u + 1) % 64);
  EXPECT_NEAR(FiedlerValue(cycle), 2.0 - 2.0 * std::cos(2.0 * M_PI / 64.0),
              1e-9);
}

}  // namespace
}  // namespace jamgame
