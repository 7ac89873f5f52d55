// Copyright 2026 The Authors.
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

#include "noisebound/matroids.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "noisebound/random_inputs.h"
#include "oracles.h"

namespace noisebound {
namespace {

const double kLn2 = std::log(2.0);

BinaryMatroid FromRows(int n, std::vector<uint64_t> rows) {
  return BinaryMatroid(BitMatrix{n, std::move(rows)});
}

BinaryMatroid Free(int n) {
  std::vector<uint64_t> rows;
  for (int i = 0; i < n; ++i) rows.push_back(uint64_t{1} << i);
  return FromRows(n, rows);
}

BinaryMatroid Coloop() { return FromRows(1, {1}); }
BinaryMatroid Loop() { return FromRows(1, {0}); }
BinaryMatroid Pair() { return FromRows(2, {0b11}); }

oracle::Poly AsPoly(const TuttePolynomial& t) {
  oracle::Poly p;
  for (int i = 0; i <= t.x_degree(); ++i) {
    for (int j = 0; j <= t.y_degree(); ++j) {
      if (t.coeff(i, j) != 0) p[{i, j}] = t.coeff(i, j);
    }
  }
  return p;
}

oracle::Poly Clean(oracle::Poly p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : ++it;
  return p;
}

TEST(MatroidRankTest, Examples) {
  EXPECT_EQ(MatroidRank(Free(5), SubsetMask(0)), 0);
  EXPECT_EQ(MatroidRank(Free(5), SubsetMask::Full(5)), 5);
  EXPECT_EQ(MatroidRank(Pair(), SubsetMask::Full(2)), 1);
  EXPECT_EQ(Pair().rank(), 1);
}

TEST(TutteTest, SmallMatroids) {
  EXPECT_EQ(AsPoly(ComputeTuttePolynomial(Coloop())), (oracle::Poly{{{1, 0}, 1}}));
  EXPECT_EQ(AsPoly(ComputeTuttePolynomial(Loop())), (oracle::Poly{{{0, 1}, 1}}));
  const TuttePolynomial k3 = ComputeTuttePolynomial(GraphicMatroid(CompleteGraph(3)));
  EXPECT_EQ(AsPoly(k3), (oracle::Poly{{{2, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}));
  EXPECT_EQ(static_cast<int64_t>(k3.EvaluateExact(1, 1)), 3);
}

TEST(TutteTest, BasisCountAndSubsetCount) {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    const int n = 4 + i;
    const BinaryMatroid m = RandomBinaryMatroid(n, 3 + i % 3, rng);
    const TuttePolynomial t = ComputeTuttePolynomial(m);
    EXPECT_EQ(static_cast<int64_t>(t.EvaluateExact(2, 2)), int64_t{1} << n);
    int64_t bases = 0;
    for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
      bases += std::popcount(s) == m.rank() && MatroidRank(m, SubsetMask(s)) == m.rank();
    }
    EXPECT_EQ(static_cast<int64_t>(t.EvaluateExact(1, 1)), bases);
    for (const auto& row : t.coeffs()) {
      for (int64_t c : row) EXPECT_GE(c, 0);
    }
  }
  EXPECT_THROW(ComputeTuttePolynomial(Free(25)), CapExceeded);
}

TEST(TutteTest, DeletionContractionAgreement) {
  Rng rng(2);
  std::vector<Graph> graphs{CompleteGraph(3), CompleteGraph(4), CycleGraph(5)};
  for (int i = 0; i < 8; ++i) graphs.push_back(RandomMultigraph(3 + i % 4, 4 + i % 7, rng));
  for (const Graph& g : graphs) {
    ASSERT_LE(g.edge_count(), 10);
    EXPECT_EQ(AsPoly(ComputeTuttePolynomial(GraphicMatroid(g))),
              Clean(oracle::Tutte(g.vertex_count, g.edges)));
  }
}

TEST(MatchedDensityTest, ExponentAndOrdering) {
  EXPECT_NEAR(MatchedDensity(0.5), std::pow(0.5, 1 / (2 * kLn2)), 1e-15);
  for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) EXPECT_GE(MatchedDensity(p), p);
}

TEST(RankGapTest, Examples) {
  const GapReport free = MatroidRankGap(Free(4), 0.4);
  EXPECT_NEAR(free.lhs, 0.0, 1e-15);
  EXPECT_NEAR(free.rhs, 0.0, 1e-15);
  const GapReport zero = MatroidRankGap(Pair(), 0.0);
  EXPECT_DOUBLE_EQ(zero.lhs, 0.0);
  EXPECT_DOUBLE_EQ(zero.rhs, 0.0);
  const GapReport pair = MatroidRankGap(Pair(), 0.5);
  const double t = std::pow(0.5, 1 / (2 * kLn2));
  EXPECT_NEAR(pair.lhs, std::log2(5.0 / 4.0), 1e-15);
  EXPECT_NEAR(pair.rhs, t * t, 1e-15);
  EXPECT_GE(pair.gap, 0.0);
}

TEST(RankGapTest, MatchesOracleAndSampling) {
  Rng rng(3);
  const int n = 10;
  const BinaryMatroid m = RandomBinaryMatroid(n, 4, rng);
  const auto& rows = m.matrix().rows;
  auto deficiency = [&](uint64_t s) {
    return std::popcount(s) - oracle::Rank(oracle::Columns(rows, n, s));
  };
  for (double p : {0.2, 0.5, 0.8}) {
    const GapReport r = MatroidRankGap(m, p);
    EXPECT_NEAR(r.lhs, std::log2(oracle::SubsetSum(n, p, [&](uint64_t s) {
                  return std::exp2(deficiency(s));
                })),
                1e-12);
    EXPECT_NEAR(r.rhs, oracle::SubsetSum(n, MatchedDensity(p), deficiency), 1e-12);
    EXPECT_GE(r.gap, -1e-9);
    const GapReport mc = MatroidRankGap(m, p, Sampling::MonteCarlo(40000, 8));
    EXPECT_NEAR(mc.rhs, r.rhs, 0.05);
  }
}

TEST(TutteIdentityTest, Examples) {
  const TutteIdentityCheck coloop = CheckTutteIdentities(Coloop(), 0.5);
  EXPECT_NEAR(coloop.subset_tutte, 1.0, 1e-15);
  EXPECT_NEAR(coloop.subset_direct, 1.0, 1e-15);
  const TutteIdentityCheck loop = CheckTutteIdentities(Loop(), 0.5);
  EXPECT_NEAR(loop.subset_tutte, 1.5, 1e-15);
  EXPECT_NEAR(loop.subset_direct, 1.5, 1e-15);
  EXPECT_THROW(CheckTutteIdentities(Loop(), 0.0), std::invalid_argument);
  EXPECT_THROW(CheckTutteIdentities(Loop(), 1.0), std::invalid_argument);
}

TEST(TutteIdentityTest, BothFormsOnRandomMatroids) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const BinaryMatroid m = RandomBinaryMatroid(3 + i % 10, 2 + i % 4, rng);
    for (double p : {0.2, 0.5, 0.8}) {
      const TutteIdentityCheck c = CheckTutteIdentities(m, p);
      EXPECT_LE(c.subset_relative_error, 1e-9);
      EXPECT_LE(c.derivative_relative_error, 1e-9);
    }
  }
}

TEST(TailTest, Examples) {
  EXPECT_LE(CheckTailBound(Pair(), 0.5, 0.0).probability, 1.0);
  EXPECT_DOUBLE_EQ(CheckTailBound(Free(6), 0.5, 1.0).probability, 0.0);
  const BinaryMatroid k4 = GraphicMatroid(CompleteGraph(4));
  for (double delta : {0.5, 1.0, 2.0}) {
    const TailCheck c = CheckTailBound(k4, 0.5, delta);
    EXPECT_DOUBLE_EQ(c.bound, std::exp2(-delta));
    EXPECT_LE(c.probability, c.bound + 1e-12);
  }
  EXPECT_THROW(CheckTailBound(k4, 0.5, -1.0), std::invalid_argument);
}

TEST(TailTest, ProbabilityMatchesEnumeration) {
  const BinaryMatroid k4 = GraphicMatroid(CompleteGraph(4));
  const auto& rows = k4.matrix().rows;
  auto deficiency = [&](uint64_t s) {
    return std::popcount(s) - oracle::Rank(oracle::Columns(rows, 6, s));
  };
  const double p = 0.5;
  const double mu_t = oracle::SubsetSum(6, MatchedDensity(p), deficiency);
  const double want = oracle::SubsetSum(6, p, [&](uint64_t s) {
    return deficiency(s) >= mu_t + 1.0 - 1e-12 ? 1.0 : 0.0;
  });
  EXPECT_NEAR(CheckTailBound(k4, p, 1.0).probability, want, 1e-15);
}

TEST(MuCurveTest, Examples) {
  const std::vector<double> grid{0.0, 0.25, 0.5, 1.0};
  for (const auto& [p, mu] : MuCurve(Free(3), grid)) EXPECT_DOUBLE_EQ(mu, 0.0);
  for (const auto& [p, mu] : MuCurve(Loop(), grid)) EXPECT_NEAR(mu, p, 1e-15);
  for (const auto& [p, mu] : MuCurve(Pair(), grid)) EXPECT_NEAR(mu, p * p, 1e-15);
}

TEST(BoundedDifferencesTest, Examples) {
  EXPECT_DOUBLE_EQ(BoundedDifferencesTail(5, 0.7, 0.3, 0.3, 0.0), 1.0);
  EXPECT_NEAR(BoundedDifferencesTail(Free(8), 0.4, 0.6, 2.0), std::exp(-2.0 * 4.0 / 8.0),
              1e-15);
  const BinaryMatroid k4 = GraphicMatroid(CompleteGraph(4));
  const double mu = MuCurve(k4, {0.3}).front().second;
  const double shift = 0.2 * mu + 0.3;
  EXPECT_NEAR(BoundedDifferencesTail(k4, 0.3, 0.5, 1.0),
              std::exp(-2.0 * shift * shift / (0.09 * 6)), 1e-15);
  EXPECT_THROW(BoundedDifferencesTail(k4, 0.0, 0.5, 1.0), std::invalid_argument);
  EXPECT_THROW(BoundedDifferencesTail(k4, 0.6, 0.5, 1.0), std::invalid_argument);
}

TEST(GraphTest, ComponentsAndRankIdentity) {
  const Graph k3 = CompleteGraph(3);
  EXPECT_EQ(ConnectedComponents(k3, SubsetMask(0)), 3);
  EXPECT_EQ(ConnectedComponents(k3, SubsetMask(0b001)), 2);
  EXPECT_EQ(ConnectedComponents(k3, SubsetMask(0b011)), 1);
  EXPECT_EQ(MatroidRank(GraphicMatroid(k3), SubsetMask::Full(3)), 2);
  const Graph loop{1, {{0, 0}}};
  EXPECT_EQ(MatroidRank(GraphicMatroid(loop), SubsetMask::Full(1)), 0);
  const Graph edge{2, {{0, 1}}};
  EXPECT_EQ(MatroidRank(GraphicMatroid(edge), SubsetMask::Full(1)), 1);

  Rng rng(5);
  for (int i = 0; i < 6; ++i) {
    const Graph g = RandomMultigraph(4 + i % 4, 8 + i, rng);
    const BinaryMatroid m = GraphicMatroid(g);
    for (uint64_t s = 0; s < (uint64_t{1} << g.edge_count()); ++s) {
      const int c = ConnectedComponents(g, SubsetMask(s));
      ASSERT_EQ(c, oracle::Components(g.vertex_count, g.edges, s));
      ASSERT_EQ(MatroidRank(m, SubsetMask(s)), g.vertex_count - c);
    }
  }
}

TEST(GraphTest, ValidatesEndpoints) {
  EXPECT_THROW(ValidateGraph(Graph{2, {{0, 2}}}), std::invalid_argument);
  EXPECT_THROW(ValidateGraph(Graph{-1, {}}), std::invalid_argument);
}

TEST(GraphGapTest, Examples) {
  const GapReport edgeless = GraphInequalityGap(Graph{4, {}}, 0.3);
  EXPECT_NEAR(edgeless.lhs, 4.0, 1e-15);
  EXPECT_NEAR(edgeless.rhs, 4.0, 1e-15);
  // Single edge: lhs = log2((1-p) 2^2 + p 2^2) = 2, rhs = t + 2 - t = 2.
  const GapReport edge = GraphInequalityGap(Graph{2, {{0, 1}}}, 0.4);
  EXPECT_NEAR(edge.lhs, 2.0, 1e-15);
  EXPECT_NEAR(edge.rhs, 2.0, 1e-15);
  EXPECT_GE(GraphInequalityGap(CompleteGraph(4), 0.5).gap, 0.0);
}

TEST(GraphGapTest, MatchesMatroidGapAfterShift) {
  Rng rng(6);
  for (const Graph& g : {CompleteGraph(4), CycleGraph(5), RandomMultigraph(5, 9, rng)}) {
    for (double p : {0.2, 0.5, 0.8}) {
      const GapReport graph = GraphInequalityGap(g, p);
      const GapReport rank_gap = MatroidRankGap(GraphicMatroid(g), p);
      EXPECT_NEAR(graph.gap, rank_gap.gap, 1e-12);
      EXPECT_NEAR(graph.lhs - g.vertex_count, rank_gap.lhs, 1e-12);
    }
  }
}

}  // namespace
}  // namespace noisebound
