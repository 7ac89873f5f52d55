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

#include "noisebound/inequalities.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "noisebound/random_inputs.h"
#include "oracles.h"

namespace noisebound {
namespace {

const double kLn2 = std::log(2.0);

std::vector<double> Values(const CubeFunction& f) {
  return {f.values().begin(), f.values().end()};
}

CubeFunction Uniform(int n, uint64_t seed) {
  Rng rng(seed);
  return RandomFunction(n, FunctionFamily::kUniform, rng);
}

CubeFunction PointMass(int n, size_t at, double height) {
  std::vector<double> v(size_t{1} << n, 0.0);
  v[at] = height;
  return CubeFunction(n, v);
}

// Both sides of the main inequality from direct convolution and fiber averages.
std::pair<double, double> MainOracle(const CubeFunction& f, double q, double eps) {
  const int n = f.dim();
  const auto v = Values(f);
  const double lambda = std::pow(1.0 - 2.0 * eps, oracle::R(q));
  const double lhs = std::log(oracle::Norm(oracle::Noise(v, n, eps), q));
  const double rhs = oracle::SubsetSum(n, lambda, [&](uint64_t t) {
    return std::log(oracle::Norm(oracle::Conditional(v, t), q));
  });
  return {lhs, rhs};
}

TEST(RExponentTest, Values) {
  EXPECT_NEAR(RExponent(1.0 + 1e-9), 2.0, 1e-6);
  EXPECT_NEAR(RExponent(2.0), 1.0 / kLn2, 1e-15);
  EXPECT_NEAR(RExponent(3.0), 3.0 / (4.0 * kLn2), 1e-15);
  EXPECT_NEAR(RExponent(kInfinity), 1.0 / (2.0 * kLn2), 1e-15);
  EXPECT_NEAR(RExponent(2.0 - 1e-9), RExponent(2.0 + 1e-9), 1e-8);
  for (double q : {1.1, 1.5, 1.9, 2.5, 8.0}) EXPECT_NEAR(RExponent(q), oracle::R(q), 1e-14);
  EXPECT_THROW(RExponent(1.0), std::invalid_argument);
  EXPECT_THROW(RExponent(0.5), std::invalid_argument);
}

TEST(RExponentTest, DensityRoundTrip) {
  for (double q : {1.5, 2.0, 4.0, kInfinity}) {
    for (double eps : {0.0, 0.1, 0.3, 0.5}) {
      const double lambda = DensityForNoise(q, eps);
      EXPECT_NEAR(lambda, std::pow(1.0 - 2.0 * eps, oracle::R(q)), 1e-15);
      EXPECT_NEAR(NoiseForDensity(q, lambda), eps, 1e-12);
    }
  }
}

TEST(MainInequalityTest, MatchesOracleOnRandomFunctions) {
  for (int n = 1; n <= 4; ++n) {
    const CubeFunction f = Uniform(n, 50 + n);
    for (double q : {1.1, 2.0, 3.0}) {
      for (double eps : {0.05, 0.2, 0.45}) {
        const GapReport r = MainInequalityGap(f, q, eps);
        const auto [lhs, rhs] = MainOracle(f, q, eps);
        EXPECT_NEAR(r.lhs, lhs, 1e-12);
        EXPECT_NEAR(r.rhs, rhs, 1e-12);
        EXPECT_DOUBLE_EQ(r.gap, r.rhs - r.lhs);
        EXPECT_GE(r.gap, -1e-9);
        EXPECT_EQ(r.id, kMainId);
        EXPECT_EQ(r.n, n);
      }
    }
  }
}

TEST(MainInequalityTest, EqualityCases) {
  const CubeFunction f = Uniform(3, 3);
  const GapReport at_zero = MainInequalityGap(f, 2.0, 0.0);
  EXPECT_NEAR(at_zero.gap, 0.0, 1e-12);
  EXPECT_TRUE(at_zero.equality_case);

  const CubeFunction c = CubeFunction::Constant(3, 2.5);
  for (double eps : {0.0, 0.2, 0.5}) {
    const GapReport r = MainInequalityGap(c, 1.5, eps);
    EXPECT_NEAR(r.lhs, std::log(2.5), 1e-14);
    EXPECT_NEAR(r.rhs, std::log(2.5), 1e-14);
    EXPECT_TRUE(IsNumericalEquality(r));
  }

  const GapReport half = MainInequalityGap(f, 3.0, 0.5);
  EXPECT_NEAR(half.lhs, std::log(f.Mean()), 1e-14);
  EXPECT_NEAR(half.rhs, std::log(f.Mean()), 1e-14);
}

TEST(MainInequalityTest, ScaleInvariantGap) {
  const CubeFunction f = Uniform(4, 13);
  for (double q : {1.5, 4.0}) {
    const double a = MainInequalityGap(f, q, 0.15).gap;
    const double b = MainInequalityGap(f.Scaled(7.5), q, 0.15).gap;
    EXPECT_NEAR(a, b, 1e-12);
  }
}

TEST(MainInequalityTest, MonteCarloCloseToExact) {
  const CubeFunction f = Uniform(4, 21);
  const GapReport exact = MainInequalityGap(f, 2.0, 0.1);
  const GapReport mc1 = MainInequalityGap(f, 2.0, 0.1, Sampling::MonteCarlo(40000, 9));
  const GapReport mc2 = MainInequalityGap(f, 2.0, 0.1, Sampling::MonteCarlo(40000, 9));
  EXPECT_EQ(mc1.rhs, mc2.rhs);
  EXPECT_EQ(mc1.sampling.mode, EvalMode::kMonteCarlo);
  EXPECT_EQ(mc1.sampling.samples, 40000);
  EXPECT_NEAR(mc1.rhs, exact.rhs, 0.01);
}

TEST(MainInequalityTest, RejectsBadInputs) {
  EXPECT_THROW(MainInequalityGap(CubeFunction::Constant(2, 0.0), 2.0, 0.1),
               std::invalid_argument);
  EXPECT_THROW(MainInequalityGap(CubeFunction(1, {1.0, -1.0}), 2.0, 0.1),
               std::invalid_argument);
  EXPECT_THROW(MainInequalityGap(Uniform(2, 1), 1.0, 0.1), std::invalid_argument);
  EXPECT_THROW(MainInequalityGap(Uniform(2, 1), 2.0, 0.6), std::invalid_argument);
}

TEST(NoisyEntropyTest, MatchesOracleAndHolds) {
  for (int n = 1; n <= 4; ++n) {
    const CubeFunction f = Uniform(n, 70 + n);
    const auto v = Values(f);
    for (double eps : {0.0, 0.1, 0.3, 0.5}) {
      const GapReport r = NoisyEntropyGap(f, eps);
      EXPECT_NEAR(r.lhs, Entropy(CubeFunction(n, oracle::Noise(v, n, eps))), 1e-12);
      const double lambda = (1 - 2 * eps) * (1 - 2 * eps);
      const double rhs = oracle::SubsetSum(n, lambda, [&](uint64_t t) {
        return Entropy(CubeFunction(n, oracle::Conditional(v, t)));
      });
      EXPECT_NEAR(r.rhs, rhs, 1e-12);
      EXPECT_GE(r.gap, -1e-9);
    }
  }
  EXPECT_NEAR(NoisyEntropyGap(Uniform(3, 2), 0.5).lhs, 0.0, 1e-14);
  EXPECT_NEAR(NoisyEntropyGap(CubeFunction::Constant(3, 2.0), 0.2).gap, 0.0, 1e-14);
}

TEST(NoisyEntropyTest, LimitOfMainInequality) {
  // For E f = 1, the main gap at q = 1 + d behaves like d ln2 times the
  // entropy gap.
  const CubeFunction raw = Uniform(3, 91);
  const CubeFunction f = raw.Scaled(1.0 / raw.Mean());
  const double d = 1e-4;
  for (double eps : {0.1, 0.25}) {
    const double main_gap = MainInequalityGap(f, 1.0 + d, eps).gap / (d * kLn2);
    const double entropy_gap = NoisyEntropyGap(f, eps).gap;
    EXPECT_NEAR(main_gap, entropy_gap, 1e-3 * std::max(1.0, entropy_gap));
  }
}

TEST(HypercontractiveTest, Examples) {
  const CubeFunction f(1, {2.0, 0.0});
  EXPECT_NEAR(HypercontractiveRhs(f, 2.0, 0.25),
              std::pow(std::pow(2.0, 1.25) / 2.0, 1.0 / 1.25), 1e-15);
  const CubeFunction g = Uniform(3, 4);
  EXPECT_NEAR(HypercontractiveRhs(g, 3.0, 0.0), LqNorm(g, 3.0), 1e-15);
  EXPECT_NEAR(HypercontractiveRhs(g, 3.0, 0.5), g.Mean(), 1e-15);
}

TEST(HypercontractiveTest, HoldsOnRandomFunctions) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const CubeFunction f = FuzzFunction(3, 5, seed);
    for (double q : {1.5, 2.0, 4.0}) {
      for (double eps : {0.05, 0.25, 0.45}) {
        const GapReport r = HypercontractiveGap(f, q, eps);
        EXPECT_NEAR(r.lhs, LqNorm(NoiseOperator(f, eps), q), 1e-14);
        EXPECT_GE(r.gap, -1e-9);
      }
    }
  }
}

TEST(LogSobolevTest, ConstantIsZeroBothSides) {
  const GapReport r = LogSobolevGap(CubeFunction::Constant(3, 2.0), 2.0);
  EXPECT_NEAR(r.lhs, 0.0, 1e-14);
  EXPECT_NEAR(r.rhs, 0.0, 1e-14);
  EXPECT_TRUE(r.equality_case);
}

TEST(LogSobolevTest, MatchesOracleAtUnitNorm) {
  for (int n = 1; n <= 4; ++n) {
    const CubeFunction f = Uniform(n, 400 + n);
    for (double q : {1.5, 2.0, 3.0}) {
      const CubeFunction g = f.Scaled(1.0 / LqNorm(f, q));
      const auto v = Values(g);
      std::vector<double> gq1(v.size());
      for (size_t x = 0; x < v.size(); ++x) gq1[x] = std::pow(v[x], q - 1.0);
      double drop = n * std::log(oracle::Norm(v, q));
      for (int i = 0; i < n; ++i) {
        const uint64_t t = SubsetMask::Full(n).bits & ~(uint64_t{1} << i);
        drop -= std::log(oracle::Norm(oracle::Conditional(v, t), q));
      }
      const GapReport r = LogSobolevGap(f, q);
      EXPECT_NEAR(r.rhs, oracle::Dirichlet(gq1, v, n), 1e-12);
      EXPECT_NEAR(r.lhs, 4.0 * oracle::R(q) * drop, 1e-12);
      EXPECT_GT(r.gap, 1e-12);
      EXPECT_FALSE(r.equality_case);
    }
  }
}

TEST(LogSobolevTest, PointMassIsEqualityForLargeQ) {
  for (double q : {2.0, 3.0, 4.0}) {
    const GapReport r = LogSobolevGap(PointMass(3, 5, 8.0), q);
    EXPECT_NEAR(r.gap, 0.0, 1e-9);
    EXPECT_TRUE(r.equality_case);
    EXPECT_TRUE(LogSobolevEqualityCondition(PointMass(3, 5, 8.0), q));
  }
  EXPECT_FALSE(LogSobolevEqualityCondition(PointMass(3, 5, 8.0), 1.5));
  EXPECT_GT(LogSobolevGap(PointMass(3, 5, 8.0), 1.5).gap, 1e-12);
}

TEST(TwoPointTest, Examples) {
  for (double q : {1.1, 1.5, 2.0, 3.0}) {
    const GapReport r = TwoPointGap(1.0, q);
    EXPECT_DOUBLE_EQ(r.gap, 0.0);
    EXPECT_TRUE(r.equality_case);
  }
  // g = (0, 2): gap = 2^q - 8 (2^{q-1} - 1)/q below q = 2, zero above.
  const GapReport x0 = TwoPointGap(kInfinity, 1.5);
  EXPECT_NEAR(x0.gap, std::pow(2.0, 1.5) - 8.0 * (std::sqrt(2.0) - 1.0) / 1.5, 1e-12);
  EXPECT_GT(x0.gap, 0.0);
  EXPECT_FALSE(x0.equality_case);
  for (double q : {2.0, 3.0, 8.0}) {
    const GapReport r = TwoPointGap(kInfinity, q);
    EXPECT_NEAR(r.gap, 0.0, 1e-12);
    EXPECT_TRUE(r.equality_case);
  }
  EXPECT_THROW(TwoPointGap(0.5, 2.0), std::invalid_argument);
}

TEST(TwoPointTest, MatchesLogSobolevOnTheNormalizedPair) {
  for (double t : {1.5, 4.0, 100.0}) {
    const double x = 2.0 / (1.0 + t);
    const CubeFunction g(1, {x, 2.0 - x});
    for (double q : {1.5, 3.0}) {
      const GapReport two = TwoPointGap(t, q);
      // n = 1: the coordinate drop is ln ||g||_q; scale back from unit norm.
      const double scale = std::pow(LqNorm(g, q), q);
      EXPECT_NEAR(two.gap, LogSobolevGap(g, q).gap * scale, 1e-12);
      EXPECT_GE(two.gap, -1e-9);
    }
  }
}

TEST(DerivativeTest, CharacterShiftClosedForm) {
  const CubeFunction f(2, {1.5, 0.5, 1.5, 0.5});  // 1 + 0.5 w_{1}
  const DerivativeCheck c = CheckDerivatives(f, 2.0);
  EXPECT_FALSE(c.skipped);
  EXPECT_NEAR(c.f_formula, -0.4, 1e-14);
  EXPECT_NEAR(c.f_numeric, -0.4, 1e-8);
  EXPECT_LE(c.f_relative_error, 1e-4);
  EXPECT_LE(c.g_relative_error, 1e-4);
  EXPECT_GT(c.report.gap, 0.0);
}

TEST(DerivativeTest, RandomFunctionStrictOrder) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const DerivativeCheck c = CheckDerivatives(Uniform(3, 600 + seed), 1.5);
    EXPECT_LE(c.f_relative_error, 1e-4);
    EXPECT_LE(c.g_relative_error, 1e-4);
    EXPECT_LT(c.f_formula, c.g_formula);
  }
}

TEST(DerivativeTest, ConstantIsSkipped) {
  const DerivativeCheck c = CheckDerivatives(CubeFunction::Constant(2, 3.0), 2.0);
  EXPECT_TRUE(c.skipped);
  EXPECT_DOUBLE_EQ(c.f_formula, 0.0);
  EXPECT_DOUBLE_EQ(c.g_formula, 0.0);
}

TEST(GapReportTest, CsvAndJsonShareColumns) {
  GapReport r = MakeGapReport("main", 3, 2.0, 0.25, 1.0, 1.5,
                              Sampling::MonteCarlo(100, 7));
  EXPECT_DOUBLE_EQ(r.gap, 0.5);
  EXPECT_EQ(ToCsvRow(r), "main,3,2,0.25,1,1.5,0.5,mc,100,7,0");
  const auto j = ToJson(r);
  EXPECT_EQ(j.at("inequality-id"), "main");
  EXPECT_EQ(j.at("mode"), "mc");
  EXPECT_EQ(j.at("seed"), 7);
  EXPECT_EQ(FormatDouble(kInfinity), "inf");
  EXPECT_NE(GapCsvHeader().find("inequality-id,n,q,eps-or-lambda"), std::string::npos);
  EXPECT_EQ(ParseEvalMode("exact"), EvalMode::kExact);
  EXPECT_THROW(ParseEvalMode("fast"), std::invalid_argument);
}

TEST(GapReportTest, EqualityTolerance) {
  EXPECT_TRUE(IsNumericalEquality(MakeGapReport("x", 1, 2, 0, 1e6, 1e6 + 1e-4)));
  EXPECT_FALSE(IsNumericalEquality(MakeGapReport("x", 1, 2, 0, 1.0, 1.0 + 1e-6)));
}

}  // namespace
}  // namespace noisebound
