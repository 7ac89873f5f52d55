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

#include "noisebound/gf2.h"

#include <vector>

#include <gtest/gtest.h>

#include "noisebound/random_inputs.h"
#include "noisebound/subset_expectation.h"
#include "oracles.h"

namespace noisebound {
namespace {

std::vector<uint64_t> RandomRows(int k, int n, uint64_t seed) {
  Rng rng(seed);
  std::vector<uint64_t> rows(k);
  for (uint64_t& r : rows) r = rng.Next() & SubsetMask::Full(n).bits;
  return rows;
}

TEST(Gf2RankTest, SmallCases) {
  EXPECT_EQ(Gf2Rank(std::vector<uint64_t>{}), 0);
  EXPECT_EQ(Gf2Rank(std::vector<uint64_t>{0, 0}), 0);
  EXPECT_EQ(Gf2Rank(std::vector<uint64_t>{0b011, 0b110, 0b101}), 2);
  EXPECT_EQ(Gf2Rank(std::vector<uint64_t>{0b001, 0b010, 0b100}), 3);
}

TEST(Gf2RankTest, MatchesEliminationOracle) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const auto rows = RandomRows(1 + seed % 9, 12, seed);
    EXPECT_EQ(Gf2Rank(rows), oracle::Rank(rows));
  }
}

TEST(Gf2RankTest, ColumnRankMatchesOracle) {
  const int n = 10;
  const auto rows = RandomRows(5, n, 99);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask += 7) {
    EXPECT_EQ(Gf2ColumnRank(rows, mask), oracle::Rank(oracle::Columns(rows, n, mask)))
        << mask;
  }
}

TEST(EchelonTest, PreservesRowSpace) {
  const auto rows = RandomRows(6, 10, 3);
  const auto rref = ReducedRowEchelon(rows);
  EXPECT_EQ(int(rref.size()), Gf2Rank(rows));
  std::vector<uint64_t> both = rows;
  both.insert(both.end(), rref.begin(), rref.end());
  EXPECT_EQ(Gf2Rank(both), Gf2Rank(rows));
}

TEST(NullSpaceTest, OrthogonalWithComplementaryDimension) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 4 + seed % 9;
    const auto rows = RandomRows(1 + seed % 5, n, seed + 1000);
    const auto kernel = NullSpace(rows, n);
    EXPECT_EQ(int(kernel.size()) + Gf2Rank(rows), n);
    EXPECT_EQ(Gf2Rank(kernel), int(kernel.size()));
    for (uint64_t v : kernel) {
      for (uint64_t r : rows) EXPECT_EQ(std::popcount(v & r) % 2, 0);
    }
  }
}

TEST(XorBasisTest, InsertReportsIndependence) {
  XorBasis basis;
  EXPECT_TRUE(basis.Insert(0b011));
  EXPECT_TRUE(basis.Insert(0b110));
  EXPECT_FALSE(basis.Insert(0b101));
  EXPECT_FALSE(basis.Insert(0));
  EXPECT_EQ(basis.rank(), 2);
}

TEST(SubsetRankTest, EnumerationMatchesOracle) {
  const int n = 11;
  const BitMatrix m{n, RandomRows(5, n, 77)};
  const auto columns = CompressedColumns(m);
  ASSERT_EQ(int(columns.size()), n);
  uint64_t visited = 0;
  ForEachSubsetRank(columns, [&](uint64_t mask, int rank) {
    ++visited;
    EXPECT_EQ(rank, oracle::Rank(oracle::Columns(m.rows, n, mask))) << mask;
  });
  EXPECT_EQ(visited, uint64_t{1} << n);
}

TEST(SubsetRankTest, ProfileCountsAllSubsets) {
  const int n = 9;
  const BitMatrix m{n, RandomRows(4, n, 81)};
  const RankProfile profile = ComputeRankProfile(CompressedColumns(m));
  std::vector<std::vector<uint64_t>> want(n + 1, std::vector<uint64_t>(n + 1, 0));
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ++want[std::popcount(mask)][oracle::Rank(oracle::Columns(m.rows, n, mask))];
  }
  for (int s = 0; s <= n; ++s) {
    for (int r = 0; r <= n; ++r) {
      const uint64_t got = r < int(profile[s].size()) ? profile[s][r] : 0;
      EXPECT_EQ(got, want[s][r]) << s << "," << r;
    }
  }
}

TEST(SubsetExpectationTest, Examples) {
  EXPECT_DOUBLE_EQ(SubsetExpectationExact(2, 0.5, [](SubsetMask t) {
                     return std::exp2(t.size());
                   }),
                   9.0 / 4.0);
  EXPECT_NEAR(SubsetExpectationExact(7, 0.3, [](SubsetMask t) { return double(t.size()); }),
              2.1, 1e-13);
  EXPECT_DOUBLE_EQ(SubsetExpectationExact(5, 1.0, [](SubsetMask t) { return double(t.bits); }),
                   31.0);
  EXPECT_DOUBLE_EQ(SubsetExpectationExact(5, 0.0, [](SubsetMask t) { return t.bits + 4.0; }),
                   4.0);
  EXPECT_THROW(SubsetExpectationExact(23, 0.5, [](SubsetMask) { return 0.0; }),
               CapExceeded);
}

TEST(SubsetExpectationTest, MatchesBruteForceSum) {
  Rng rng(8);
  std::vector<double> table(1 << 10);
  for (double& v : table) v = rng.Uniform();
  const auto h = [&](SubsetMask t) { return table[t.bits]; };
  for (double lambda : {0.1, 0.5, 0.77}) {
    EXPECT_NEAR(SubsetExpectationExact(10, lambda, h),
                oracle::SubsetSum(10, lambda, [&](uint64_t t) { return table[t]; }),
                1e-13);
  }
}

TEST(SubsetExpectationTest, MonteCarloAgreesWithinFourStdErrors) {
  const auto size = [](SubsetMask t) { return double(t.size()); };
  const McEstimate est = SubsetExpectationMc(12, 0.4, size, 100000, 5);
  EXPECT_NEAR(est.mean, 4.8, 4 * est.std_error);

  Rng rng(9);
  std::vector<double> table(1 << 10);
  for (double& v : table) v = rng.Uniform();
  const auto h = [&](SubsetMask t) { return table[t.bits]; };
  const double exact = SubsetExpectationExact(10, 0.6, h);
  const McEstimate mc = SubsetExpectationMc(10, 0.6, h, 50000, 11);
  EXPECT_NEAR(mc.mean, exact, 4 * mc.std_error);

  const McEstimate zero = SubsetExpectationMc(6, 0.0, [](SubsetMask t) {
    return t.bits + 1.0;
  }, 100, 1);
  EXPECT_DOUBLE_EQ(zero.mean, 1.0);
  EXPECT_DOUBLE_EQ(zero.std_error, 0.0);
}

TEST(SubsetExpectationTest, SeededSamplingIsDeterministic) {
  SubsetSampler a(20, 0.3, 42), b(20, 0.3, 42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(1, 1));
  EXPECT_EQ(DeriveSeed(3, 9), DeriveSeed(3, 9));
}

}  // namespace
}  // namespace noisebound
