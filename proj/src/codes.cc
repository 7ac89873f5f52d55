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

#include "noisebound/codes.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "noisebound/inequalities.h"
#include "noisebound/subset_expectation.h"

namespace noisebound {
namespace {

constexpr double kLn2 = std::numbers::ln2;

uint64_t LowMask(int n) { return SubsetMask::Full(n).bits; }

void RequireDensity(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("density lambda must lie in [0, 1]");
  }
}

void RequireRate(double rate) {
  if (!(rate > 0.0 && rate < 1.0)) {
    throw std::invalid_argument("rate must lie strictly between 0 and 1");
  }
}

int FoldedWeight(int n, int weight) {
  if (weight < 0 || weight > n) {
    throw std::invalid_argument("weight outside [0, n]");
  }
  return std::min(weight, n - weight);
}

__int128 Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double Log2Binomial(int n, int k) {
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
          std::lgamma(n - k + 1.0)) /
         kLn2;
}

// Calls fn(word) for every codeword in Gray-code order.
template <typename Fn>
void ForEachCodeword(const LinearCode& code, Fn&& fn) {
  const auto rows = code.generator();
  const uint64_t count = uint64_t{1} << rows.size();
  uint64_t word = 0;
  fn(word);
  for (uint64_t i = 1; i < count; ++i) {
    word ^= rows[std::countr_zero(i)];
    fn(word);
  }
}

}  // namespace

LinearCode LinearCode::FromGenerator(int n, std::vector<uint64_t> rows) {
  if (n < 0 || n > kMaxColumns) {
    throw std::invalid_argument("code length must lie in [0, 64]");
  }
  for (uint64_t r : rows) {
    if (r & ~LowMask(n)) {
      throw std::invalid_argument("generator row wider than code length");
    }
  }
  if (Gf2Rank(rows) != static_cast<int>(rows.size())) {
    throw std::invalid_argument("generator rows are linearly dependent");
  }
  return LinearCode(n, std::move(rows));
}

LinearCode LinearCode::FromSpanningRows(int n, std::span<const uint64_t> rows) {
  std::vector<uint64_t> basis = ReducedRowEchelon(rows);
  return FromGenerator(n, std::move(basis));
}

bool LinearCode::Contains(uint64_t word) const {
  if (word & ~LowMask(n_)) return false;
  XorBasis basis;
  for (uint64_t r : rows_) basis.Insert(r);
  return !basis.Insert(word);
}

bool LinearCode::SameCodeAs(const LinearCode& other) const {
  if (n_ != other.n_ || dimension() != other.dimension()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](uint64_t r) { return Contains(r); });
}

int RankOfColumns(const LinearCode& code, SubsetMask t) {
  if (!t.IsSubsetOf(SubsetMask::Full(code.length()))) {
    throw std::invalid_argument("column set outside [n]");
  }
  return Gf2ColumnRank(code.generator(), t.bits);
}

WeightDistribution ComputeWeightDistribution(const LinearCode& code,
                                             int max_dim) {
  if (code.dimension() > max_dim) {
    throw CapExceeded("weight enumeration of a dimension-" +
                      std::to_string(code.dimension()) +
                      " code exceeds cap " + std::to_string(max_dim));
  }
  WeightDistribution counts(code.length() + 1, 0);
  ForEachCodeword(code, [&](uint64_t w) { ++counts[std::popcount(w)]; });
  return counts;
}

LinearCode DualCode(const LinearCode& code) {
  return LinearCode::FromGenerator(
      code.length(), NullSpace(code.generator(), code.length()));
}

__int128 Krawtchouk(int n, int i, int w) {
  __int128 sum = 0;
  for (int j = std::max(0, i - (n - w)); j <= std::min(w, i); ++j) {
    const __int128 term = Binomial(w, j) * Binomial(n - w, i - j);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

WeightDistribution MacWilliamsTransform(const WeightDistribution& a, int n,
                                        int k) {
  if (static_cast<int>(a.size()) != n + 1) {
    throw std::invalid_argument("weight distribution must have n+1 entries");
  }
  if (k < 0 || k > n || n > kMaxColumns) {
    throw std::invalid_argument("invalid code parameters");
  }
  WeightDistribution b(n + 1, 0);
  const __int128 code_size = static_cast<__int128>(1) << k;
  for (int i = 0; i <= n; ++i) {
    __int128 acc = 0;
    for (int w = 0; w <= n; ++w) {
      __int128 term;
      if (__builtin_mul_overflow(static_cast<__int128>(a[w]),
                                 Krawtchouk(n, i, w), &term) ||
          __builtin_add_overflow(acc, term, &acc)) {
        throw std::overflow_error("MacWilliams accumulator overflow");
      }
    }
    if (acc < 0 || acc % code_size != 0) {
      throw std::domain_error(
          "MacWilliams transform is not a nonnegative integer at weight " +
          std::to_string(i) + "; input is not a linear code distribution");
    }
    b[i] = static_cast<uint64_t>(acc / code_size);
  }
  return b;
}

CubeFunction ScaledIndicator(const LinearCode& code, int max_dim) {
  const int n = code.length();
  if (n > max_dim) {
    throw CapExceeded("scaled indicator needs a cube of dimension " +
                      std::to_string(n) + " > cap " + std::to_string(max_dim));
  }
  std::vector<double> values(size_t{1} << n, 0.0);
  const double height = std::ldexp(1.0, n - code.dimension());
  ForEachCodeword(code, [&](uint64_t w) { values[w] = height; });
  return CubeFunction(n, std::move(values), max_dim);
}

double ConditionalLogMoment(const LinearCode& code, SubsetMask t, double q) {
  if (!(q > 1.0) || std::isinf(q)) {
    throw std::invalid_argument("order q must be finite and > 1");
  }
  return (q - 1.0) * (t.size() - RankOfColumns(code, t)) * kLn2;
}

double RankDeficiency(const LinearCode& code, double lambda,
                      Sampling sampling) {
  RequireDensity(lambda);
  const int n = code.length();
  if (sampling.mode == EvalMode::kMonteCarlo) {
    return SubsetExpectationMc(
               n, lambda,
               [&](SubsetMask t) {
                 return double(t.size() - RankOfColumns(code, t));
               },
               sampling.samples, sampling.seed)
        .mean;
  }
  if (n > kDefaultExactSubsetCap) {
    throw CapExceeded("exact rank deficiency over n=" + std::to_string(n) +
                      " exceeds cap " + std::to_string(kDefaultExactSubsetCap) +
                      "; use Monte Carlo mode");
  }
  if (lambda == 0.0) return 0.0;
  if (lambda == 1.0) return n - code.dimension();
  const RankProfile profile =
      ComputeRankProfile(CompressedColumns(code.matrix()));
  double acc = 0.0;
  for (int s = 0; s <= n; ++s) {
    const double w = std::pow(lambda, s) * std::pow(1.0 - lambda, n - s);
    for (int r = 0; r <= s; ++r) {
      if (profile[s][r] != 0) acc += w * double(profile[s][r]) * (s - r);
    }
  }
  return acc;
}

FValue ComputeFValueOnCube(const LinearCode& code, double lambda, double q,
                           int max_dim) {
  RequireDensity(lambda);
  if (!(q >= 1.0)) throw std::invalid_argument("order q must be >= 1");
  const CubeFunction f = ScaledIndicator(code, max_dim);
  FValue out{lambda, q, 0.0};
  if (q == 1.0) {
    out.value = Entropy(NoiseOperator(f, 0.5 * (1.0 - std::sqrt(lambda))));
  } else if (std::isinf(q)) {
    out.value = std::log2(NoiseOperator(f, NoiseForDensity(q, lambda)).Max());
  } else {
    const CubeFunction noisy = NoiseOperator(f, NoiseForDensity(q, lambda));
    out.value = q / (q - 1.0) * std::log2(LqNorm(noisy, q));
  }
  return out;
}

WeightDistribution PrimalWeights(const LinearCode& code) {
  const int n = code.length();
  const int k = code.dimension();
  if (k <= kDefaultMaxEnumerationDim) return ComputeWeightDistribution(code);
  if (n - k <= kDefaultMaxEnumerationDim) {
    return MacWilliamsTransform(ComputeWeightDistribution(DualCode(code)), n,
                                n - k);
  }
  throw CapExceeded("neither the code nor its dual is enumerable (k=" +
                    std::to_string(k) + ", n=" + std::to_string(n) + ")");
}

WeightDistribution DualWeights(const LinearCode& code) {
  const int n = code.length();
  const int k = code.dimension();
  if (n - k <= kDefaultMaxEnumerationDim) {
    return ComputeWeightDistribution(DualCode(code));
  }
  if (k <= kDefaultMaxEnumerationDim) {
    return MacWilliamsTransform(ComputeWeightDistribution(code), n, k);
  }
  throw CapExceeded("neither the code nor its dual is enumerable (k=" +
                    std::to_string(k) + ", n=" + std::to_string(n) + ")");
}

double FValueFromWeights(const LinearCode& code, double lambda) {
  RequireDensity(lambda);
  const WeightDistribution b = DualWeights(code);
  const double theta = std::pow(lambda, 2.0 * kLn2);
  double acc = 0.0;
  for (size_t i = 0; i < b.size(); ++i) {
    acc += double(b[i]) * std::pow(theta, double(i));
  }
  return std::log2(acc);
}

FValue ComputeFValue(const LinearCode& code, double lambda, double q,
                     int max_dim) {
  if (q == 2.0 || std::isinf(q)) {
    return FValue{lambda, q, FValueFromWeights(code, lambda)};
  }
  return ComputeFValueOnCube(code, lambda, q, max_dim);
}

double WeightEnumeratorIdentity::MaxResidual() const {
  const double lo = std::min({f2, f_inf, dual_sum, primal_sum});
  const double hi = std::max({f2, f_inf, dual_sum, primal_sum});
  return hi - lo;
}

WeightEnumeratorIdentity EvaluateWeightEnumeratorIdentity(
    const LinearCode& code, double lambda, int max_dim) {
  RequireDensity(lambda);
  WeightEnumeratorIdentity out;
  out.f2 = ComputeFValueOnCube(code, lambda, 2.0, max_dim).value;
  out.f_inf = ComputeFValueOnCube(code, lambda, kInfinity, max_dim).value;
  out.dual_sum = FValueFromWeights(code, lambda);

  const WeightDistribution a = PrimalWeights(code);
  const int n = code.length();
  const double theta = std::pow(lambda, 2.0 * kLn2);
  double acc = 0.0;
  for (int w = 0; w <= n; ++w) {
    acc += double(a[w]) * std::pow(1.0 - theta, double(w)) *
           std::pow(1.0 + theta, double(n - w));
  }
  out.primal_sum = std::log2(acc) - code.dimension();
  return out;
}

double DualWeightBound(double lambda, int i, double rank_deficiency) {
  RequireDensity(lambda);
  if (i < 0) throw std::invalid_argument("weight must be nonnegative");
  if (lambda == 0.0 && i > 0) return kInfinity;
  return std::pow(lambda, -2.0 * kLn2 * i) * std::exp2(rank_deficiency);
}

double DualWeightBound(const LinearCode& code, double lambda, int i,
                       Sampling sampling) {
  return DualWeightBound(lambda, i, RankDeficiency(code, lambda, sampling));
}

double BecDualSideBoundLog2(int n, double rate, int weight) {
  RequireRate(rate);
  const int folded = FoldedWeight(n, weight);
  return 2.0 * kLn2 * folded * -std::log2(1.0 - rate);
}

double BecDualSideBound(int n, double rate, int weight) {
  return std::exp2(BecDualSideBoundLog2(n, rate, weight));
}

double BecPrimalSideBoundLog2(int n, double rate, int weight,
                              double log2_code_size) {
  RequireRate(rate);
  const int folded = FoldedWeight(n, weight);
  const double theta = std::pow(rate, 2.0 * kLn2);
  if (folded <= 0.5 * (1.0 - theta) * n) {
    return log2_code_size - folded * std::log2(1.0 - theta) -
           (n - folded) * std::log2(1.0 + theta);
  }
  return Log2Binomial(n, folded) + log2_code_size - n;
}

double BecPrimalSideBound(int n, double rate, int weight, double code_size) {
  if (!(code_size > 0.0)) throw std::invalid_argument("code size must be positive");
  return std::exp2(BecPrimalSideBoundLog2(n, rate, weight, std::log2(code_size)));
}

double SberloBoundLog2(int n, double rate, int weight) {
  const int folded = FoldedWeight(n, weight);
  if (folded < 1) {
    throw std::invalid_argument("comparator bound needs min(k, n-k) >= 1");
  }
  return kSberloConstant * rate * folded *
         (2.0 * std::log2(double(n) / folded) + 3.0);
}

double SberloBound(int n, double rate, int weight) {
  return std::exp2(SberloBoundLog2(n, rate, weight));
}

LinearCode ReedMuller(int r, int m) {
  if (m < 0 || m > 6 || r < 0 || r > m) {
    throw std::invalid_argument("Reed-Muller parameters need 0 <= r <= m <= 6");
  }
  const int n = 1 << m;
  std::vector<uint64_t> rows;
  for (int degree = 0; degree <= r; ++degree) {
    for (uint32_t monomial = 0; monomial < (1u << m); ++monomial) {
      if (std::popcount(monomial) != degree) continue;
      uint64_t row = 0;
      for (int point = 0; point < n; ++point) {
        if ((static_cast<uint32_t>(point) & monomial) == monomial) {
          row |= uint64_t{1} << point;
        }
      }
      rows.push_back(row);
    }
  }
  return LinearCode::FromGenerator(n, std::move(rows));
}

ExactComparison AlphaReversal(const WeightDistribution& a, int64_t num,
                              int64_t den) {
  if (den <= 0 || num < 0 || num > den) {
    throw std::invalid_argument("alpha must be a fraction in [0, 1]");
  }
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  const int n = static_cast<int>(a.size()) - 1;
  ExactComparison out;
  for (int k = 0; k <= n; ++k) {
    const cpp_int ak = a[k];
    out.lhs += ak * pow(cpp_int(num), n - k) * pow(cpp_int(den), k);
    out.rhs += ak * pow(cpp_int(num), k) * pow(cpp_int(den), n - k);
  }
  return out;
}

}  // namespace noisebound
