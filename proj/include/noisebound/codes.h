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

#ifndef NOISEBOUND_CODES_H_
#define NOISEBOUND_CODES_H_

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "noisebound/cube.h"
#include "noisebound/gap_report.h"
#include "noisebound/gf2.h"

namespace noisebound {

// Codeword enumeration (2^k words) is refused above this dimension.
inline constexpr int kDefaultMaxEnumerationDim = 28;

// A binary linear code of length n <= 64 given by k independent generator
// rows. Codeword bit j is coordinate j+1, matching the cube point encoding.
class LinearCode {
 public:
  LinearCode() = default;

  // Throws std::invalid_argument if the rows are dependent or wider than n.
  static LinearCode FromGenerator(int n, std::vector<uint64_t> rows);
  // Keeps an independent subset spanning the same row space.
  static LinearCode FromSpanningRows(int n, std::span<const uint64_t> rows);

  int length() const { return n_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  double rate() const { return n_ == 0 ? 0.0 : double(dimension()) / n_; }
  std::span<const uint64_t> generator() const { return rows_; }
  BitMatrix matrix() const { return BitMatrix{n_, rows_}; }

  bool Contains(uint64_t word) const;
  // Same row space.
  bool SameCodeAs(const LinearCode& other) const;

 private:
  LinearCode(int n, std::vector<uint64_t> rows) : n_(n), rows_(std::move(rows)) {}
  int n_ = 0;
  std::vector<uint64_t> rows_;
};

// counts[w] = number of codewords of Hamming weight w, w = 0..n.
using WeightDistribution = std::vector<uint64_t>;

// r_C(T): rank of the generator columns indexed by T.
int RankOfColumns(const LinearCode& code, SubsetMask t);

// Gray-code walk over all 2^k codewords.
WeightDistribution ComputeWeightDistribution(
    const LinearCode& code, int max_dim = kDefaultMaxEnumerationDim);

LinearCode DualCode(const LinearCode& code);

// K_i(w) = sum_j (-1)^j C(w, j) C(n-w, i-j).
__int128 Krawtchouk(int n, int i, int w);

// Weight distribution of the dual from that of the code, in exact integers:
// b_i = 2^{-k} sum_w a_w K_i(w). Throws std::domain_error if a result is not
// a nonnegative integer (the input was not a linear code's distribution)
// and std::overflow_error if an accumulator would overflow.
WeightDistribution MacWilliamsTransform(const WeightDistribution& a, int n,
                                        int k);

// f = (2^n / |C|) 1_C on {0,1}^n; its Fourier transform is 1_{C^perp}.
CubeFunction ScaledIndicator(const LinearCode& code,
                             int max_dim = kDefaultMaxDim);

// q ln||E(f|T)||_q = (q-1)(|T| - r_C(T)) ln 2 for the scaled indicator f.
double ConditionalLogMoment(const LinearCode& code, SubsetMask t, double q);

// lambda n - E_{T ~ lambda} r_C(T) = E_{T ~ lambda} (|T| - r_C(T)).
// Exact enumeration for n <= 22; Monte Carlo when requested or n is larger.
double RankDeficiency(const LinearCode& code, double lambda,
                      Sampling sampling = {});

// F(lambda, q) = (1/(q-1)) log2 E f_{eps(q)}^q with eps(q) the noise rate
// matched to density lambda; the limits q = 1 (entropy of f at noise
// (1-sqrt(lambda))/2) and q = infinity (log2 max) are included.
struct FValue {
  double lambda = 0.0;
  double q = 0.0;
  double value = 0.0;
};

// Computes F through the cube function; needs n <= max_dim.
FValue ComputeFValueOnCube(const LinearCode& code, double lambda, double q,
                           int max_dim = kDefaultMaxDim);
// F(lambda, 2) = F(lambda, inf) = log2 sum_i b_i theta^i, theta =
// lambda^{2 ln 2}, from the dual weight distribution. Works for any n <= 64
// as long as k or n-k is enumerable.
double FValueFromWeights(const LinearCode& code, double lambda);
// Weight route for q in {2, inf}, cube route otherwise.
FValue ComputeFValue(const LinearCode& code, double lambda, double q,
                     int max_dim = kDefaultMaxDim);

// The four expressions asserted equal for q = 2 and q = inf.
struct WeightEnumeratorIdentity {
  double f2 = 0.0;          // via the cube, q = 2
  double f_inf = 0.0;       // via the cube, q = inf
  double dual_sum = 0.0;    // log2 sum_i b_i theta^i
  double primal_sum = 0.0;  // log2 (1/|C|) sum_k a_k (1-theta)^k (1+theta)^{n-k}
  double MaxResidual() const;
};
WeightEnumeratorIdentity EvaluateWeightEnumeratorIdentity(
    const LinearCode& code, double lambda, int max_dim = kDefaultMaxDim);

// Both weight distributions, enumerating whichever side is small enough and
// transforming for the other.
WeightDistribution PrimalWeights(const LinearCode& code);
WeightDistribution DualWeights(const LinearCode& code);

// b_i <= lambda^{-(2 ln 2) i} 2^{deficiency}. Returns +inf for lambda = 0,
// i > 0.
double DualWeightBound(double lambda, int i, double rank_deficiency);
double DualWeightBound(const LinearCode& code, double lambda, int i,
                       Sampling sampling = {});

// Weight bounds for capacity-achieving families with the 2^{o(n)} factor
// set to 1. Log2 variants avoid overflow for long codes.
double BecDualSideBoundLog2(int n, double rate, int weight);
double BecDualSideBound(int n, double rate, int weight);
double BecPrimalSideBoundLog2(int n, double rate, int weight,
                              double log2_code_size);
double BecPrimalSideBound(int n, double rate, int weight, double code_size);

// Literature comparator 2^{C R k*(2 log2(n/k*) + 3)} with C = 30.
inline constexpr double kSberloConstant = 30.0;
double SberloBoundLog2(int n, double rate, int weight);
double SberloBound(int n, double rate, int weight);

// RM(r, m): evaluations of all monomials of degree <= r on F_2^m; column j
// is the point whose bits are j. Needs m <= 6.
LinearCode ReedMuller(int r, int m);

// sum_k a_k alpha^{n-k} <= sum_k a_k alpha^k at alpha = num/den, evaluated
// exactly after scaling both sides by den^n.
struct ExactComparison {
  boost::multiprecision::cpp_int lhs;
  boost::multiprecision::cpp_int rhs;
  bool Holds() const { return lhs <= rhs; }
};
ExactComparison AlphaReversal(const WeightDistribution& a, int64_t num,
                              int64_t den);

}  // namespace noisebound

#endif  // NOISEBOUND_CODES_H_
