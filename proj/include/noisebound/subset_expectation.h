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

#ifndef NOISEBOUND_SUBSET_EXPECTATION_H_
#define NOISEBOUND_SUBSET_EXPECTATION_H_

#include <cstdint>
#include <functional>

#include "noisebound/cube.h"

namespace noisebound {

// Exact enumeration is refused above these sizes; callers switch to sampling.
inline constexpr int kDefaultExactSubsetCap = 22;
// For integrands that themselves cost O(2^n).
inline constexpr int kDefaultHeavyExactSubsetCap = 13;

using SubsetFunction = std::function<double(SubsetMask)>;

// sum_T lambda^{|T|} (1-lambda)^{n-|T|} h(T) over all T subset of [n].
double SubsetExpectationExact(int n, double lambda, const SubsetFunction& h,
                              int max_n = kDefaultExactSubsetCap);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

// Monte Carlo estimate of the same expectation; std_error is the sample
// standard deviation over sqrt(samples). Deterministic in `seed`.
McEstimate SubsetExpectationMc(int n, double lambda, const SubsetFunction& h,
                               int64_t samples, uint64_t seed);

// Draws T ~ lambda: each coordinate kept independently with probability lambda.
class SubsetSampler {
 public:
  SubsetSampler(int n, double lambda, uint64_t seed);
  SubsetMask Next();

 private:
  int n_;
  double lambda_;
  uint64_t state_;
};

// SplitMix64 step; also used to derive per-task seeds from a root seed.
uint64_t SplitMix64(uint64_t& state);
uint64_t DeriveSeed(uint64_t root, uint64_t index);

// Uniform double in [0, 1) from 53 random bits.
inline double UnitInterval(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace noisebound

#endif  // NOISEBOUND_SUBSET_EXPECTATION_H_
