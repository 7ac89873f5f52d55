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

#include "noisebound/subset_expectation.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace noisebound {

uint64_t SplitMix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t DeriveSeed(uint64_t root, uint64_t index) {
  uint64_t s = root ^ (0xd1b54a32d192ed03ULL * (index + 1));
  SplitMix64(s);
  return SplitMix64(s);
}

double SubsetExpectationExact(int n, double lambda, const SubsetFunction& h,
                              int max_n) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("subset density must lie in [0, 1]");
  }
  if (n < 0) throw std::invalid_argument("negative ground set size");
  if (n > max_n) {
    throw CapExceeded("exact subset enumeration over n=" + std::to_string(n) +
                      " exceeds cap " + std::to_string(max_n) +
                      "; use Monte Carlo mode");
  }
  if (lambda == 1.0) return h(SubsetMask::Full(n));
  if (lambda == 0.0) return h(SubsetMask(0));

  std::vector<double> weight(n + 1);
  for (int k = 0; k <= n; ++k) {
    weight[k] = std::pow(lambda, k) * std::pow(1.0 - lambda, n - k);
  }
  double acc = 0.0;
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t t = 0; t < count; ++t) {
    const SubsetMask mask(t);
    acc += weight[mask.size()] * h(mask);
  }
  return acc;
}

SubsetSampler::SubsetSampler(int n, double lambda, uint64_t seed)
    : n_(n), lambda_(lambda), state_(seed) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("subset density must lie in [0, 1]");
  }
  if (n < 0 || n > 64) throw std::invalid_argument("ground set size outside [0, 64]");
}

SubsetMask SubsetSampler::Next() {
  uint64_t bits = 0;
  for (int i = 0; i < n_; ++i) {
    if (UnitInterval(SplitMix64(state_)) < lambda_) bits |= uint64_t{1} << i;
  }
  return SubsetMask(bits);
}

McEstimate SubsetExpectationMc(int n, double lambda, const SubsetFunction& h,
                               int64_t samples, uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  SubsetSampler sampler(n, lambda, seed);
  // Welford accumulation.
  double mean = 0.0;
  double m2 = 0.0;
  for (int64_t i = 0; i < samples; ++i) {
    const double v = h(sampler.Next());
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  McEstimate est;
  est.mean = mean;
  if (samples > 1) {
    const double variance = m2 / static_cast<double>(samples - 1);
    est.std_error = std::sqrt(variance / static_cast<double>(samples));
  }
  return est;
}

}  // namespace noisebound
