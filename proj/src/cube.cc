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

#include "noisebound/cube.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace noisebound {
namespace {

void CheckDim(int n, size_t size, int max_dim, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative dimension");
  if (n > max_dim || n > 62) {
    throw CapExceeded(std::string(what) + ": dimension " + std::to_string(n) +
                      " exceeds cap " + std::to_string(max_dim));
  }
  if (size != (size_t{1} << n)) {
    throw std::invalid_argument(std::string(what) + ": expected 2^" +
                                std::to_string(n) + " values, got " +
                                std::to_string(size));
  }
}

// Unnormalized in-place butterfly: v <- sum_y (-1)^{<x,y>} v[y].
void Butterfly(std::vector<double>& v) {
  const size_t size = v.size();
  for (size_t half = 1; half < size; half <<= 1) {
    for (size_t block = 0; block < size; block += 2 * half) {
      for (size_t j = block; j < block + half; ++j) {
        const double a = v[j];
        const double b = v[j + half];
        v[j] = a + b;
        v[j + half] = a - b;
      }
    }
  }
}

void RequireSameDim(const CubeFunction& f, const CubeFunction& g) {
  if (f.dim() != g.dim()) {
    throw std::invalid_argument("dimension mismatch: " +
                                std::to_string(f.dim()) + " vs " +
                                std::to_string(g.dim()));
  }
}

}  // namespace

CubeFunction::CubeFunction(int n, std::vector<double> values, int max_dim)
    : n_(n), values_(std::move(values)) {
  CheckDim(n, values_.size(), max_dim, "CubeFunction");
}

CubeFunction CubeFunction::Constant(int n, double c, int max_dim) {
  if (n < 0 || n > max_dim || n > 62) CheckDim(n, 0, max_dim, "CubeFunction");
  return CubeFunction(n, std::vector<double>(size_t{1} << n, c), max_dim);
}

CubeFunction CubeFunction::Character(int n, SubsetMask r, int max_dim) {
  if (n < 0 || n > max_dim || n > 62) CheckDim(n, 0, max_dim, "CubeFunction");
  if (!r.IsSubsetOf(SubsetMask::Full(n))) {
    throw std::invalid_argument("character frequency outside [n]");
  }
  std::vector<double> v(size_t{1} << n);
  for (size_t x = 0; x < v.size(); ++x) {
    v[x] = (std::popcount(x & r.bits) & 1) ? -1.0 : 1.0;
  }
  return CubeFunction(n, std::move(v), max_dim);
}

double CubeFunction::Mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) /
         static_cast<double>(values_.size());
}

double CubeFunction::Max() const {
  return *std::max_element(values_.begin(), values_.end());
}

bool CubeFunction::IsNonnegative() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return v >= 0.0; });
}

bool CubeFunction::IsZero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return v == 0.0; });
}

bool CubeFunction::IsConstant() const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](double v) { return v == values_[0]; });
}

CubeFunction CubeFunction::Scaled(double c) const {
  CubeFunction out = *this;
  for (double& v : out.values_) v *= c;
  return out;
}

CubeFunction CubeFunction::Pow(double p) const {
  CubeFunction out = *this;
  for (double& v : out.values_) v = std::pow(std::abs(v), p);
  return out;
}

FourierSpectrum::FourierSpectrum(int n, std::vector<double> coeffs, int max_dim)
    : n_(n), coeffs_(std::move(coeffs)) {
  CheckDim(n, coeffs_.size(), max_dim, "FourierSpectrum");
}

FourierSpectrum WhtForward(const CubeFunction& f) {
  std::vector<double> v(f.values().begin(), f.values().end());
  Butterfly(v);
  // 2^-n is a power of two, so the scaling itself adds no rounding.
  const double scale = std::ldexp(1.0, -f.dim());
  for (double& c : v) c *= scale;
  return FourierSpectrum(f.dim(), std::move(v), f.dim());
}

CubeFunction WhtInverse(const FourierSpectrum& s) {
  std::vector<double> v(s.coeffs().begin(), s.coeffs().end());
  Butterfly(v);
  return CubeFunction(s.dim(), std::move(v), s.dim());
}

CubeFunction NoiseOperator(const CubeFunction& f, double eps) {
  if (!(eps >= 0.0 && eps <= 0.5)) {
    throw std::invalid_argument("noise parameter must lie in [0, 1/2], got " +
                                std::to_string(eps));
  }
  if (eps == 0.0) return f;
  const int n = f.dim();
  if (eps == 0.5) return CubeFunction::Constant(n, f.Mean(), n);

  const double rho = 1.0 - 2.0 * eps;
  std::vector<double> multiplier(n + 1);
  for (int k = 0; k <= n; ++k) multiplier[k] = std::pow(rho, k);

  FourierSpectrum spec = WhtForward(f);
  std::vector<double> c(spec.coeffs().begin(), spec.coeffs().end());
  for (size_t r = 0; r < c.size(); ++r) c[r] *= multiplier[std::popcount(r)];
  return WhtInverse(FourierSpectrum(n, std::move(c), n));
}

CubeFunction ConditionalExpectation(const CubeFunction& f, SubsetMask t) {
  const int n = f.dim();
  if (!t.IsSubsetOf(SubsetMask::Full(n))) {
    throw std::invalid_argument("conditioning set outside [n]");
  }
  std::vector<double> v(f.values().begin(), f.values().end());
  for (int i = 0; i < n; ++i) {
    if (t.contains(i)) continue;
    const size_t bit = size_t{1} << i;
    for (size_t x = 0; x < v.size(); ++x) {
      if (x & bit) continue;
      const double avg = 0.5 * (v[x] + v[x | bit]);
      v[x] = avg;
      v[x | bit] = avg;
    }
  }
  return CubeFunction(n, std::move(v), n);
}

double ConditionalNorm(const CubeFunction& f, SubsetMask t, double q) {
  if (!(q >= 1.0)) {
    throw std::invalid_argument("norm exponent must be >= 1");
  }
  const int n = f.dim();
  if (!t.IsSubsetOf(SubsetMask::Full(n))) {
    throw std::invalid_argument("conditioning set outside [n]");
  }
  std::vector<double> fiber_sum(f.size(), 0.0);
  for (size_t x = 0; x < f.size(); ++x) fiber_sum[x & t.bits] += f[x];

  const double fiber_weight = std::ldexp(1.0, -(n - t.size()));
  double acc = 0.0;
  // Walk every submask of t (including t itself and 0).
  uint64_t s = t.bits;
  while (true) {
    const double value = std::abs(fiber_sum[s] * fiber_weight);
    if (std::isinf(q)) {
      acc = std::max(acc, value);
    } else {
      acc += std::pow(value, q);
    }
    if (s == 0) break;
    s = (s - 1) & t.bits;
  }
  if (std::isinf(q)) return acc;
  return std::pow(std::ldexp(acc, -t.size()), 1.0 / q);
}

double LqNorm(const CubeFunction& f, double q) {
  if (!(q >= 1.0)) {
    throw std::invalid_argument("norm exponent must be >= 1, got " +
                                std::to_string(q));
  }
  if (std::isinf(q)) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  double acc = 0.0;
  if (q == 1.0) {
    for (double v : f.values()) acc += std::abs(v);
  } else if (q == 2.0) {
    for (double v : f.values()) acc += v * v;
  } else {
    for (double v : f.values()) acc += std::pow(std::abs(v), q);
  }
  return std::pow(acc / static_cast<double>(f.size()), 1.0 / q);
}

double Entropy(const CubeFunction& f) {
  if (!f.IsNonnegative()) {
    throw std::invalid_argument("entropy requires a nonnegative function");
  }
  const double mean = f.Mean();
  if (!(mean > 0.0)) {
    throw std::invalid_argument("entropy of the zero function is undefined");
  }
  double acc = 0.0;
  for (double v : f.values()) {
    if (v > 0.0) acc += v * std::log2(v);
  }
  acc /= static_cast<double>(f.size());
  return std::max(0.0, acc - mean * std::log2(mean));
}

double RenyiEntropy(const CubeFunction& f, double q) {
  if (!(q > 1.0)) {
    throw std::invalid_argument("Renyi order must exceed 1");
  }
  if (!f.IsNonnegative()) {
    throw std::invalid_argument("Renyi entropy requires a nonnegative function");
  }
  if (std::abs(f.Mean() - 1.0) > 1e-9) {
    throw std::invalid_argument("Renyi entropy expects E f = 1; normalize first");
  }
  if (std::isinf(q)) return std::log2(f.Max());
  return q / (q - 1.0) * std::log2(LqNorm(f, q));
}

double DirichletForm(const CubeFunction& f, const CubeFunction& g) {
  RequireSameDim(f, g);
  double acc = 0.0;
  for (int i = 0; i < f.dim(); ++i) {
    const size_t bit = size_t{1} << i;
    for (size_t x = 0; x < f.size(); ++x) {
      if (x & bit) continue;
      acc += (f[x] - f[x | bit]) * (g[x] - g[x | bit]);
    }
  }
  // Each edge is seen from both endpoints in E_x sum_{y~x}.
  return 2.0 * acc / static_cast<double>(f.size());
}

}  // namespace noisebound
