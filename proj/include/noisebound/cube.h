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

#ifndef NOISEBOUND_CUBE_H_
#define NOISEBOUND_CUBE_H_

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace noisebound {

// Largest cube dimension accepted by default (2^24 doubles = 128 MB).
inline constexpr int kDefaultMaxDim = 24;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Raised when an input is larger than a configured enumeration or memory cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A set of coordinates (or of Fourier frequencies) of {0,1}^n. Bit i stands
// for coordinate i+1; a point x of the cube uses the same encoding.
struct SubsetMask {
  uint64_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(uint64_t b) : bits(b) {}

  static constexpr SubsetMask Full(int n) {
    return SubsetMask(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool IsSubsetOf(SubsetMask other) const {
    return (bits & ~other.bits) == 0;
  }
  constexpr SubsetMask operator&(SubsetMask o) const {
    return SubsetMask(bits & o.bits);
  }
  constexpr SubsetMask operator|(SubsetMask o) const {
    return SubsetMask(bits | o.bits);
  }
  constexpr bool operator==(const SubsetMask&) const = default;
};

// A real-valued function on {0,1}^n, stored densely as 2^n values.
class CubeFunction {
 public:
  CubeFunction() = default;
  CubeFunction(int n, std::vector<double> values, int max_dim = kDefaultMaxDim);

  static CubeFunction Constant(int n, double c, int max_dim = kDefaultMaxDim);
  // The Walsh character w_R(x) = (-1)^{|R ∩ x|}.
  static CubeFunction Character(int n, SubsetMask r,
                                int max_dim = kDefaultMaxDim);

  int dim() const { return n_; }
  size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](size_t x) const { return values_[x]; }

  double Mean() const;
  double Max() const;
  bool IsNonnegative() const;
  bool IsZero() const;
  bool IsConstant() const;

  CubeFunction Scaled(double c) const;
  // Pointwise power |f|^p.
  CubeFunction Pow(double p) const;

 private:
  int n_ = 0;
  std::vector<double> values_{0.0};
};

// Walsh-Fourier coefficients f^(R) = E_x f(x) w_R(x), indexed by the mask of R.
class FourierSpectrum {
 public:
  FourierSpectrum() = default;
  FourierSpectrum(int n, std::vector<double> coeffs,
                  int max_dim = kDefaultMaxDim);

  int dim() const { return n_; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](size_t r) const { return coeffs_[r]; }

 private:
  int n_ = 0;
  std::vector<double> coeffs_{0.0};
};

FourierSpectrum WhtForward(const CubeFunction& f);
CubeFunction WhtInverse(const FourierSpectrum& s);

// T_eps f, the average of f over independent bit flips of probability eps.
// Applied as the Fourier multiplier (1-2eps)^{|R|}. Throws
// std::invalid_argument unless eps is in [0, 1/2].
CubeFunction NoiseOperator(const CubeFunction& f, double eps);

// E(f|T)(x) = average of f(y) over y agreeing with x on T.
CubeFunction ConditionalExpectation(const CubeFunction& f, SubsetMask t);

// ||E(f|T)||_q without materializing E(f|T): the marginal on T has the same
// distribution of values as E(f|T) under the uniform measure.
double ConditionalNorm(const CubeFunction& f, SubsetMask t, double q);

// (E_x |f|^q)^{1/q}; q = infinity gives max |f|. Throws for q < 1.
double LqNorm(const CubeFunction& f, double q);

// Ent(f) = E f log2 f - E f log2 E f, with 0 log 0 = 0.
double Entropy(const CubeFunction& f);

// (1/(q-1)) log2 ||f||_q^q for f with E f = 1 (within 1e-9).
double RenyiEntropy(const CubeFunction& f, double q);

// E_x sum_{y ~ x} (f(x) - f(y)) (g(x) - g(y)) over hypercube edges.
double DirichletForm(const CubeFunction& f, const CubeFunction& g);

}  // namespace noisebound

#endif  // NOISEBOUND_CUBE_H_
