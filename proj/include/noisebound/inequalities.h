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

#ifndef NOISEBOUND_INEQUALITIES_H_
#define NOISEBOUND_INEQUALITIES_H_

#include "noisebound/cube.h"
#include "noisebound/gap_report.h"

namespace noisebound {

// Report ids, also used as the first CSV column.
inline constexpr char kMainId[] = "main";
inline constexpr char kEntropyId[] = "entropy";
inline constexpr char kHypercontractiveId[] = "hypercontractive";
inline constexpr char kLogSobolevId[] = "logsobolev";
inline constexpr char kTwoPointId[] = "twopoint";
inline constexpr char kDerivativeId[] = "derivative";

// The exponent r(q) relating noise rate to subset density:
//   (1/(2 ln 2)) * 2^{3-q} (2^{q-1} - 1) / (q-1)   for 1 < q <= 2,
//   (1/(2 ln 2)) * q / (q-1)                       for q >= 2,
// and 1/(2 ln 2) at q = infinity. Throws std::invalid_argument for q <= 1.
double RExponent(double q);

// lambda(q, eps) = (1-2eps)^{r(q)}.
double DensityForNoise(double q, double eps);
// eps(q, lambda) = (1 - lambda^{1/r(q)}) / 2, the inverse of the above.
double NoiseForDensity(double q, double lambda);

// ln ||T_eps f||_q  <=  E_{T ~ lambda(q,eps)} ln ||E(f|T)||_q.
// Natural logarithms. f must be nonnegative and not identically zero.
GapReport MainInequalityGap(const CubeFunction& f, double q, double eps,
                            Sampling sampling = {});

// Ent(T_eps f) <= E_{T ~ (1-2eps)^2} Ent(E(f|T)), entropies in bits.
GapReport NoisyEntropyGap(const CubeFunction& f, double eps,
                          Sampling sampling = {});

// ||f||_{1 + (q-1)(1-2eps)^2}, the classical hypercontractive bound on
// ||T_eps f||_q.
double HypercontractiveRhs(const CubeFunction& f, double q, double eps);
GapReport HypercontractiveGap(const CubeFunction& f, double q, double eps);

// n ln||f||_q - sum_{|T|=n-1} ln||E(f|T)||_q.
double CoordinateNormDrop(const CubeFunction& f, double q);

// E(f^{q-1}, f) >= 4 r(q) E f^q * CoordinateNormDrop(f, q). The report stores
// the right-hand side of that display as lhs.
GapReport LogSobolevGap(const CubeFunction& f, double q);

// Structural equality condition of the log-Sobolev inequality: f constant
// for 1 < q < 2; for q >= 2, every edge with unequal endpoint values has a
// zero endpoint.
bool LogSobolevEqualityCondition(const CubeFunction& f, double q);

// Two-point case with E g = 1: g = (x, 2-x), t = (2-x)/x >= 1. t = infinity
// encodes x = 0. Compares E(g^{q-1}, g) against 4 r(q) E g^q ln||g||_q.
GapReport TwoPointGap(double t, double q);

struct DerivativeCheck {
  bool skipped = false;  // constant f: both derivatives vanish
  double f_formula = 0.0;  // -E(f^{q-1}, f) / (2 E f^q)
  double f_numeric = 0.0;
  double g_formula = 0.0;  // -2 r(q) CoordinateNormDrop(f, q)
  double g_numeric = 0.0;
  double f_relative_error = 0.0;
  double g_relative_error = 0.0;
  // lhs = F'(f,0), rhs = G'(f,0); the claim is strict.
  GapReport report;
};

inline constexpr double kDerivativeStep = 1e-5;

// Derivatives at eps = 0 of eps -> ln||T_eps f||_q and of
// eps -> E_{T ~ lambda(q,eps)} ln||E(f|T)||_q, by closed form and by a
// second-order one-sided difference with step `step`.
DerivativeCheck CheckDerivatives(const CubeFunction& f, double q,
                                 double step = kDerivativeStep);

}  // namespace noisebound

#endif  // NOISEBOUND_INEQUALITIES_H_
