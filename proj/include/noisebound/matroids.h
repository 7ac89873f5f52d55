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

#ifndef NOISEBOUND_MATROIDS_H_
#define NOISEBOUND_MATROIDS_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "noisebound/cube.h"
#include "noisebound/gap_report.h"
#include "noisebound/gf2.h"

namespace noisebound {

inline constexpr char kMatroidRankId[] = "matroid-rank";
inline constexpr char kTutteId[] = "tutte";
inline constexpr char kTailId[] = "tail";
inline constexpr char kGraphId[] = "graph";

// Exhaustive subset sums over the ground set are refused above this size.
inline constexpr int kDefaultMaxTutteGround = 24;

// Matroid on the columns of a GF(2) matrix. Zero columns are loops.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  explicit BinaryMatroid(BitMatrix matrix);

  int ground_size() const { return matrix_.cols; }
  int rank() const { return rank_; }
  const BitMatrix& matrix() const { return matrix_; }
  // One word per column over a basis of the row space.
  const std::vector<uint64_t>& columns() const { return columns_; }

 private:
  BitMatrix matrix_;
  std::vector<uint64_t> columns_;
  int rank_ = 0;
};

int MatroidRank(const BinaryMatroid& m, SubsetMask s);

// T(x, y) = sum_{i,j} coeff(i, j) x^i y^j.
class TuttePolynomial {
 public:
  TuttePolynomial() = default;
  // coeffs[i][j] multiplies x^i y^j.
  explicit TuttePolynomial(std::vector<std::vector<int64_t>> coeffs);

  int64_t coeff(int i, int j) const;
  int x_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int y_degree() const;
  const std::vector<std::vector<int64_t>>& coeffs() const { return coeffs_; }

  double Evaluate(double x, double y) const;
  // dT/dy at (x, y).
  double EvaluateDy(double x, double y) const;
  // Exact value at integer arguments.
  __int128 EvaluateExact(int64_t x, int64_t y) const;

  bool operator==(const TuttePolynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<std::vector<int64_t>> coeffs_;
};

// Corank-nullity sum over all 2^n subsets, in exact integers.
TuttePolynomial ComputeTuttePolynomial(const BinaryMatroid& m,
                                       int max_n = kDefaultMaxTutteGround);

// t = p^{1/(2 ln 2)}; t >= p on [0, 1].
double MatchedDensity(double p);

// log2 E_{S~p} 2^{|S|-r(S)} <= E_{T~t} (|T| - r(T)), t = MatchedDensity(p).
GapReport MatroidRankGap(const BinaryMatroid& m, double p,
                         Sampling sampling = {});

// The two Tutte-form restatements against direct subset sums:
//   p^k (1-p)^{n-k} T(1/p, (1+p)/(1-p)) = E_{S~p} 2^{|S|-r(S)}
//   t^{k+1} (1-t)^{n-k-1} T_y(1/t, 1/(1-t)) = E_{T~t} (|T| - r(T))
struct TutteIdentityCheck {
  double subset_tutte = 0.0;
  double subset_direct = 0.0;
  double derivative_tutte = 0.0;
  double derivative_direct = 0.0;
  double subset_relative_error = 0.0;
  double derivative_relative_error = 0.0;
  // log2 of the first Tutte form against the second; same orientation as
  // MatroidRankGap.
  GapReport restated;
};
TutteIdentityCheck CheckTutteIdentities(const BinaryMatroid& m,
                                        const TuttePolynomial& tutte, double p);
TutteIdentityCheck CheckTutteIdentities(const BinaryMatroid& m, double p);

// Pr_{S~p}{|S| - r(S) >= E_{T~t}(|T| - r(T)) + delta} <= 2^{-delta}, exact.
struct TailCheck {
  double threshold = 0.0;
  double probability = 0.0;
  double bound = 0.0;
  GapReport report;  // lhs = probability, rhs = bound
};
TailCheck CheckTailBound(const BinaryMatroid& m, double p, double delta);

// mu(p) = E_{S~p} (|S| - r(S)) at each grid point.
std::vector<std::pair<double, double>> MuCurve(const BinaryMatroid& m,
                                               const std::vector<double>& grid);

// Bounded-differences comparator exp(-2((t-p) mu(p) + p delta)^2 / (p^2 n))
// for 0 < p <= t <= 1. Report-only.
double BoundedDifferencesTail(const BinaryMatroid& m, double p, double t,
                              double delta);
double BoundedDifferencesTail(int n, double mu_p, double p, double t,
                              double delta);

// A multigraph on vertices 0..vertex_count-1; loops and parallel edges allowed.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

void ValidateGraph(const Graph& g);

// Incidence matrix over GF(2): column e has ones at its two endpoints (a
// loop gives a zero column).
BinaryMatroid GraphicMatroid(const Graph& g);

// Components of (V, S) counting isolated vertices.
int ConnectedComponents(const Graph& g, SubsetMask s);

// log2 E_{S~p} 2^{|S| + c(S)} <= t|E| + E_{T~t} c(T), computed with
// union-find over edge subsets.
GapReport GraphInequalityGap(const Graph& g, double p, Sampling sampling = {});

}  // namespace noisebound

#endif  // NOISEBOUND_MATROIDS_H_
