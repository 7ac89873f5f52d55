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

#include "noisebound/matroids.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "noisebound/subset_expectation.h"

namespace noisebound {
namespace {

constexpr double kLn2 = std::numbers::ln2;

void RequireProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

RankProfile ProfileOf(const BinaryMatroid& m, int max_n) {
  if (m.ground_size() > max_n) {
    throw CapExceeded("exhaustive subset enumeration over n=" +
                      std::to_string(m.ground_size()) + " exceeds cap " +
                      std::to_string(max_n));
  }
  return ComputeRankProfile(m.columns());
}

// sum_{s,r} N[s][r] p^s (1-p)^{n-s} value(s, r).
template <typename Fn>
double ProfileExpectation(const RankProfile& profile, double p, Fn&& value) {
  const int n = static_cast<int>(profile.size()) - 1;
  double acc = 0.0;
  for (int s = 0; s <= n; ++s) {
    const double w = std::pow(p, s) * std::pow(1.0 - p, n - s);
    if (w == 0.0) continue;
    for (int r = 0; r <= s; ++r) {
      if (profile[s][r] != 0) acc += w * double(profile[s][r]) * value(s, r);
    }
  }
  return acc;
}

double MuFromProfile(const RankProfile& profile, double p) {
  return ProfileExpectation(profile, p,
                            [](int s, int r) { return double(s - r); });
}

double RelativeError(double value, double reference) {
  const double diff = std::abs(value - reference);
  if (reference == 0.0) return diff;
  return diff / std::abs(reference);
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

}  // namespace

BinaryMatroid::BinaryMatroid(BitMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.cols < 0 || matrix_.cols > kMaxColumns) {
    throw std::invalid_argument("matroid ground set must have 0..64 elements");
  }
  const uint64_t allowed = SubsetMask::Full(matrix_.cols).bits;
  for (uint64_t r : matrix_.rows) {
    if (r & ~allowed) throw std::invalid_argument("matrix row wider than ground set");
  }
  columns_ = CompressedColumns(matrix_);
  rank_ = Gf2Rank(matrix_.rows);
}

int MatroidRank(const BinaryMatroid& m, SubsetMask s) {
  if (!s.IsSubsetOf(SubsetMask::Full(m.ground_size()))) {
    throw std::invalid_argument("subset outside the ground set");
  }
  XorBasis basis;
  for (int i = 0; i < m.ground_size(); ++i) {
    if (s.contains(i)) basis.Insert(m.columns()[i]);
  }
  return basis.rank();
}

TuttePolynomial::TuttePolynomial(std::vector<std::vector<int64_t>> coeffs)
    : coeffs_(std::move(coeffs)) {}

int64_t TuttePolynomial::coeff(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  if (j < 0 || j >= static_cast<int>(coeffs_[i].size())) return 0;
  return coeffs_[i][j];
}

int TuttePolynomial::y_degree() const {
  int d = -1;
  for (const auto& row : coeffs_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

double TuttePolynomial::Evaluate(double x, double y) const {
  double acc = 0.0;
  for (int i = x_degree(); i >= 0; --i) {
    double row = 0.0;
    for (int j = static_cast<int>(coeffs_[i].size()) - 1; j >= 0; --j) {
      row = row * y + double(coeffs_[i][j]);
    }
    acc = acc * x + row;
  }
  return acc;
}

double TuttePolynomial::EvaluateDy(double x, double y) const {
  double acc = 0.0;
  for (int i = x_degree(); i >= 0; --i) {
    double row = 0.0;
    for (int j = static_cast<int>(coeffs_[i].size()) - 1; j >= 1; --j) {
      row = row * y + double(j) * double(coeffs_[i][j]);
    }
    acc = acc * x + row;
  }
  return acc;
}

__int128 TuttePolynomial::EvaluateExact(int64_t x, int64_t y) const {
  __int128 acc = 0;
  for (int i = x_degree(); i >= 0; --i) {
    __int128 row = 0;
    for (int j = static_cast<int>(coeffs_[i].size()) - 1; j >= 0; --j) {
      row = row * y + coeffs_[i][j];
    }
    acc = acc * x + row;
  }
  return acc;
}

TuttePolynomial ComputeTuttePolynomial(const BinaryMatroid& m, int max_n) {
  const RankProfile profile = ProfileOf(m, max_n);
  const int n = m.ground_size();
  const int k = m.rank();

  // binom[a][i] for a <= n.
  std::vector<std::vector<__int128>> binom(n + 1, std::vector<__int128>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    binom[a][0] = 1;
    for (int i = 1; i <= a; ++i) binom[a][i] = binom[a - 1][i - 1] + binom[a - 1][i];
  }

  // (x-1)^a (y-1)^b with a = corank k - r, b = nullity s - r.
  std::vector<std::vector<__int128>> acc(k + 1,
                                         std::vector<__int128>(n - k + 1, 0));
  for (int s = 0; s <= n; ++s) {
    for (int r = 0; r <= s && r <= k; ++r) {
      const uint64_t count = profile[s][r];
      if (count == 0) continue;
      const int a = k - r;
      const int b = s - r;
      for (int i = 0; i <= a; ++i) {
        const __int128 cx = ((a - i) % 2 == 0 ? 1 : -1) * binom[a][i];
        for (int j = 0; j <= b; ++j) {
          const __int128 cy = ((b - j) % 2 == 0 ? 1 : -1) * binom[b][j];
          acc[i][j] += static_cast<__int128>(count) * cx * cy;
        }
      }
    }
  }
  std::vector<std::vector<int64_t>> coeffs(k + 1,
                                           std::vector<int64_t>(n - k + 1, 0));
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= n - k; ++j) {
      if (acc[i][j] < 0 || acc[i][j] > INT64_MAX) {
        throw std::logic_error("Tutte coefficient out of range");
      }
      coeffs[i][j] = static_cast<int64_t>(acc[i][j]);
    }
  }
  return TuttePolynomial(std::move(coeffs));
}

double MatchedDensity(double p) {
  RequireProbability(p, "p");
  return std::pow(p, 1.0 / (2.0 * kLn2));
}

GapReport MatroidRankGap(const BinaryMatroid& m, double p, Sampling sampling) {
  RequireProbability(p, "p");
  const double t = MatchedDensity(p);
  const int n = m.ground_size();
  double lhs;
  double rhs;
  if (sampling.mode == EvalMode::kExact) {
    const RankProfile profile = ProfileOf(m, kDefaultExactSubsetCap);
    lhs = std::log2(ProfileExpectation(
        profile, p, [](int s, int r) { return std::exp2(s - r); }));
    rhs = MuFromProfile(profile, t);
  } else {
    const auto deficiency = [&](SubsetMask s) {
      return double(s.size() - MatroidRank(m, s));
    };
    lhs = std::log2(SubsetExpectationMc(
                        n, p,
                        [&](SubsetMask s) { return std::exp2(deficiency(s)); },
                        sampling.samples, DeriveSeed(sampling.seed, 0))
                        .mean);
    rhs = SubsetExpectationMc(n, t, deficiency, sampling.samples,
                              DeriveSeed(sampling.seed, 1))
              .mean;
  }
  GapReport report = MakeGapReport(kMatroidRankId, n, 2.0, p, lhs, rhs, sampling);
  report.equality_case = p == 0.0 || p == 1.0 || m.rank() == n;
  return report;
}

TutteIdentityCheck CheckTutteIdentities(const BinaryMatroid& m,
                                        const TuttePolynomial& tutte,
                                        double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("Tutte restatement needs p strictly inside (0, 1)");
  }
  const RankProfile profile = ProfileOf(m, kDefaultExactSubsetCap);
  const int n = m.ground_size();
  const int k = m.rank();
  const double t = MatchedDensity(p);

  TutteIdentityCheck out;
  out.subset_direct = ProfileExpectation(
      profile, p, [](int s, int r) { return std::exp2(s - r); });
  out.derivative_direct = MuFromProfile(profile, t);
  out.subset_tutte = std::pow(p, k) * std::pow(1.0 - p, n - k) *
                     tutte.Evaluate(1.0 / p, (1.0 + p) / (1.0 - p));
  out.derivative_tutte = std::pow(t, k + 1) * std::pow(1.0 - t, n - k - 1) *
                         tutte.EvaluateDy(1.0 / t, 1.0 / (1.0 - t));
  out.subset_relative_error = RelativeError(out.subset_tutte, out.subset_direct);
  out.derivative_relative_error =
      RelativeError(out.derivative_tutte, out.derivative_direct);
  out.restated = MakeGapReport(kTutteId, n, 2.0, p, std::log2(out.subset_tutte),
                               out.derivative_tutte);
  out.restated.equality_case = k == n;
  return out;
}

TutteIdentityCheck CheckTutteIdentities(const BinaryMatroid& m, double p) {
  return CheckTutteIdentities(m, ComputeTuttePolynomial(m), p);
}

TailCheck CheckTailBound(const BinaryMatroid& m, double p, double delta) {
  RequireProbability(p, "p");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
  const RankProfile profile = ProfileOf(m, kDefaultExactSubsetCap);
  TailCheck out;
  out.threshold = MuFromProfile(profile, MatchedDensity(p)) + delta;
  // Deficiencies are integers; the slack keeps borderline subsets counted.
  const double cut = out.threshold - 1e-12;
  out.probability = ProfileExpectation(profile, p, [&](int s, int r) {
    return (s - r) >= cut ? 1.0 : 0.0;
  });
  out.bound = std::exp2(-delta);
  out.report = MakeGapReport(kTailId, m.ground_size(), 2.0, p, out.probability,
                             out.bound);
  return out;
}

std::vector<std::pair<double, double>> MuCurve(const BinaryMatroid& m,
                                               const std::vector<double>& grid) {
  const RankProfile profile = ProfileOf(m, kDefaultExactSubsetCap);
  std::vector<std::pair<double, double>> curve;
  curve.reserve(grid.size());
  for (double p : grid) {
    RequireProbability(p, "grid point");
    curve.emplace_back(p, MuFromProfile(profile, p));
  }
  return curve;
}

double BoundedDifferencesTail(int n, double mu_p, double p, double t,
                              double delta) {
  if (!(p > 0.0 && p <= t && t <= 1.0)) {
    throw std::invalid_argument("comparator needs 0 < p <= t <= 1");
  }
  if (n < 1) throw std::invalid_argument("comparator needs a nonempty ground set");
  const double shift = (t - p) * mu_p + p * delta;
  return std::exp(-2.0 * shift * shift / (p * p * n));
}

double BoundedDifferencesTail(const BinaryMatroid& m, double p, double t,
                              double delta) {
  if (!(p > 0.0)) throw std::invalid_argument("comparator needs p > 0");
  const double mu_p = MuCurve(m, {p}).front().second;
  return BoundedDifferencesTail(m.ground_size(), mu_p, p, t, delta);
}

void ValidateGraph(const Graph& g) {
  if (g.vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (g.edge_count() > kMaxColumns) {
    throw std::invalid_argument("graphs are limited to 64 edges");
  }
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    }
  }
}

BinaryMatroid GraphicMatroid(const Graph& g) {
  ValidateGraph(g);
  BitMatrix incidence{g.edge_count(),
                      std::vector<uint64_t>(g.vertex_count, 0)};
  for (int e = 0; e < g.edge_count(); ++e) {
    const uint64_t bit = uint64_t{1} << e;
    incidence.rows[g.edges[e].first] ^= bit;
    incidence.rows[g.edges[e].second] ^= bit;
  }
  return BinaryMatroid(std::move(incidence));
}

int ConnectedComponents(const Graph& g, SubsetMask s) {
  if (!s.IsSubsetOf(SubsetMask::Full(g.edge_count()))) {
    throw std::invalid_argument("edge subset outside the edge set");
  }
  UnionFind uf(g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (s.contains(e)) uf.Unite(g.edges[e].first, g.edges[e].second);
  }
  return uf.components();
}

GapReport GraphInequalityGap(const Graph& g, double p, Sampling sampling) {
  ValidateGraph(g);
  RequireProbability(p, "p");
  const int m = g.edge_count();
  const int v = g.vertex_count;
  const double t = MatchedDensity(p);
  // 2^{|S| + c(S)} = 2^{|V|} 2^{|S| + c(S) - |V|}; the second factor is at
  // most 2^{|E|}, so the sum stays in range for large vertex counts.
  const auto excess = [&](SubsetMask s) {
    return std::exp2(s.size() + ConnectedComponents(g, s) - v);
  };
  const auto components = [&](SubsetMask s) {
    return double(ConnectedComponents(g, s));
  };
  double lhs;
  double expected_components;
  if (sampling.mode == EvalMode::kExact) {
    lhs = v + std::log2(SubsetExpectationExact(m, p, excess));
    expected_components = SubsetExpectationExact(m, t, components);
  } else {
    lhs = v + std::log2(SubsetExpectationMc(m, p, excess, sampling.samples,
                                            DeriveSeed(sampling.seed, 0))
                            .mean);
    expected_components = SubsetExpectationMc(m, t, components, sampling.samples,
                                              DeriveSeed(sampling.seed, 1))
                              .mean;
  }
  const double rhs = t * m + expected_components;
  GapReport report = MakeGapReport(kGraphId, m, 2.0, p, lhs, rhs, sampling);
  report.equality_case =
      p == 0.0 || p == 1.0 || GraphicMatroid(g).rank() == m;
  return report;
}

}  // namespace noisebound
