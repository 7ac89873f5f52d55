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

#include "noisebound/inequalities.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "noisebound/subset_expectation.h"

namespace noisebound {
namespace {

constexpr double kLn2 = std::numbers::ln2;

void RequireNonnegativeNonzero(const CubeFunction& f) {
  if (!f.IsNonnegative()) {
    throw std::invalid_argument("function must be nonnegative");
  }
  if (f.IsZero()) {
    throw std::invalid_argument("function must not vanish identically");
  }
}

void RequireNoise(double eps) {
  if (!(eps >= 0.0 && eps <= 0.5)) {
    throw std::invalid_argument("noise parameter must lie in [0, 1/2]");
  }
}

void RequireFiniteOrder(double q) {
  if (!(q > 1.0) || std::isinf(q)) {
    throw std::invalid_argument("order q must be finite and > 1");
  }
}

// E_{T ~ lambda} h(T), dispatching on the sampling mode.
McEstimate Expect(int n, double lambda, const SubsetFunction& h,
                  const Sampling& sampling, int exact_cap) {
  if (sampling.mode == EvalMode::kExact) {
    return {SubsetExpectationExact(n, lambda, h, exact_cap), 0.0};
  }
  return SubsetExpectationMc(n, lambda, h, sampling.samples, sampling.seed);
}

// ln||E(f|T)||_q for every T.
std::vector<double> AllConditionalLogNorms(const CubeFunction& f, double q) {
  const uint64_t count = uint64_t{1} << f.dim();
  std::vector<double> out(count);
  for (uint64_t t = 0; t < count; ++t) {
    out[t] = std::log(ConditionalNorm(f, SubsetMask(t), q));
  }
  return out;
}

double WeightedSubsetSum(int n, double lambda, const std::vector<double>& h) {
  std::vector<double> weight(n + 1);
  for (int k = 0; k <= n; ++k) {
    weight[k] = std::pow(lambda, k) * std::pow(1.0 - lambda, n - k);
  }
  double acc = 0.0;
  for (size_t t = 0; t < h.size(); ++t) {
    acc += weight[std::popcount(t)] * h[t];
  }
  return acc;
}

double RelativeError(double numeric, double formula) {
  const double scale = std::abs(formula);
  if (scale == 0.0) return std::abs(numeric);
  return std::abs(numeric - formula) / scale;
}

}  // namespace

double RExponent(double q) {
  if (!(q > 1.0)) {
    throw std::invalid_argument("r(q) is defined for q > 1, got " +
                                std::to_string(q));
  }
  const double base = 1.0 / (2.0 * kLn2);
  if (std::isinf(q)) return base;
  if (q <= 2.0) {
    // expm1 keeps (2^{q-1} - 1) / (q-1) accurate as q -> 1.
    return base * std::exp2(3.0 - q) * std::expm1((q - 1.0) * kLn2) /
           (q - 1.0);
  }
  return base * q / (q - 1.0);
}

double DensityForNoise(double q, double eps) {
  RequireNoise(eps);
  return std::pow(1.0 - 2.0 * eps, RExponent(q));
}

double NoiseForDensity(double q, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  return 0.5 * (1.0 - std::pow(lambda, 1.0 / RExponent(q)));
}

GapReport MainInequalityGap(const CubeFunction& f, double q, double eps,
                            Sampling sampling) {
  RequireNonnegativeNonzero(f);
  RequireNoise(eps);
  const double r = RExponent(q);
  const int n = f.dim();
  const double lambda = std::pow(1.0 - 2.0 * eps, r);

  double lhs;
  McEstimate rhs;
  if (eps == 0.5) {
    // Total noise: both sides are ln E f; lambda = 0 would otherwise need 0^0.
    lhs = rhs.mean = std::log(f.Mean());
  } else {
    lhs = std::log(LqNorm(NoiseOperator(f, eps), q));
    rhs = Expect(
        n, lambda,
        [&](SubsetMask t) { return std::log(ConditionalNorm(f, t, q)); },
        sampling, kDefaultHeavyExactSubsetCap);
  }
  GapReport report = MakeGapReport(kMainId, n, q, eps, lhs, rhs.mean, sampling);
  report.std_error = rhs.std_error;
  report.equality_case = eps == 0.0 || eps == 0.5 || f.IsConstant();
  return report;
}

GapReport NoisyEntropyGap(const CubeFunction& f, double eps,
                          Sampling sampling) {
  RequireNonnegativeNonzero(f);
  RequireNoise(eps);
  const int n = f.dim();
  const double lambda = (1.0 - 2.0 * eps) * (1.0 - 2.0 * eps);
  const double lhs = Entropy(NoiseOperator(f, eps));
  const McEstimate rhs = Expect(
      n, lambda,
      [&](SubsetMask t) { return Entropy(ConditionalExpectation(f, t)); },
      sampling, kDefaultHeavyExactSubsetCap);
  GapReport report =
      MakeGapReport(kEntropyId, n, 1.0, eps, lhs, rhs.mean, sampling);
  report.std_error = rhs.std_error;
  report.equality_case = eps == 0.0 || f.IsConstant();
  return report;
}

double HypercontractiveRhs(const CubeFunction& f, double q, double eps) {
  RequireNoise(eps);
  if (!(q >= 1.0) || std::isinf(q)) {
    throw std::invalid_argument("order q must be finite and >= 1");
  }
  const double rho = 1.0 - 2.0 * eps;
  return LqNorm(f, 1.0 + (q - 1.0) * rho * rho);
}

GapReport HypercontractiveGap(const CubeFunction& f, double q, double eps) {
  const double rhs = HypercontractiveRhs(f, q, eps);
  const double lhs = LqNorm(NoiseOperator(f, eps), q);
  GapReport report =
      MakeGapReport(kHypercontractiveId, f.dim(), q, eps, lhs, rhs);
  report.equality_case = eps == 0.0 || f.IsConstant();
  return report;
}

double CoordinateNormDrop(const CubeFunction& f, double q) {
  const int n = f.dim();
  const SubsetMask full = SubsetMask::Full(n);
  double drop = n * std::log(LqNorm(f, q));
  for (int i = 0; i < n; ++i) {
    const SubsetMask t(full.bits & ~(uint64_t{1} << i));
    drop -= std::log(ConditionalNorm(f, t, q));
  }
  return drop;
}

GapReport LogSobolevGap(const CubeFunction& f, double q) {
  RequireNonnegativeNonzero(f);
  RequireFiniteOrder(q);
  // Both sides are q-homogeneous; evaluate at unit L_q norm.
  const CubeFunction g = f.Scaled(1.0 / LqNorm(f, q));
  const double energy = DirichletForm(g.Pow(q - 1.0), g);
  const double bound = 4.0 * RExponent(q) * CoordinateNormDrop(g, q);
  GapReport report = MakeGapReport(kLogSobolevId, f.dim(), q, 0.0, bound, energy);
  report.equality_case = LogSobolevEqualityCondition(f, q);
  return report;
}

bool LogSobolevEqualityCondition(const CubeFunction& f, double q) {
  if (q < 2.0) return f.IsConstant();
  for (int i = 0; i < f.dim(); ++i) {
    const size_t bit = size_t{1} << i;
    for (size_t x = 0; x < f.size(); ++x) {
      if (x & bit) continue;
      const double a = f[x];
      const double b = f[x | bit];
      if (a != b && a != 0.0 && b != 0.0) return false;
    }
  }
  return true;
}

GapReport TwoPointGap(double t, double q) {
  RequireFiniteOrder(q);
  if (!(t >= 1.0)) {
    throw std::invalid_argument("two-point ratio t must be >= 1");
  }
  const double x = std::isinf(t) ? 0.0 : 2.0 / (1.0 + t);
  const CubeFunction g(1, {x, 2.0 - x});
  const double energy = DirichletForm(g.Pow(q - 1.0), g);
  const double moment = std::pow(LqNorm(g, q), q);
  const double bound = 4.0 * RExponent(q) * moment * std::log(LqNorm(g, q));
  GapReport report = MakeGapReport(kTwoPointId, 1, q, t, bound, energy);
  report.equality_case = t == 1.0 || (std::isinf(t) && q >= 2.0);
  return report;
}

DerivativeCheck CheckDerivatives(const CubeFunction& f, double q, double step) {
  RequireNonnegativeNonzero(f);
  RequireFiniteOrder(q);
  DerivativeCheck out;
  const int n = f.dim();
  const double r = RExponent(q);
  if (f.IsConstant()) {
    out.skipped = true;
    out.report = MakeGapReport(kDerivativeId, n, q, 0.0, 0.0, 0.0);
    out.report.equality_case = true;
    return out;
  }

  const double moment = std::pow(LqNorm(f, q), q);
  out.f_formula = -DirichletForm(f.Pow(q - 1.0), f) / (2.0 * moment);
  out.g_formula = -2.0 * r * CoordinateNormDrop(f, q);

  auto lhs_at = [&](double eps) {
    return std::log(LqNorm(NoiseOperator(f, eps), q));
  };
  const std::vector<double> log_norms = AllConditionalLogNorms(f, q);
  auto rhs_at = [&](double eps) {
    return WeightedSubsetSum(n, std::pow(1.0 - 2.0 * eps, r), log_norms);
  };
  // Four-point one-sided stencil, O(h^3) truncation.
  auto one_sided = [&](auto&& fn) {
    return (-11.0 * fn(0.0) + 18.0 * fn(step) - 9.0 * fn(2.0 * step) +
            2.0 * fn(3.0 * step)) /
           (6.0 * step);
  };
  out.f_numeric = one_sided(lhs_at);
  out.g_numeric = one_sided(rhs_at);
  out.f_relative_error = RelativeError(out.f_numeric, out.f_formula);
  out.g_relative_error = RelativeError(out.g_numeric, out.g_formula);
  out.report =
      MakeGapReport(kDerivativeId, n, q, 0.0, out.f_formula, out.g_formula);
  // Strictness fails exactly on the log-Sobolev equality set.
  out.report.equality_case = LogSobolevEqualityCondition(f, q);
  return out;
}

}  // namespace noisebound
