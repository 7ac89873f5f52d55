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

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "noisebound/cli.h"
#include "noisebound/codes.h"
#include "noisebound/io.h"
#include "noisebound/subset_expectation.h"
#include "report.h"

namespace noisebound::cli {
namespace {

LinearCode LoadCode(const CodeOptions& options) {
  if (options.reed_muller && !options.file.empty()) {
    throw std::invalid_argument("use either --file or --rm, not both");
  }
  if (options.reed_muller) {
    return ReedMuller(options.reed_muller->first, options.reed_muller->second);
  }
  if (options.file.empty()) throw std::invalid_argument("code needs --file or --rm");
  const BitMatrix m = ReadBitMatrixFile(options.file);
  return LinearCode::FromSpanningRows(m.cols, m.rows);
}

template <typename Fn>
Cell Guarded(Fn&& fn) {
  try {
    return Real(fn());
  } catch (const std::invalid_argument&) {
    return Cell();
  } catch (const std::domain_error&) {
    return Cell();
  }
}

std::optional<WeightDistribution> TryWeights(WeightDistribution (*fn)(const LinearCode&),
                                             const LinearCode& code,
                                             std::vector<std::string>& notes,
                                             const char* what) {
  try {
    return fn(code);
  } catch (const CapExceeded& e) {
    notes.push_back(std::string(what) + " weights skipped: " + e.what());
    return std::nullopt;
  }
}

}  // namespace

int RunCode(const RunConfig& config, const CodeOptions& options,
            std::ostream& out, std::ostream& err) {
  config.Validate();
  for (double lambda : options.lambdas) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
      throw std::invalid_argument("lambda must lie in [0, 1]");
    }
  }
  for (double q : options.qs) {
    if (!(q >= 1.0)) throw std::invalid_argument("q must be >= 1 or inf");
  }

  const LinearCode code = LoadCode(options);
  const int n = code.length();
  const int k = code.dimension();
  const double rate = code.rate();

  Report report;
  report.kind = "code";
  bool violation = false;
  std::string first_violation;
  auto flag = [&](const std::string& what) {
    if (!violation) first_violation = what;
    violation = true;
  };

  Table& summary = report.NewTable("code", {"n", "k", "rate"});
  summary.Add({n, k, Real(rate)});

  std::vector<std::string>& notes = report.notes;
  const auto primal = TryWeights(&PrimalWeights, code, notes, "primal");
  const auto dual = TryWeights(&DualWeights, code, notes, "dual");

  // MacWilliams against direct enumeration of both sides, when both fit.
  if (k <= kDefaultMaxEnumerationDim && n - k <= kDefaultMaxEnumerationDim) {
    const WeightDistribution a = ComputeWeightDistribution(code);
    const WeightDistribution b = ComputeWeightDistribution(DualCode(code));
    const bool match = MacWilliamsTransform(a, n, k) == b;
    Table& mw = report.NewTable("macwilliams", {"check", "exact-match"});
    mw.Add({"transform(a) == enumerated dual", match});
    if (!match) flag("MacWilliams transform differs from dual enumeration");
  }

  report.notes.push_back(
      "bound columns are log2 values with the subexponential factor set to 1; "
      "they are comparators, not assertions");
  Table& weights = report.NewTable(
      "weights", {"weight", "a", "b", "log2-bound-primal", "log2-bound-dual",
                  "log2-bound-sberlo", "o(n)-factor"});
  for (int w = 0; w <= n; ++w) {
    weights.Add({
        w,
        primal ? Integer((*primal)[w]) : Cell(),
        dual ? Integer((*dual)[w]) : Cell(),
        Guarded([&] { return BecPrimalSideBoundLog2(n, rate, w, double(k)); }),
        Guarded([&] { return BecDualSideBoundLog2(n, rate, w); }),
        Guarded([&] { return SberloBoundLog2(n, rate, w); }),
        "set-to-1",
    });
  }

  // Rank deficiency per density; exact when enumerable, otherwise sampled.
  const bool exact =
      config.mode == EvalMode::kExact && n <= kDefaultExactSubsetCap;
  if (config.mode == EvalMode::kExact && !exact) {
    report.notes.push_back("n=" + std::to_string(n) + " exceeds the exact subset cap " +
                           std::to_string(kDefaultExactSubsetCap) +
                           "; rank deficiency sampled with " +
                           std::to_string(config.samples) + " draws");
  }
  std::vector<double> deficiency(options.lambdas.size());
  Table& rd = report.NewTable("rank-deficiency",
                              {"lambda", "mode", "samples", "seed", "rank-deficiency"});
  for (size_t i = 0; i < options.lambdas.size(); ++i) {
    const Sampling s = exact ? Sampling::Exact()
                             : Sampling::MonteCarlo(config.samples,
                                                    DeriveSeed(config.seed, i));
    deficiency[i] = RankDeficiency(code, options.lambdas[i], s);
    rd.Add({Real(options.lambdas[i]), std::string(ToString(s.mode)), s.samples,
            s.seed, Real(deficiency[i])});
  }
  if (!exact) {
    report.notes.push_back("sampled rank deficiency: F-value slack is reported, not asserted");
  }

  Table& fv = report.NewTable(
      "f-values", {"lambda", "q", "f-value", "rank-deficiency", "slack", "holds"});
  for (size_t i = 0; i < options.lambdas.size(); ++i) {
    for (double q : options.qs) {
      try {
        const double value = ComputeFValue(code, options.lambdas[i], q, config.max_dim).value;
        const double slack = deficiency[i] - value;
        const bool holds = slack >= -config.tolerance;
        fv.Add({Real(options.lambdas[i]), Real(q), Real(value), Real(deficiency[i]),
                Real(slack), holds});
        if (exact && !holds) {
          flag("rank deficiency below F at lambda=" + FormatDouble(options.lambdas[i]) +
               ", q=" + FormatDouble(q));
        }
      } catch (const CapExceeded& e) {
        fv.Add({Real(options.lambdas[i]), Real(q), Cell(), Real(deficiency[i]), Cell(),
                Cell()});
        report.notes.push_back("F value skipped: " + std::string(e.what()));
      }
    }
  }

  if (n <= config.max_dim && primal && dual) {
    Table& we = report.NewTable("weight-enumerator-identity",
                                {"lambda", "f2-cube", "finf-cube", "dual-sum",
                                 "primal-sum", "max-residual"});
    for (double lambda : options.lambdas) {
      const WeightEnumeratorIdentity id =
          EvaluateWeightEnumeratorIdentity(code, lambda, config.max_dim);
      const double residual = id.MaxResidual();
      we.Add({Real(lambda), Real(id.f2), Real(id.f_inf), Real(id.dual_sum),
              Real(id.primal_sum), Real(residual)});
      if (!(residual <= config.tolerance * std::max(1.0, std::fabs(id.f2)))) {
        flag("weight-enumerator identity residual " + FormatDouble(residual) +
             " at lambda=" + FormatDouble(lambda));
      }
    }
  } else {
    report.notes.push_back("weight-enumerator identity skipped: n=" + std::to_string(n) +
                           " exceeds cube cap " + std::to_string(config.max_dim));
  }

  if (dual) {
    Table& db = report.NewTable("dual-weight-bounds",
                                {"lambda", "weight", "b", "bound", "holds"});
    for (size_t i = 0; i < options.lambdas.size(); ++i) {
      for (int w = 0; w <= n; ++w) {
        const double bound = DualWeightBound(options.lambdas[i], w, deficiency[i]);
        const double b = double((*dual)[w]);
        const bool holds = b <= bound * (1.0 + config.tolerance) + config.tolerance;
        db.Add({Real(options.lambdas[i]), w, Integer((*dual)[w]), Real(bound), holds});
        if (exact && !holds) {
          flag("dual weight " + std::to_string(w) + " exceeds its bound at lambda=" +
               FormatDouble(options.lambdas[i]));
        }
      }
    }
  }

  // Exponent comparison of the two dual-side bounds over small k.
  if (rate > 0.0 && rate < 1.0) {
    Table& cmp = report.NewTable(
        "exponent-comparison",
        {"k", "log2-bound-dual", "log2-bound-sberlo", "dual-smaller"});
    for (int w = 1; w <= std::min(16, n / 2); ++w) {
      const double d = BecDualSideBoundLog2(n, rate, w);
      const double s = SberloBoundLog2(n, rate, w);
      cmp.Add({w, Real(d), Real(s), d < s});
    }
  }

  report.Write(out, config.output);
  if (violation) {
    err << "violation: " << first_violation << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace noisebound::cli
