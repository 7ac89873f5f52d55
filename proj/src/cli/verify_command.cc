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
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "noisebound/cli.h"
#include "noisebound/inequalities.h"
#include "noisebound/io.h"
#include "noisebound/random_inputs.h"
#include "noisebound/subset_expectation.h"
#include "report.h"

namespace noisebound::cli {
namespace {

const std::vector<double> kOrderGrid = {1.1, 1.5, 2.0, 2.5, 3.0, 4.0, 8.0};

std::vector<double> NoiseGrid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.05 * i);
  grid.back() = 0.5;
  return grid;
}

std::vector<double> TwoPointGrid() {
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(std::pow(10.0, 3.0 * i / 49.0));
  grid.front() = 1.0;
  grid.back() = 1000.0;
  grid.push_back(kInfinity);  // the x = 0 endpoint
  return grid;
}

struct Row {
  GapReport report;
  bool violation = false;
  std::string detail;
};

using Rows = std::vector<Row>;

// Fixed-step differences resolve the formulas only when f stays away from
// zero and the derivative is well above roundoff.
bool WellConditioned(const CubeFunction& f, const DerivativeCheck& c) {
  double lo = f[0];
  for (size_t x = 1; x < f.size(); ++x) lo = std::min(lo, f[x]);
  return lo >= 1e-2 * f.Max() && std::fabs(c.f_formula) >= 1e-6;
}

// Sampled rows get a four-standard-error band below zero; a zero-variance
// sample has no error estimate and is reported only.
Row Plain(GapReport r, double tolerance) {
  const bool sampled = r.sampling.mode == EvalMode::kMonteCarlo;
  const bool bad = sampled ? r.std_error > 0.0 && r.gap < -tolerance - 4.0 * r.std_error
                           : !(r.gap >= -tolerance);
  return Row{std::move(r), bad, {}};
}

Rows FunctionRows(const std::string& target, const CubeFunction& f,
                  const Sampling& base, double tolerance) {
  Rows rows;
  uint64_t task = 0;
  auto sampling = [&] {
    Sampling s = base;
    if (s.mode == EvalMode::kMonteCarlo) s.seed = DeriveSeed(base.seed, task);
    ++task;
    return s;
  };
  if (target == "main" || target == "hypercontractive") {
    for (double q : kOrderGrid) {
      for (double eps : NoiseGrid()) {
        rows.push_back(Plain(target == "main"
                                 ? MainInequalityGap(f, q, eps, sampling())
                                 : HypercontractiveGap(f, q, eps),
                             tolerance));
      }
    }
  } else if (target == "entropy") {
    for (double eps : NoiseGrid()) {
      rows.push_back(Plain(NoisyEntropyGap(f, eps, sampling()), tolerance));
    }
  } else if (target == "logsobolev") {
    for (double q : kOrderGrid) rows.push_back(Plain(LogSobolevGap(f, q), tolerance));
  } else if (target == "derivative") {
    for (double q : kOrderGrid) {
      DerivativeCheck c = CheckDerivatives(f, q);
      Row row{c.report, false, {}};
      if (!c.skipped) {
        const double limit = 1e-4;
        const bool smooth = WellConditioned(f, c);
        const bool ordered = c.report.equality_case
                                 ? c.report.gap >= -tolerance
                                 : c.report.gap > 0.0;
        row.violation = !ordered ||
                        (smooth && (c.f_relative_error > limit ||
                                    c.g_relative_error > limit));
        row.detail = "F' rel err " + FormatDouble(c.f_relative_error) +
                     ", G' rel err " + FormatDouble(c.g_relative_error);
      }
      rows.push_back(std::move(row));
    }
  } else {
    throw std::invalid_argument("unknown verify target '" + target + "'");
  }
  return rows;
}

}  // namespace

int RunVerify(const RunConfig& config, const VerifyOptions& options,
              std::ostream& out, std::ostream& err) {
  config.Validate();
  const std::string& target = options.target;
  std::vector<Rows> batches;

  if (target == "twopoint") {
    Rows rows;
    for (double q : kOrderGrid) {
      for (double t : TwoPointGrid()) {
        rows.push_back(Plain(TwoPointGap(t, q), config.tolerance));
      }
    }
    batches.push_back(std::move(rows));
  } else if (!options.function_path.empty()) {
    const CubeFunction f =
        ReadCubeFunctionFile(options.function_path, config.max_dim);
    batches.push_back(
        FunctionRows(target, f, config.SamplingFor(0), config.tolerance));
  } else {
    if (options.n < 0) throw std::invalid_argument("--n must be nonnegative");
    if (options.n > config.max_dim) {
      throw CapExceeded("cube dimension " + std::to_string(options.n) +
                        " exceeds cap " + std::to_string(config.max_dim));
    }
    if (options.fuzz < 0) throw std::invalid_argument("--fuzz must be nonnegative");
    batches = ParallelMap<Rows>(
        static_cast<size_t>(options.fuzz), config.threads, [&](size_t i) {
          const CubeFunction f = FuzzFunction(options.n, config.seed, i);
          return FunctionRows(target, f, config.SamplingFor(i), config.tolerance);
        });
  }

  const Row* first_violation = nullptr;
  size_t total = 0, violations = 0;
  nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
  if (config.output == OutputFormat::kCsv) out << GapCsvHeader();
  for (const Rows& rows : batches) {
    for (const Row& row : rows) {
      ++total;
      if (row.violation) {
        ++violations;
        if (first_violation == nullptr) first_violation = &row;
      }
      if (config.output == OutputFormat::kCsv) {
        out << ToCsvRow(row.report) << "\n";
      } else {
        json_rows.push_back(nlohmann::ordered_json::parse(ToJson(row.report).dump()));
      }
    }
  }
  if (config.output == OutputFormat::kJson) {
    nlohmann::ordered_json doc;
    doc["kind"] = "verify";
    doc["version"] = 1;
    doc["target"] = target;
    doc["rows"] = std::move(json_rows);
    out << doc.dump(2) << "\n";
  }

  if (first_violation != nullptr) {
    err << "violation (" << violations << " of " << total << " rows); first:\n"
        << GapCsvHeader() << ToCsvRow(first_violation->report) << "\n";
    if (!first_violation->detail.empty()) err << first_violation->detail << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace noisebound::cli
