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

#ifndef NOISEBOUND_GAP_REPORT_H_
#define NOISEBOUND_GAP_REPORT_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

namespace noisebound {

enum class EvalMode { kExact, kMonteCarlo };

std::string_view ToString(EvalMode mode);
EvalMode ParseEvalMode(std::string_view s);

// How a subset expectation is evaluated. samples/seed only matter for MC.
struct Sampling {
  EvalMode mode = EvalMode::kExact;
  int64_t samples = 0;
  uint64_t seed = 0;

  static Sampling Exact() { return {}; }
  static Sampling MonteCarlo(int64_t samples, uint64_t seed) {
    return {EvalMode::kMonteCarlo, samples, seed};
  }
};

// One evaluated inequality, always oriented as lhs <= rhs so that
// gap = rhs - lhs is nonnegative when the claim holds. For ">=" claims the
// smaller side is stored as lhs.
struct GapReport {
  std::string id;
  int n = 0;
  double q = 0.0;
  // The noise rate, subset density or two-point ratio, depending on `id`.
  double param = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  Sampling sampling;
  // Set when the input meets the structural equality condition of the
  // inequality (e.g. constant f); the numeric gap should then vanish.
  bool equality_case = false;
  // Standard error of the sampled side in MC mode; 0 when exact. Not serialized.
  double std_error = 0.0;
};

GapReport MakeGapReport(std::string id, int n, double q, double param,
                        double lhs, double rhs, Sampling sampling = {});

// |gap| <= tolerance * max(1, |lhs|).
bool IsNumericalEquality(const GapReport& r, double tolerance = 1e-9);

// Versioned header comment followed by the column names.
std::string GapCsvHeader();
std::string ToCsvRow(const GapReport& r);
nlohmann::json ToJson(const GapReport& r);

// Shortest round-tripping decimal for finite values; "inf", "-inf", "nan".
std::string FormatDouble(double v);
nlohmann::json JsonNumber(double v);

}  // namespace noisebound

#endif  // NOISEBOUND_GAP_REPORT_H_
