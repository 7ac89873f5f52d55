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

#include "noisebound/gap_report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace noisebound {

std::string_view ToString(EvalMode mode) {
  return mode == EvalMode::kExact ? "exact" : "mc";
}

EvalMode ParseEvalMode(std::string_view s) {
  if (s == "exact") return EvalMode::kExact;
  if (s == "mc") return EvalMode::kMonteCarlo;
  throw std::invalid_argument("unknown mode '" + std::string(s) +
                              "' (expected exact or mc)");
}

GapReport MakeGapReport(std::string id, int n, double q, double param,
                        double lhs, double rhs, Sampling sampling) {
  GapReport r;
  r.id = std::move(id);
  r.n = n;
  r.q = q;
  r.param = param;
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  r.sampling = sampling;
  return r;
}

bool IsNumericalEquality(const GapReport& r, double tolerance) {
  return std::abs(r.gap) <= tolerance * std::max(1.0, std::abs(r.lhs));
}

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

nlohmann::json JsonNumber(double v) {
  if (std::isfinite(v)) return v;
  return FormatDouble(v);
}

std::string GapCsvHeader() {
  return "# noisebound gap-report csv v1\n"
         "inequality-id,n,q,eps-or-lambda,lhs,rhs,gap,mode,samples,seed,"
         "equality-case\n";
}

std::string ToCsvRow(const GapReport& r) {
  std::string row;
  row += r.id;
  row += ',' + std::to_string(r.n);
  row += ',' + FormatDouble(r.q);
  row += ',' + FormatDouble(r.param);
  row += ',' + FormatDouble(r.lhs);
  row += ',' + FormatDouble(r.rhs);
  row += ',' + FormatDouble(r.gap);
  row += ',' + std::string(ToString(r.sampling.mode));
  row += ',' + std::to_string(r.sampling.samples);
  row += ',' + std::to_string(r.sampling.seed);
  row += r.equality_case ? ",1" : ",0";
  return row;
}

nlohmann::json ToJson(const GapReport& r) {
  return nlohmann::json{
      {"inequality-id", r.id},
      {"n", r.n},
      {"q", JsonNumber(r.q)},
      {"eps-or-lambda", JsonNumber(r.param)},
      {"lhs", JsonNumber(r.lhs)},
      {"rhs", JsonNumber(r.rhs)},
      {"gap", JsonNumber(r.gap)},
      {"mode", std::string(ToString(r.sampling.mode))},
      {"samples", r.sampling.samples},
      {"seed", r.sampling.seed},
      {"equality-case", r.equality_case},
  };
}

}  // namespace noisebound
