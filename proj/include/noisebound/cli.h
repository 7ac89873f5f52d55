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

#ifndef NOISEBOUND_CLI_H_
#define NOISEBOUND_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "noisebound/cube.h"
#include "noisebound/gap_report.h"

namespace noisebound::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Overrides the default cube dimension cap when set.
inline constexpr char kMaxDimEnv[] = "NOISEBOUND_MAX_DIM";

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  uint64_t seed = 1;
  double tolerance = 1e-9;
  EvalMode mode = EvalMode::kExact;
  int64_t samples = 20000;
  int max_dim = kDefaultMaxDim;
  OutputFormat output = OutputFormat::kCsv;
  int threads = 1;
  std::string output_path;

  Sampling SamplingFor(uint64_t task) const;
  // Throws std::invalid_argument on inconsistent settings.
  void Validate() const;
};

struct VerifyOptions {
  // main | entropy | logsobolev | twopoint | derivative | hypercontractive
  std::string target;
  int n = 3;
  int fuzz = 100;
  // Optional cube-function file; replaces the random corpus.
  std::string function_path;
};

struct CodeOptions {
  std::string file;
  std::optional<std::pair<int, int>> reed_muller;  // (r, m)
  std::vector<double> lambdas{0.25, 0.5, 0.75};
  std::vector<double> qs{1.5, 2.0, 3.0, kInfinity};
};

struct MatroidOptions {
  std::string file;
  std::string graph;
  std::vector<double> ps{0.2, 0.5, 0.8};
  std::vector<double> deltas{0.0, 1.0, 2.0};
  int mu_grid_points = 101;
};

// Each command writes its report to `out`, diagnostics to `err`, and
// returns the exit code.
int RunVerify(const RunConfig& config, const VerifyOptions& options,
              std::ostream& out, std::ostream& err);
int RunCode(const RunConfig& config, const CodeOptions& options,
            std::ostream& out, std::ostream& err);
int RunMatroid(const RunConfig& config, const MatroidOptions& options,
               std::ostream& out, std::ostream& err);

// Full command-line entry point (argument parsing, output file handling).
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

// Accepts "inf"/"infinity" as well as ordinary decimals.
double ParseReal(const std::string& s);

}  // namespace noisebound::cli

#endif  // NOISEBOUND_CLI_H_
