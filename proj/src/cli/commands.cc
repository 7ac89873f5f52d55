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

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "noisebound/cli.h"
#include "noisebound/subset_expectation.h"
#include "report.h"

namespace noisebound::cli {

Sampling RunConfig::SamplingFor(uint64_t task) const {
  if (mode == EvalMode::kExact) return Sampling::Exact();
  return Sampling::MonteCarlo(samples, DeriveSeed(seed, task));
}

void RunConfig::Validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (mode == EvalMode::kMonteCarlo && samples < 1) {
    throw std::invalid_argument("mc mode needs samples >= 1");
  }
  if (max_dim < 0) throw std::invalid_argument("dimension cap must be nonnegative");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

double ParseReal(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf") return kInfinity;
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

std::string FormatCell(const Cell& cell) {
  if (cell.is_null()) return "";
  if (cell.is_number_unsigned()) return std::to_string(cell.get<uint64_t>());
  if (cell.is_number_integer()) return std::to_string(cell.get<int64_t>());
  if (cell.is_number_float()) return FormatDouble(cell.get<double>());
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  if (cell.is_string()) return cell.get<std::string>();
  return cell.dump();
}

Cell Real(double v) {
  if (std::isfinite(v)) return Cell(v);
  return Cell(FormatDouble(v));
}

Cell Integer(uint64_t v) { return Cell(v); }

std::vector<std::string> GapColumns() {
  return {"inequality-id", "n", "q", "eps-or-lambda", "lhs", "rhs", "gap",
          "mode", "samples", "seed", "equality-case"};
}

std::vector<Cell> GapCells(const GapReport& r) {
  return {r.id,
          r.n,
          Real(r.q),
          Real(r.param),
          Real(r.lhs),
          Real(r.rhs),
          Real(r.gap),
          std::string(ToString(r.sampling.mode)),
          r.sampling.samples,
          r.sampling.seed,
          r.equality_case ? 1 : 0};
}

void Report::Write(std::ostream& out, OutputFormat format) const {
  if (format == OutputFormat::kCsv) {
    out << "# noisebound " << kind << " csv v1\n";
    for (const std::string& note : notes) out << "# note: " << note << "\n";
    for (const Table& t : tables) {
      out << "# section: " << t.name << "\n";
      for (size_t c = 0; c < t.columns.size(); ++c) {
        out << (c ? "," : "") << t.columns[c];
      }
      out << "\n";
      for (const auto& row : t.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
          out << (c ? "," : "") << FormatCell(row[c]);
        }
        out << "\n";
      }
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["kind"] = kind;
  doc["version"] = 1;
  doc["notes"] = notes;
  nlohmann::ordered_json sections = nlohmann::ordered_json::object();
  for (const Table& t : tables) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (size_t c = 0; c < row.size() && c < t.columns.size(); ++c) {
        obj[t.columns[c]] = row[c];
      }
      rows.push_back(std::move(obj));
    }
    sections[t.name] = std::move(rows);
  }
  doc["sections"] = std::move(sections);
  out << doc.dump(2) << "\n";
}

namespace {

struct RealList {
  std::vector<std::string> raw;
  std::vector<double> Parse() const {
    std::vector<double> v;
    for (const std::string& s : raw) v.push_back(ParseReal(s));
    return v;
  }
};

int MaxDimFromEnv() {
  const char* env = std::getenv(kMaxDimEnv);
  if (env == nullptr || *env == '\0') return kDefaultMaxDim;
  try {
    size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::strlen(env) || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(kMaxDimEnv) +
                                " must be a nonnegative integer");
  }
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Numerical checks for noise-stability inequalities on the cube"};
  app.require_subcommand(1);

  RunConfig config;
  std::string mode = "exact";
  std::string format = "csv";
  app.add_option("--seed", config.seed, "Root seed")->capture_default_str();
  app.add_option("--tolerance", config.tolerance, "Violation tolerance")
      ->capture_default_str();
  app.add_option("--mode", mode, "exact or mc")
      ->check(CLI::IsMember({"exact", "mc"}))
      ->capture_default_str();
  app.add_option("--samples", config.samples, "Monte Carlo samples")
      ->capture_default_str();
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads")
      ->capture_default_str();
  app.add_option("--output", config.output_path, "Write the report here");
  app.fallthrough();

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run an inequality campaign");
  verify_cmd
      ->add_option("--target", verify.target, "Inequality to check")
      ->required()
      ->check(CLI::IsMember({"main", "entropy", "logsobolev", "twopoint",
                             "derivative", "hypercontractive"}));
  verify_cmd->add_option("--n", verify.n, "Cube dimension")->capture_default_str();
  verify_cmd->add_option("--fuzz", verify.fuzz, "Random functions")
      ->capture_default_str();
  verify_cmd->add_option("--function", verify.function_path,
                         "Cube-function file instead of random inputs");

  CodeOptions code;
  RealList code_lambdas, code_qs;
  std::vector<int> rm;
  CLI::App* code_cmd = app.add_subcommand("code", "Weight and bound tables for a code");
  CLI::Option* code_file = code_cmd->add_option("--file", code.file, "Generator file");
  CLI::Option* code_rm =
      code_cmd->add_option("--rm", rm, "Reed-Muller r m")->expected(2);
  code_file->excludes(code_rm);
  code_cmd->add_option("--lambda", code_lambdas.raw, "Density grid");
  code_cmd->add_option("--q", code_qs.raw, "Order list (inf allowed)");

  MatroidOptions matroid;
  RealList matroid_ps, matroid_deltas;
  CLI::App* matroid_cmd =
      app.add_subcommand("matroid", "Rank, Tutte and tail checks for a matroid");
  CLI::Option* m_file =
      matroid_cmd->add_option("--file", matroid.file, "Binary matrix file");
  CLI::Option* m_graph =
      matroid_cmd->add_option("--graph", matroid.graph, "Graph file");
  m_file->excludes(m_graph);
  matroid_cmd->add_option("--p", matroid_ps.raw, "Density grid");
  matroid_cmd->add_option("--delta", matroid_deltas.raw, "Tail offsets");
  matroid_cmd->add_option("--mu-grid", matroid.mu_grid_points, "mu curve points")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out, usage_err;
    const int code_or = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code_or == 0 ? kExitOk : kExitUsage;
  }

  try {
    config.mode = ParseEvalMode(mode);
    config.output = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
    config.max_dim = MaxDimFromEnv();
    config.Validate();
    if (!rm.empty()) code.reed_muller = std::make_pair(rm[0], rm[1]);
    if (!code_lambdas.raw.empty()) code.lambdas = code_lambdas.Parse();
    if (!code_qs.raw.empty()) code.qs = code_qs.Parse();
    if (!matroid_ps.raw.empty()) matroid.ps = matroid_ps.Parse();
    if (!matroid_deltas.raw.empty()) matroid.deltas = matroid_deltas.Parse();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output_path.empty()) {
    file.open(config.output_path);
    if (!file) {
      err << "error: cannot write '" << config.output_path << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (verify_cmd->parsed()) return RunVerify(config, verify, *sink, err);
    if (code_cmd->parsed()) return RunCode(config, code, *sink, err);
    return RunMatroid(config, matroid, *sink, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace noisebound::cli
