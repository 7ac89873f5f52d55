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

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "noisebound/cli.h"
#include "noisebound/io.h"
#include "noisebound/matroids.h"
#include "noisebound/subset_expectation.h"
#include "report.h"

namespace noisebound::cli {

int RunMatroid(const RunConfig& config, const MatroidOptions& options,
               std::ostream& out, std::ostream& err) {
  config.Validate();
  for (double p : options.ps) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  }
  for (double d : options.deltas) {
    if (!(d >= 0.0)) throw std::invalid_argument("delta must be >= 0");
  }
  if (options.mu_grid_points < 2) throw std::invalid_argument("--mu-grid needs >= 2 points");
  if (options.file.empty() == options.graph.empty()) {
    throw std::invalid_argument("matroid needs exactly one of --file or --graph");
  }

  std::optional<Graph> graph;
  BinaryMatroid matroid;
  if (!options.graph.empty()) {
    graph = ReadGraphFile(options.graph);
    matroid = GraphicMatroid(*graph);
  } else {
    matroid = BinaryMatroid(ReadBitMatrixFile(options.file));
  }
  const int n = matroid.ground_size();
  const bool enumerable = n <= kDefaultExactSubsetCap;
  const bool exact = config.mode == EvalMode::kExact && enumerable;

  Report report;
  report.kind = "matroid";
  bool violation = false;
  std::string first_violation;
  auto flag = [&](const std::string& what) {
    if (!violation) first_violation = what;
    violation = true;
  };

  report.NewTable("matroid", {"ground-size", "rank", "source"})
      .Add({n, matroid.rank(), graph ? "graph" : "matrix"});
  if (!enumerable) {
    report.notes.push_back("n=" + std::to_string(n) + " exceeds the exact subset cap " +
                           std::to_string(kDefaultExactSubsetCap) +
                           "; gaps are sampled and exhaustive sections are skipped");
  }

  auto sampling_for = [&](uint64_t task) {
    return exact ? Sampling::Exact()
                 : Sampling::MonteCarlo(config.samples, DeriveSeed(config.seed, task));
  };

  Table& gaps = report.NewTable("rank-gaps", GapColumns());
  for (size_t i = 0; i < options.ps.size(); ++i) {
    const GapReport r = MatroidRankGap(matroid, options.ps[i], sampling_for(i));
    gaps.Add(GapCells(r));
    if (exact && !(r.gap >= -config.tolerance)) {
      flag("rank gap " + FormatDouble(r.gap) + " at p=" + FormatDouble(options.ps[i]));
    }
  }

  if (enumerable && n <= kDefaultMaxTutteGround) {
    const TuttePolynomial tutte = ComputeTuttePolynomial(matroid);
    Table& coeffs = report.NewTable("tutte-coefficients", {"i", "j", "coefficient"});
    for (int i = 0; i <= tutte.x_degree(); ++i) {
      for (int j = 0; j <= tutte.y_degree(); ++j) {
        if (tutte.coeff(i, j) != 0) coeffs.Add({i, j, tutte.coeff(i, j)});
      }
    }
    Table& ids = report.NewTable(
        "tutte-identities",
        {"p", "subset-tutte", "subset-direct", "subset-rel-error",
         "derivative-tutte", "derivative-direct", "derivative-rel-error"});
    for (double p : options.ps) {
      if (!(p > 0.0 && p < 1.0)) continue;
      const TutteIdentityCheck c = CheckTutteIdentities(matroid, tutte, p);
      ids.Add({Real(p), Real(c.subset_tutte), Real(c.subset_direct),
               Real(c.subset_relative_error), Real(c.derivative_tutte),
               Real(c.derivative_direct), Real(c.derivative_relative_error)});
      if (!(c.subset_relative_error <= config.tolerance &&
            c.derivative_relative_error <= config.tolerance)) {
        flag("Tutte identity residual at p=" + FormatDouble(p));
      }
    }

    Table& tail = report.NewTable(
        "tail", {"p", "delta", "threshold", "probability", "bound", "holds",
                 "bounded-differences"});
    for (double p : options.ps) {
      for (double delta : options.deltas) {
        const TailCheck c = CheckTailBound(matroid, p, delta);
        const bool holds = c.probability <= c.bound + 1e-12;
        Cell comparator;
        if (p > 0.0 && n > 0) {
          comparator = Real(BoundedDifferencesTail(matroid, p, MatchedDensity(p), delta));
        }
        tail.Add({Real(p), Real(delta), Real(c.threshold), Real(c.probability),
                  Real(c.bound), holds, comparator});
        if (!holds) {
          flag("tail probability " + FormatDouble(c.probability) + " above " +
               FormatDouble(c.bound) + " at p=" + FormatDouble(p) +
               ", delta=" + FormatDouble(delta));
        }
      }
    }

    std::vector<double> grid(options.mu_grid_points);
    for (int i = 0; i < options.mu_grid_points; ++i) {
      grid[i] = double(i) / (options.mu_grid_points - 1);
    }
    const auto curve = MuCurve(matroid, grid);
    Table& mu = report.NewTable("mu-curve", {"p", "mu"});
    for (const auto& [p, value] : curve) mu.Add({Real(p), Real(value)});
    if (std::fabs(curve.front().second) > config.tolerance) flag("mu(0) != 0");
    for (size_t i = 1; i < curve.size(); ++i) {
      if (curve[i].second < curve[i - 1].second - config.tolerance) {
        flag("mu decreases at p=" + FormatDouble(curve[i].first));
      }
      if (i + 1 < curve.size() &&
          curve[i + 1].second - 2.0 * curve[i].second + curve[i - 1].second <
              -config.tolerance) {
        flag("mu not convex at p=" + FormatDouble(curve[i].first));
      }
    }
  }

  if (graph) {
    Table& g = report.NewTable("graph-gaps", GapColumns());
    for (size_t i = 0; i < options.ps.size(); ++i) {
      const GapReport r =
          GraphInequalityGap(*graph, options.ps[i], sampling_for(options.ps.size() + i));
      g.Add(GapCells(r));
      if (exact && !(r.gap >= -config.tolerance)) {
        flag("graph gap " + FormatDouble(r.gap) + " at p=" + FormatDouble(options.ps[i]));
      }
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
