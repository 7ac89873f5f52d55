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

#include "noisebound/random_inputs.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <vector>

#include "noisebound/subset_expectation.h"

namespace noisebound {

uint64_t Rng::Next() { return SplitMix64(state_); }

double Rng::Uniform() { return UnitInterval(Next()); }

int Rng::UniformInt(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(Next() % span);
}

std::string_view ToString(FunctionFamily family) {
  switch (family) {
    case FunctionFamily::kUniform: return "uniform";
    case FunctionFamily::kIndicator: return "indicator";
    case FunctionFamily::kCharacterShift: return "character-shift";
    case FunctionFamily::kPointMass: return "point-mass";
    case FunctionFamily::kCodeIndicator: return "code-indicator";
    case FunctionFamily::kConstant: return "constant";
  }
  return "unknown";
}

CubeFunction RandomFunction(int n, FunctionFamily family, Rng& rng) {
  const size_t size = size_t{1} << n;
  std::vector<double> v(size, 0.0);
  switch (family) {
    case FunctionFamily::kUniform:
      for (double& x : v) x = rng.Uniform();
      break;
    case FunctionFamily::kIndicator: {
      size_t hits = 0;
      for (double& x : v) {
        if (rng.Next() & 1u) {
          x = 1.0;
          ++hits;
        }
      }
      if (hits == 0) {
        v[rng.Next() % size] = 1.0;
        hits = 1;
      }
      for (double& x : v) x *= double(size) / double(hits);
      break;
    }
    case FunctionFamily::kCharacterShift: {
      const SubsetMask s(rng.Next() & SubsetMask::Full(n).bits);
      const double c = 2.0 * rng.Uniform() - 1.0;
      const CubeFunction w = CubeFunction::Character(n, s, n);
      for (size_t x = 0; x < size; ++x) v[x] = 1.0 + c * w[x];
      break;
    }
    case FunctionFamily::kPointMass:
      v[rng.Next() % size] = double(size);
      break;
    case FunctionFamily::kCodeIndicator:
      return ScaledIndicator(RandomCode(n, rng.UniformInt(0, n), rng), n);
    case FunctionFamily::kConstant:
      std::fill(v.begin(), v.end(), 0.5 + rng.Uniform());
      break;
  }
  return CubeFunction(n, std::move(v), std::max(n, kDefaultMaxDim));
}

CubeFunction FuzzFunction(int n, uint64_t seed, uint64_t index) {
  static constexpr FunctionFamily kCycle[] = {
      FunctionFamily::kUniform,        FunctionFamily::kUniform,
      FunctionFamily::kUniform,        FunctionFamily::kIndicator,
      FunctionFamily::kUniform,        FunctionFamily::kCharacterShift,
      FunctionFamily::kUniform,        FunctionFamily::kCodeIndicator,
      FunctionFamily::kUniform,        FunctionFamily::kPointMass,
  };
  Rng rng(DeriveSeed(seed, index));
  return RandomFunction(n, kCycle[index % std::size(kCycle)], rng);
}

LinearCode RandomCode(int n, int rows, Rng& rng) {
  std::vector<uint64_t> words(rows);
  for (uint64_t& w : words) w = rng.Next() & SubsetMask::Full(n).bits;
  return LinearCode::FromSpanningRows(n, words);
}

BinaryMatroid RandomBinaryMatroid(int n, int rows, Rng& rng) {
  BitMatrix m{n, std::vector<uint64_t>(rows)};
  for (uint64_t& w : m.rows) w = rng.Next() & SubsetMask::Full(n).bits;
  for (int j = 0; j < n; ++j) {
    if (rng.UniformInt(0, 7) == 0) {
      for (uint64_t& w : m.rows) w &= ~(uint64_t{1} << j);
    }
  }
  return BinaryMatroid(std::move(m));
}

Graph RandomMultigraph(int vertices, int edges, Rng& rng) {
  Graph g{vertices, {}};
  for (int e = 0; e < edges; ++e) {
    const int u = rng.UniformInt(0, vertices - 1);
    const int v = rng.UniformInt(0, 5) == 0 ? u : rng.UniformInt(0, vertices - 1);
    g.edges.emplace_back(u, v);
  }
  return g;
}

Graph CompleteGraph(int vertices) {
  Graph g{vertices, {}};
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

Graph CycleGraph(int vertices) {
  Graph g{vertices, {}};
  for (int u = 0; u < vertices; ++u) g.edges.emplace_back(u, (u + 1) % vertices);
  return g;
}

Graph PetersenGraph() {
  Graph g{10, {}};
  for (int i = 0; i < 5; ++i) {
    g.edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    g.edges.emplace_back(i, i + 5);                // spokes
    g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

}  // namespace noisebound
