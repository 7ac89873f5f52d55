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

#ifndef NOISEBOUND_RANDOM_INPUTS_H_
#define NOISEBOUND_RANDOM_INPUTS_H_

#include <cstdint>
#include <string_view>

#include "noisebound/codes.h"
#include "noisebound/cube.h"
#include "noisebound/matroids.h"

namespace noisebound {

// SplitMix64 stream; identical output on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t Next();
  double Uniform();  // [0, 1)
  // Uniform integer in [lo, hi].
  int UniformInt(int lo, int hi);

 private:
  uint64_t state_;
};

enum class FunctionFamily {
  kUniform,         // i.i.d. uniform [0, 1) values
  kIndicator,       // scaled indicator of a random nonempty set
  kCharacterShift,  // 1 + c w_S with |c| <= 1
  kPointMass,       // 2^n at one random point
  kCodeIndicator,   // scaled indicator of a random linear code
  kConstant,
};

std::string_view ToString(FunctionFamily family);

CubeFunction RandomFunction(int n, FunctionFamily family, Rng& rng);

// The fuzzing mix: mostly uniform, with structured families interleaved so
// equality cases are hit. Deterministic in (n, seed, index).
CubeFunction FuzzFunction(int n, uint64_t seed, uint64_t index);

// Span of `rows` random rows of length n (dimension may come out smaller).
LinearCode RandomCode(int n, int rows, Rng& rng);

// `rows` x n random matrix; each column is zeroed with probability 1/8 so
// loops appear.
BinaryMatroid RandomBinaryMatroid(int n, int rows, Rng& rng);

// Multigraph with random endpoints; roughly one edge in six is a loop.
Graph RandomMultigraph(int vertices, int edges, Rng& rng);

Graph CompleteGraph(int vertices);
Graph CycleGraph(int vertices);
Graph PetersenGraph();

}  // namespace noisebound

#endif  // NOISEBOUND_RANDOM_INPUTS_H_
