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

#ifndef NOISEBOUND_IO_H_
#define NOISEBOUND_IO_H_

#include <istream>
#include <stdexcept>
#include <string>

#include "noisebound/codes.h"
#include "noisebound/cube.h"
#include "noisebound/gf2.h"
#include "noisebound/matroids.h"

namespace noisebound {

// Malformed or unreadable input; the message names the source.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line 1: n. Then 2^n whitespace-separated values in index order.
CubeFunction ParseCubeFunction(std::istream& in, int max_dim = kDefaultMaxDim);
std::string FormatCubeFunction(const CubeFunction& f);

// Line 1: "k n". Then k rows of n characters from {0,1}; character j of a
// row is column j+1.
BitMatrix ParseBitMatrix(std::istream& in);
std::string FormatBitMatrix(const BitMatrix& m);

// Line 1: "V E". Then E lines "u v", 0-indexed.
Graph ParseGraph(std::istream& in);

// File wrappers; failures carry the path in the message.
CubeFunction ReadCubeFunctionFile(const std::string& path,
                                  int max_dim = kDefaultMaxDim);
BitMatrix ReadBitMatrixFile(const std::string& path);
Graph ReadGraphFile(const std::string& path);

}  // namespace noisebound

#endif  // NOISEBOUND_IO_H_
