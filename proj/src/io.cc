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

#include "noisebound/io.h"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "noisebound/gap_report.h"

namespace noisebound {
namespace {

template <typename T>
T ReadToken(std::istream& in, const char* what) {
  T value;
  if (!(in >> value)) throw InputError(std::string("expected ") + what);
  return value;
}

void ExpectEnd(std::istream& in) {
  std::string extra;
  if (in >> extra) throw InputError("unexpected trailing token '" + extra + "'");
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

template <typename Fn>
auto WithPath(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.find(path) != std::string::npos) throw;
    throw InputError(path + ": " + msg);
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

CubeFunction ParseCubeFunction(std::istream& in, int max_dim) {
  const int n = ReadToken<int>(in, "dimension n");
  if (n < 0) throw InputError("dimension must be nonnegative");
  if (n > max_dim) {
    throw CapExceeded("cube dimension " + std::to_string(n) + " exceeds cap " +
                      std::to_string(max_dim));
  }
  std::vector<double> values(size_t{1} << n);
  for (size_t i = 0; i < values.size(); ++i) {
    values[i] = ReadToken<double>(in, "function value");
  }
  ExpectEnd(in);
  return CubeFunction(n, std::move(values), max_dim);
}

std::string FormatCubeFunction(const CubeFunction& f) {
  std::string out = std::to_string(f.dim()) + "\n";
  for (size_t x = 0; x < f.size(); ++x) {
    out += FormatDouble(f[x]);
    out += (x + 1 == f.size()) ? '\n' : ' ';
  }
  return out;
}

BitMatrix ParseBitMatrix(std::istream& in) {
  const int k = ReadToken<int>(in, "row count k");
  const int n = ReadToken<int>(in, "column count n");
  if (k < 0 || n < 0) throw InputError("k and n must be nonnegative");
  if (n > kMaxColumns) {
    throw InputError("at most 64 columns are supported, got " + std::to_string(n));
  }
  BitMatrix m{n, {}};
  for (int r = 0; r < k; ++r) {
    const std::string row = ReadToken<std::string>(in, "matrix row");
    if (static_cast<int>(row.size()) != n) {
      throw InputError("row " + std::to_string(r + 1) + " has " +
                       std::to_string(row.size()) + " characters, expected " +
                       std::to_string(n));
    }
    uint64_t word = 0;
    for (int j = 0; j < n; ++j) {
      if (row[j] == '1') {
        word |= uint64_t{1} << j;
      } else if (row[j] != '0') {
        throw InputError("row " + std::to_string(r + 1) +
                         " contains a character other than 0/1");
      }
    }
    m.rows.push_back(word);
  }
  ExpectEnd(in);
  return m;
}

std::string FormatBitMatrix(const BitMatrix& m) {
  std::string out =
      std::to_string(m.row_count()) + " " + std::to_string(m.cols) + "\n";
  for (uint64_t r : m.rows) {
    for (int j = 0; j < m.cols; ++j) out += ((r >> j) & 1u) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Graph ParseGraph(std::istream& in) {
  Graph g;
  g.vertex_count = ReadToken<int>(in, "vertex count V");
  const int e = ReadToken<int>(in, "edge count E");
  if (g.vertex_count < 0 || e < 0) throw InputError("V and E must be nonnegative");
  for (int i = 0; i < e; ++i) {
    const int u = ReadToken<int>(in, "edge endpoint");
    const int v = ReadToken<int>(in, "edge endpoint");
    g.edges.emplace_back(u, v);
  }
  ExpectEnd(in);
  ValidateGraph(g);
  return g;
}

CubeFunction ReadCubeFunctionFile(const std::string& path, int max_dim) {
  return WithPath(path, [&] {
    std::ifstream in = OpenOrThrow(path);
    return ParseCubeFunction(in, max_dim);
  });
}

BitMatrix ReadBitMatrixFile(const std::string& path) {
  return WithPath(path, [&] {
    std::ifstream in = OpenOrThrow(path);
    return ParseBitMatrix(in);
  });
}

Graph ReadGraphFile(const std::string& path) {
  return WithPath(path, [&] {
    std::ifstream in = OpenOrThrow(path);
    return ParseGraph(in);
  });
}

}  // namespace noisebound
