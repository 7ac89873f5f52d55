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

#include "noisebound/gf2.h"

#include <algorithm>
#include <stdexcept>

namespace noisebound {

int Gf2Rank(std::span<const uint64_t> rows) {
  XorBasis basis;
  for (uint64_t r : rows) basis.Insert(r);
  return basis.rank();
}

int Gf2ColumnRank(std::span<const uint64_t> rows, uint64_t column_mask) {
  XorBasis basis;
  for (uint64_t r : rows) basis.Insert(r & column_mask);
  return basis.rank();
}

std::vector<uint64_t> ReducedRowEchelon(std::span<const uint64_t> rows) {
  std::vector<uint64_t> work(rows.begin(), rows.end());
  std::vector<uint64_t> out;
  for (int col = 0; col < 64; ++col) {
    const uint64_t bit = uint64_t{1} << col;
    auto pivot = std::find_if(work.begin(), work.end(),
                              [&](uint64_t r) { return (r & bit) != 0; });
    if (pivot == work.end()) continue;
    const uint64_t p = *pivot;
    work.erase(pivot);
    for (uint64_t& r : work) {
      if (r & bit) r ^= p;
    }
    for (uint64_t& r : out) {
      if (r & bit) r ^= p;
    }
    out.push_back(p);
  }
  return out;
}

std::vector<uint64_t> NullSpace(std::span<const uint64_t> rows, int cols) {
  if (cols < 0 || cols > kMaxColumns) {
    throw std::invalid_argument("column count outside [0, 64]");
  }
  const std::vector<uint64_t> rref = ReducedRowEchelon(rows);
  uint64_t pivot_cols = 0;
  std::vector<int> pivot_of_row;
  for (uint64_t r : rref) {
    const int p = std::countr_zero(r);
    pivot_cols |= uint64_t{1} << p;
    pivot_of_row.push_back(p);
  }
  std::vector<uint64_t> basis;
  for (int free = 0; free < cols; ++free) {
    const uint64_t bit = uint64_t{1} << free;
    if (pivot_cols & bit) continue;
    uint64_t v = bit;
    // Each pivot variable is fixed by its row: x_p = sum of free entries.
    for (size_t i = 0; i < rref.size(); ++i) {
      if (rref[i] & bit) v |= uint64_t{1} << pivot_of_row[i];
    }
    basis.push_back(v);
  }
  return basis;
}

std::vector<uint64_t> CompressedColumns(const BitMatrix& m) {
  const std::vector<uint64_t> basis = ReducedRowEchelon(m.rows);
  std::vector<uint64_t> columns(m.cols, 0);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if ((basis[i] >> j) & 1u) columns[j] |= uint64_t{1} << i;
    }
  }
  return columns;
}

RankProfile ComputeRankProfile(std::span<const uint64_t> columns) {
  const size_t n = columns.size();
  if (n > 40) throw std::invalid_argument("rank profile enumeration too large");
  RankProfile counts(n + 1, std::vector<uint64_t>(n + 1, 0));
  ForEachSubsetRank(columns, [&](uint64_t mask, int rank) {
    ++counts[std::popcount(mask)][rank];
  });
  return counts;
}

}  // namespace noisebound
