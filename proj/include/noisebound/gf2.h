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

#ifndef NOISEBOUND_GF2_H_
#define NOISEBOUND_GF2_H_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace noisebound {

// Widest row supported by the word-per-row representation.
inline constexpr int kMaxColumns = 64;

// A GF(2) matrix with at most 64 columns; row r is a machine word whose
// bit j is the entry in column j.
struct BitMatrix {
  int cols = 0;
  std::vector<uint64_t> rows;

  int row_count() const { return static_cast<int>(rows.size()); }
  bool operator==(const BitMatrix&) const = default;
};

// Rank over GF(2) by elimination on whole words.
int Gf2Rank(std::span<const uint64_t> rows);

// Rank of the column submatrix selected by `column_mask`.
int Gf2ColumnRank(std::span<const uint64_t> rows, uint64_t column_mask);

// Reduced row echelon form of the row space: independent rows, each with a
// distinct leading (lowest set) pivot column cleared from every other row.
std::vector<uint64_t> ReducedRowEchelon(std::span<const uint64_t> rows);

// A basis of {x : <x, row> = 0 for every row}, as words over `cols` bits.
std::vector<uint64_t> NullSpace(std::span<const uint64_t> rows, int cols);

// Incremental basis keyed by leading bit; Insert reports whether the vector
// was independent of everything inserted so far.
class XorBasis {
 public:
  bool Insert(uint64_t v) {
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (slots_[top] == 0) {
        slots_[top] = v;
        ++rank_;
        return true;
      }
      v ^= slots_[top];
    }
    return false;
  }
  int rank() const { return rank_; }

 private:
  std::array<uint64_t, 64> slots_{};
  int rank_ = 0;
};

// Column j of the matrix, packed with one bit per row of a basis of the row
// space. Ranks of column sets are preserved; needs rank <= 64.
std::vector<uint64_t> CompressedColumns(const BitMatrix& m);

// Calls fn(mask, rank) for every subset of the given columns, where rank is
// the GF(2) rank of the selected columns. Depth-first over elements, so each
// subset costs O(rank) word operations amortized.
template <typename Fn>
void ForEachSubsetRank(std::span<const uint64_t> columns, Fn&& fn) {
  const int n = static_cast<int>(columns.size());
  // frames[r] holds an echelon basis of size r, sorted by descending
  // leading bit; the recursion depth in "included independent" steps is
  // exactly the current rank.
  std::vector<std::array<uint64_t, 64>> frames(65);
  auto visit = [&](auto& self, int i, int rank, uint64_t mask) -> void {
    if (i == n) {
      fn(mask, rank);
      return;
    }
    self(self, i + 1, rank, mask);
    const std::array<uint64_t, 64>& cur = frames[rank];
    uint64_t v = columns[i];
    for (int j = 0; j < rank; ++j) v = std::min(v, v ^ cur[j]);
    const uint64_t with_i = mask | (uint64_t{1} << i);
    if (v == 0) {
      self(self, i + 1, rank, with_i);
      return;
    }
    std::array<uint64_t, 64>& next = frames[rank + 1];
    int j = 0;
    for (; j < rank && cur[j] > v; ++j) next[j] = cur[j];
    next[j] = v;
    for (; j < rank; ++j) next[j + 1] = cur[j];
    self(self, i + 1, rank + 1, with_i);
  };
  visit(visit, 0, 0, 0);
}

// counts[s][r] = number of column subsets of size s and rank r.
using RankProfile = std::vector<std::vector<uint64_t>>;
RankProfile ComputeRankProfile(std::span<const uint64_t> columns);

}  // namespace noisebound

#endif  // NOISEBOUND_GF2_H_
