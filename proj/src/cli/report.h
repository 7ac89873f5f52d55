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

#ifndef NOISEBOUND_SRC_CLI_REPORT_H_
#define NOISEBOUND_SRC_CLI_REPORT_H_

#include <algorithm>
#include <atomic>
#include <deque>
#include <cstdint>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "noisebound/cli.h"

namespace noisebound::cli {

using Cell = nlohmann::ordered_json;

// A named table of cells; cells are JSON scalars (null renders as empty).
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void Add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

// Sectioned report: CSV with "# section:" comment lines, or one JSON object.
struct Report {
  std::string kind;  // "code" | "matroid"
  std::vector<std::string> notes;
  std::deque<Table> tables;  // deque: NewTable references stay valid

  Table& NewTable(std::string name, std::vector<std::string> columns) {
    tables.push_back(Table{std::move(name), std::move(columns), {}});
    return tables.back();
  }
  void Write(std::ostream& out, OutputFormat format) const;
};

// Maps fn over [0, count) on `threads` workers; results keep index order.
template <typename T, typename Fn>
std::vector<T> ParallelMap(size_t count, int threads, Fn&& fn) {
  std::vector<T> results(count);
  if (threads <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> workers;
    const int used = static_cast<int>(std::min<size_t>(threads, count));
    for (int w = 0; w < used; ++w) {
      workers.emplace_back([&] {
        for (size_t i = next++; i < count; i = next++) {
          try {
            results[i] = fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::string FormatCell(const Cell& cell);
// Finite values stay numeric; inf/nan become strings.
Cell Real(double v);
Cell Integer(uint64_t v);

// Gap reports as table rows, same columns as the verify CSV.
std::vector<std::string> GapColumns();
std::vector<Cell> GapCells(const GapReport& r);

}  // namespace noisebound::cli

#endif  // NOISEBOUND_SRC_CLI_REPORT_H_
