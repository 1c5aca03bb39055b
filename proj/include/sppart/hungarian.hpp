// Copyright 2026 The sppart Authors.
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

#ifndef SPPART_HUNGARIAN_HPP_
#define SPPART_HUNGARIAN_HPP_

#include <cstdint>
#include <limits>
#include <vector>

namespace sppart {

// Kuhn-Munkres for a dense square cost matrix (row-major), O(n^3).
// Grows the matching one row at a time along shortest augmenting paths with
// dual potentials. Returns column assigned to each row.
template <typename Cost>
std::vector<int> MinCostPerfectMatching(const std::vector<Cost>& cost, int n) {
  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
  auto at = [&](int row, int col) {
    return cost[static_cast<std::size_t>(row) * n + col];
  };
  // 1-based internally; column 0 is the virtual root of each search.
  std::vector<Cost> row_pot(n + 1, 0), col_pot(n + 1, 0);
  std::vector<int> row_of_col(n + 1, 0), prev_col(n + 1, 0);
  for (int row = 1; row <= n; ++row) {
    row_of_col[0] = row;
    int col0 = 0;
    std::vector<Cost> slack(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const int r = row_of_col[col0];
      Cost delta = kInf;
      int next = 0;
      for (int col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const Cost reduced = at(r - 1, col - 1) - row_pot[r] - col_pot[col];
        if (reduced < slack[col]) {
          slack[col] = reduced;
          prev_col[col] = col0;
        }
        if (slack[col] < delta) {
          delta = slack[col];
          next = col;
        }
      }
      for (int col = 0; col <= n; ++col) {
        if (used[col]) {
          row_pot[row_of_col[col]] += delta;
          col_pot[col] -= delta;
        } else {
          slack[col] -= delta;
        }
      }
      col0 = next;
    } while (row_of_col[col0] != 0);
    do {
      const int prev = prev_col[col0];
      row_of_col[col0] = row_of_col[prev];
      col0 = prev;
    } while (col0 != 0);
  }
  std::vector<int> col_of_row(n, -1);
  for (int col = 1; col <= n; ++col) {
    col_of_row[row_of_col[col] - 1] = col - 1;
  }
  return col_of_row;
}

}  // namespace sppart

#endif  // SPPART_HUNGARIAN_HPP_
