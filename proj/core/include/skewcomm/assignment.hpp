// Copyright 2026 The skewcomm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

namespace skewcomm {

/// Square cost matrix stored row-major.
struct CostMatrix {
    std::size_t n = 0;
    std::vector<double> cost;

    double at(std::size_t row, std::size_t col) const { return cost[row * n + col]; }
};

/// Minimum-cost perfect matching (Hungarian method with potentials, O(n^3)).
/// Returns col_for_row: row i is assigned to column col_for_row[i].
std::vector<std::size_t> solve_assignment(const CostMatrix &costs);

}  // namespace skewcomm
