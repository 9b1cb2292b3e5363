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

#include "skewcomm/assignment.hpp"

#include <cmath>
#include <limits>

#include "skewcomm/errors.hpp"

namespace skewcomm {

std::vector<std::size_t> solve_assignment(const CostMatrix &costs) {
    const std::size_t n = costs.n;
    if (costs.cost.size() != n * n) {
        throw Error(ErrorKind::DimensionMismatch, "cost matrix is not n x n");
    }
    for (double c : costs.cost) {
        if (!std::isfinite(c)) {
            throw Error(ErrorKind::MalformedInput, "non-finite assignment cost");
        }
    }
    if (n == 0) {
        return {};
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    // 1-based potentials; column 0 is a sentinel holding the row being added.
    std::vector<double> u(n + 1, 0.0);
    std::vector<double> v(n + 1, 0.0);
    std::vector<std::size_t> row_of_col(n + 1, 0);
    std::vector<std::size_t> way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        row_of_col[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = row_of_col[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) {
                    continue;
                }
                const double reduced = costs.at(i0 - 1, j - 1) - u[i0] - v[j];
                if (reduced < minv[j]) {
                    minv[j] = reduced;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[row_of_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (row_of_col[j0] != 0);
        // Augment along the alternating path.
        do {
            const std::size_t j1 = way[j0];
            row_of_col[j0] = row_of_col[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<std::size_t> col_for_row(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        col_for_row[row_of_col[j] - 1] = j - 1;
    }
    return col_for_row;
}

}  // namespace skewcomm
