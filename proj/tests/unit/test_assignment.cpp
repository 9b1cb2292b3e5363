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

#include <algorithm>
#include <numeric>

#include "skewcomm/assignment.hpp"
#include "skewcomm/commutation.hpp"
#include "skewcomm/errors.hpp"
#include "skewcomm/random.hpp"
#include "test_util.hpp"

namespace skewcomm {
namespace {

double total(const CostMatrix &c, const std::vector<std::size_t> &cols) {
    double sum = 0.0;
    for (std::size_t i = 0; i < c.n; ++i) {
        sum += c.at(i, cols[i]);
    }
    return sum;
}

double brute_force_minimum(const CostMatrix &c) {
    std::vector<std::size_t> perm(c.n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        best = std::min(best, total(c, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

TEST(Assignment, HandWorkedThreeByThree) {
    // Optimal: row0->col1 (1), row1->col0 (2), row2->col2 (2).
    const CostMatrix c{3, {4, 1, 3, 2, 0, 5, 3, 2, 2}};
    const auto cols = solve_assignment(c);
    EXPECT_EQ(cols, (std::vector<std::size_t>{1, 0, 2}));
    EXPECT_DOUBLE_EQ(total(c, cols), 5.0);
}

TEST(Assignment, MatchesBruteForceOnRandomCosts) {
    Rng rng(7);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            CostMatrix c{n, {}};
            for (std::size_t k = 0; k < n * n; ++k) {
                c.cost.push_back(rng.uniform(0.0, 10.0));
            }
            const auto cols = solve_assignment(c);
            std::vector<std::size_t> sorted = cols;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < n; ++i) {
                ASSERT_EQ(sorted[i], i) << "not a permutation";
            }
            EXPECT_NEAR(total(c, cols), brute_force_minimum(c), 1e-12);
        }
    }
}

TEST(Assignment, EmptyAndInvalid) {
    EXPECT_TRUE(solve_assignment(CostMatrix{0, {}}).empty());
    EXPECT_THROW(solve_assignment(CostMatrix{2, {1, 2, 3}}), Error);
    EXPECT_THROW(solve_assignment(CostMatrix{1, {std::numeric_limits<double>::infinity()}}),
                 Error);
}

TEST(MatchSpectra, PermutedMultisetMatchesExactly) {
    const std::vector<Scalar> a{1.0, Scalar(0, 1), -1.0, 1.0};
    const std::vector<Scalar> b{-1.0, 1.0, 1.0, Scalar(0, 1)};
    const SpectrumMatchReport r = match_spectra(a, b, 1e-12);
    EXPECT_TRUE(r.matched);
    EXPECT_EQ(r.max_pair_distance, 0.0);
    EXPECT_EQ(r.assignment.size(), 4u);
}

TEST(MatchSpectra, MultiplicityMatters) {
    const SpectrumMatchReport r = match_spectra({1.0, 1.0, 2.0}, {1.0, 2.0, 2.0}, 1e-9);
    EXPECT_FALSE(r.matched);
    EXPECT_NEAR(r.max_pair_distance, 1.0, 1e-15);
}

TEST(MatchSpectra, SizeMismatchThrows) {
    EXPECT_THROW(match_spectra({1.0}, {1.0, 2.0}, 1e-9), Error);
}

}  // namespace
}  // namespace skewcomm
