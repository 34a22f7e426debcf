// Copyright 2026 The qw2d Authors
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

#include "qw2d/paths.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "qw2d/lattice.hpp"

namespace qw2d {
namespace {

TEST(Path1D, IndexEncodingLsbIsFirstStep) {
    const Path1D p = path_from_index(3, 5);  // binary 101: steps +1, -1, +1
    ASSERT_EQ(p.increments.size(), 3u);
    EXPECT_EQ(p.increments[0], 1);
    EXPECT_EQ(p.increments[1], -1);
    EXPECT_EQ(p.increments[2], 1);
    const std::vector<int> want_pos = {0, 1, 0, 1};
    EXPECT_EQ(p.positions, want_pos);
    EXPECT_EQ(index_from_increments(p.increments), 5u);
}

TEST(Path1D, ZeroLengthPathIsOriginOnly) {
    const Path1D p = path_from_index(0, 0);
    EXPECT_EQ(p.positions, std::vector<int>{0});
    EXPECT_TRUE(p.increments.empty());
}

TEST(Path1D, GuardsRejectBadIndices) {
    EXPECT_THROW(path_from_index(2, 4), std::invalid_argument);   // k >= 2^n
    EXPECT_THROW(path_from_index(-1, 0), std::invalid_argument);
    EXPECT_THROW(path_from_index(31, 0), std::invalid_argument);  // n > 30
    EXPECT_NO_THROW(path_from_index(30, (1ULL << 30) - 1));
}

TEST(PathWeight, OrderedProductRightmostFactorFirst) {
    // k = 1, n = 2: first step +1 (factor q1), second step -1 (factor p1);
    // the weight is p1 * q1 with the first step rightmost.
    const Coin h = hadamard_coin();
    const Mat2 w = path_weight(h, path_from_index(2, 1));
    EXPECT_LE(std::abs(w(0, 0) - Complex(0.5)), 1e-15);
    EXPECT_LE(std::abs(w(0, 1) - Complex(-0.5)), 1e-15);
    EXPECT_LE(std::abs(w(1, 0)), 0.0);
    EXPECT_LE(std::abs(w(1, 1)), 0.0);
}

TEST(PathWeight, CompletenessSumsToCoinPower) {
    const Coin c = random_coin(4);
    const int n = 4;
    const PathEnsemble e = enumerate_paths(c, n);
    ASSERT_EQ(e.weights.size(), 16u);
    Mat2 sum;
    for (const Mat2& w : e.weights) sum += w;
    EXPECT_LE(frobenius_distance(sum, matrix_power(c.matrix(), n)), 1e-13);
}

TEST(PathWeight, PairWeightIsTensorOfFactors) {
    const Coin c = hadamard_coin();
    const PathPair pair{path_from_index(2, 1), path_from_index(1, 1)};
    const Mat4 w = pair_weight(c, pair);
    const Mat4 want = tensor_product(path_weight(c, pair.first), path_weight(c, pair.second));
    EXPECT_LE(frobenius_distance(w, want), 0.0);
}

TEST(PathEnsemble, EnumerationGuard) {
    EXPECT_THROW(enumerate_paths(hadamard_coin(), 17), std::invalid_argument);
}

TEST(XiTable, EntryValidatesComposition) {
    const XiTable t = xi_recursive(hadamard_coin(), 3);
    EXPECT_NO_THROW(t.entry(1, 1, 1, 0));
    EXPECT_THROW(t.entry(1, 1, 1, 1), std::invalid_argument);  // sums to 4, not 3
    EXPECT_THROW(t.entry(-1, 2, 1, 1), std::invalid_argument);
}

TEST(XiTable, RecursiveMatchesBruteForce) {
    for (std::uint64_t seed : {0ULL, 6ULL}) {
        const Coin c = seed == 0 ? hadamard_coin() : random_coin(seed);
        for (int n = 0; n <= 5; ++n) {
            const XiTable rec = xi_recursive(c, n);
            const XiTable bru = xi_bruteforce(c, n);
            double worst = 0.0;
            rec.for_each([&](int l, int r, int d, int, const Mat4& m) {
                worst = std::max(worst, max_abs_entry(m - bru.slot(l, r, d)));
            });
            EXPECT_LE(worst, 1e-13) << "n = " << n;
        }
    }
}

TEST(XiTable, TotalIsTensorSquarePower) {
    const Coin c = random_coin(12);
    const Mat4 uu = tensor_product(c.matrix(), c.matrix());
    for (int n = 0; n <= 6; ++n)
        EXPECT_LE(frobenius_distance(xi_recursive(c, n).total(),
                                     matrix_power(uu, static_cast<unsigned long long>(n))),
                  1e-12)
            << "n = " << n;
}

TEST(XiTable, OrderGuards) {
    EXPECT_THROW(xi_recursive(hadamard_coin(), 13), std::invalid_argument);
    EXPECT_THROW(xi_bruteforce(hadamard_coin(), 11), std::invalid_argument);
    EXPECT_NO_THROW(xi_recursive(hadamard_coin(), 0));
}

TEST(XiTable, DistributionMatchesDirectEvolution) {
    const Coin c = hadamard_coin();
    const Qubit4 phi{1.0, 0.0, 0.0, 0.0};
    const int n = 5;
    const Distribution direct = distribution(evolve(initial_state(phi), walk_operators(c), n));
    const Distribution viaxi = distribution_from_xi(xi_recursive(c, n), phi);
    EXPECT_EQ(viaxi.time, n);
    for (const auto& [site, p] : direct.probs) {
        const auto it = viaxi.probs.find(site);
        ASSERT_NE(it, viaxi.probs.end()) << "missing site (" << site.first << "," << site.second
                                         << ")";
        EXPECT_NEAR(it->second, p, 1e-12);
    }
    EXPECT_EQ(direct.probs.size(), viaxi.probs.size());
}

TEST(XiTable, DistributionRequiresNormalizedState) {
    EXPECT_THROW(distribution_from_xi(xi_recursive(hadamard_coin(), 2), Qubit4{1.0, 1.0, 0.0, 0.0}),
                 std::invalid_argument);
}

}  // namespace
}  // namespace qw2d
