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

#include "qw2d/fourier.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <stdexcept>
#include <string>

namespace qw2d {
namespace {

LatticeState walked_state(int steps, std::uint64_t coin_seed, std::uint64_t state_seed) {
    const WalkOperators ops = walk_operators(coin_seed == 0 ? hadamard_coin()
                                                            : random_coin(coin_seed));
    return evolve(initial_state(random_qubit(state_seed)), ops, steps);
}

TEST(FourierGrid, SampleAnglesSpanMinusPiToPi) {
    const FourierGrid g = fourier_transform(initial_state(random_qubit(3)), 4);
    EXPECT_EQ(g.size, 4);
    EXPECT_NEAR(g.xi(0), -std::numbers::pi, 0.0);
    EXPECT_NEAR(g.xi(2), 0.0, 1e-15);
    EXPECT_NEAR(g.eta(3), -std::numbers::pi + 3.0 * std::numbers::pi / 2.0, 1e-15);
}

TEST(FourierGrid, UnderResolvedGridIsRejected) {
    const LatticeState s = walked_state(2, 0, 3);  // support needs M >= 5
    try {
        fourier_transform(s, 4);
        FAIL() << "expected a grid-size rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "grid under-resolves support");
    }
    EXPECT_NO_THROW(fourier_transform(s, 5));
}

TEST(FourierGrid, InverseUndoesTransformAtMinimalSize) {
    const LatticeState s = walked_state(3, 5, 17);
    const LatticeState back = inverse_fourier(fourier_transform(s, 7));
    EXPECT_EQ(back.time(), 3);
    for (int x = -3; x <= 3; ++x) {
        for (int y = -3; y <= 3; ++y) {
            for (int comp = 0; comp < 4; ++comp) {
                EXPECT_LE(std::abs(back.amplitude(x, y)[comp] - s.amplitude(x, y)[comp]), 1e-12)
                    << "site (" << x << "," << y << ") component " << comp;
            }
        }
    }
}

TEST(FourierGrid, ParsevalMatchesPositionNorm) {
    const LatticeState s = walked_state(4, 21, 22);
    const FourierGrid g = fourier_transform(s, 11);
    EXPECT_NEAR(parseval_total(g), s.total_probability(), 1e-12);
}

TEST(MomentumOperator, IsPhaseDiagonalTimesCoinTensorSquare) {
    const Coin c = random_coin(31);
    const double xi = 0.7, eta = -0.3;
    const Mat4 u = momentum_operator(walk_operators(c), xi, eta);
    EXPECT_TRUE(is_unitary(u, 1e-12));
    Mat4 diag;
    diag(0, 0) = std::polar(1.0, -xi);
    diag(1, 1) = std::polar(1.0, xi);
    diag(2, 2) = std::polar(1.0, -eta);
    diag(3, 3) = std::polar(1.0, eta);
    const Mat4 want = diag * tensor_product(c.matrix(), c.matrix());
    EXPECT_LE(frobenius_distance(u, want), 1e-14);
    EXPECT_LE(frobenius_distance(u, momentum_operator(c, xi, eta)), 0.0);
}

TEST(MomentumEvolution, OneStepMatchesTransformOfSteppedState) {
    const Coin c = hadamard_coin();
    const WalkOperators ops = walk_operators(c);
    LatticeState s = walked_state(2, 0, 8);
    const int grid_size = 8;
    const FourierGrid before = fourier_transform(s, grid_size);
    const FourierGrid predicted = evolve_fourier(before, c, 1);
    EXPECT_EQ(predicted.time, 3);
    const FourierGrid after = fourier_transform(step(s, ops), grid_size);
    double worst = 0.0;
    for (std::size_t i = 0; i < after.samples.size(); ++i)
        for (int comp = 0; comp < 4; ++comp)
            worst = std::max(worst, std::abs(after.samples[i][comp] - predicted.samples[i][comp]));
    EXPECT_LE(worst, 1e-12);
}

TEST(MomentumEvolution, MultiStepEqualsRepeatedSingleSteps) {
    const Coin c = random_coin(77);
    const FourierGrid g = fourier_transform(initial_state(random_qubit(5)), 9);
    const FourierGrid three = evolve_fourier(g, c, 3);
    const FourierGrid chained = evolve_fourier(evolve_fourier(evolve_fourier(g, c, 1), c, 1), c, 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < three.samples.size(); ++i)
        for (int comp = 0; comp < 4; ++comp)
            worst = std::max(worst, std::abs(three.samples[i][comp] - chained.samples[i][comp]));
    EXPECT_LE(worst, 1e-12);
}

TEST(MomentumEvolution, InverseRejectsUnderResolvedTime) {
    // After evolving in momentum space the carried time can outgrow the grid.
    const FourierGrid g = fourier_transform(initial_state(random_qubit(5)), 5);
    const FourierGrid late = evolve_fourier(g, hadamard_coin(), 4);  // support 9 > 5
    try {
        inverse_fourier(late);
        FAIL() << "expected a grid-size rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "grid under-resolves support");
    }
}

}  // namespace
}  // namespace qw2d
