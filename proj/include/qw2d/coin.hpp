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

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qw2d/linalg.hpp"
#include "qw2d/rng.hpp"

namespace qw2d {

/// A single-axis coin
///
///     U = [ a  b ]          c = -delta * conj(b)
///         [ c  d ]          d =  delta * conj(a)
///
/// with |a|^2 + |b|^2 = 1 and |delta| = 1 (delta = det U). The second row is
/// always derived from (a, b, delta), so every Coin is exactly unitary by
/// construction; make_coin only validates, it never renormalizes.
struct Coin {
    Complex a, b, c, d, delta;

    Mat2 matrix() const {
        Mat2 m;
        m(0, 0) = a;
        m(0, 1) = b;
        m(1, 0) = c;
        m(1, 1) = d;
        return m;
    }
};

inline constexpr double kCoinTol = 1e-12;

inline Coin make_coin(const Complex& a, const Complex& b, const Complex& delta) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kCoinTol)
        throw std::invalid_argument("coin rejected: |a|^2 + |b|^2 must equal 1 (got " +
                                    std::to_string(std::norm(a) + std::norm(b)) + ")");
    if (std::abs(std::abs(delta) - 1.0) > kCoinTol)
        throw std::invalid_argument("coin rejected: |delta| must equal 1 (got " +
                                    std::to_string(std::abs(delta)) + ")");
    Coin coin;
    coin.a = a;
    coin.b = b;
    coin.delta = delta;
    coin.c = -delta * std::conj(b);
    coin.d = delta * std::conj(a);
    return coin;
}

inline Coin hadamard_coin() {
    const double s = 1.0 / std::numbers::sqrt2;
    // a = b = c = 1/sqrt2, d = -1/sqrt2, det = -1.
    return make_coin(Complex(s, 0.0), Complex(s, 0.0), Complex(-1.0, 0.0));
}

inline Coin identity_coin() {
    return make_coin(Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0));
}

/// Seeded Haar-flavoured coin. The draw order from SplitMix64(seed) is fixed:
/// u0 -> theta = u0*pi/2, u1 -> phi1 = 2*pi*u1, u2 -> phi2 = 2*pi*u2,
/// u3 -> deltaphase = 2*pi*u3, then
/// a = cos(theta)*e^{i*phi1}, b = sin(theta)*e^{i*phi2}, delta = e^{i*deltaphase}.
inline Coin random_coin(std::uint64_t seed) {
    SplitMix64 rng(seed);
    const double u0 = rng.next_unit();
    const double u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    const double u3 = rng.next_unit();
    const double theta = u0 * std::numbers::pi / 2.0;
    const double phi1 = 2.0 * std::numbers::pi * u1;
    const double phi2 = 2.0 * std::numbers::pi * u2;
    const double dphase = 2.0 * std::numbers::pi * u3;
    return make_coin(std::polar(std::cos(theta), phi1), std::polar(std::sin(theta), phi2),
                     std::polar(1.0, dphase));
}

/// Chirality rows are ordered L, R, D, U (indices 0..3). Each step operator
/// keeps exactly one nonzero row:
///
///   left  = p (x) p : row L = (a^2, ab, ab, b^2)
///   right = p (x) q : row R = (ac, ad, bc, bd)
///   down  = q (x) p : row D = (ac, bc, ad, bd)
///   up    = q (x) q : row U = (c^2, cd, cd, d^2)
///
/// where p = [[a,b],[0,0]] and q = [[0,0],[c,d]], so
/// left + right + down + up = U (x) U.
struct WalkOperators {
    Mat2 p1, q1;
    Mat4 left, right, down, up;
};

inline WalkOperators walk_operators(const Coin& coin) {
    WalkOperators ops;
    ops.p1(0, 0) = coin.a;
    ops.p1(0, 1) = coin.b;
    ops.q1(1, 0) = coin.c;
    ops.q1(1, 1) = coin.d;
    ops.left = tensor_product(ops.p1, ops.p1);
    ops.right = tensor_product(ops.p1, ops.q1);
    ops.down = tensor_product(ops.q1, ops.p1);
    ops.up = tensor_product(ops.q1, ops.q1);
    return ops;
}

/// Nonnegative step weights (p,q,r,s) of the classical 2D product walk:
/// p/q weight the first-axis -1/+1 steps, r/s the second-axis ones.
struct ClassicalWeights {
    double p, q, r, s;
};

inline ClassicalWeights make_classical_weights(double p, double q, double r, double s) {
    for (double w : {p, q, r, s}) {
        if (!(w >= 0.0 && w <= 1.0))
            throw std::invalid_argument("classical weights rejected: each of p,q,r,s must lie in [0,1]");
    }
    if (std::abs(p + q + r + s - 1.0) > kCoinTol)
        throw std::invalid_argument("classical weights rejected: p+q+r+s must equal 1 (got " +
                                    std::to_string(p + q + r + s) + ")");
    return ClassicalWeights{p, q, r, s};
}

}  // namespace qw2d
