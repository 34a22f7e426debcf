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

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qw2d/coin.hpp"
#include "qw2d/lattice.hpp"
#include "qw2d/linalg.hpp"

namespace qw2d {

/// Momentum-space wave function sampled on the uniform M x M grid
/// xi_j = -pi + 2*pi*j/M, eta_l = -pi + 2*pi*l/M (j and l in 0..M-1),
/// stored row-major with j outer. A state after n steps is supported on
/// {-n..n}^2, so it is exactly recoverable whenever M >= 2n+1.
struct FourierGrid {
    int size = 0;
    int time = 0;
    std::vector<Vec4> samples;

    double xi(int j) const { return -std::numbers::pi + 2.0 * std::numbers::pi * j / size; }
    double eta(int l) const { return xi(l); }

    const Vec4& at(int j, int l) const {
        return samples[static_cast<std::size_t>(j) * size + l];
    }
    Vec4& at(int j, int l) { return samples[static_cast<std::size_t>(j) * size + l]; }
};

/// One-step evolution operator at momentum (xi, eta):
///
///   U(xi,eta) = e^{-i xi} left + e^{i xi} right + e^{-i eta} down + e^{i eta} up
///             = Diag(e^{-i xi}, e^{i xi}, e^{-i eta}, e^{i eta}) * (U (x) U).
inline Mat4 momentum_operator(const WalkOperators& ops, double xi, double eta) {
    Mat4 m = std::polar(1.0, -xi) * ops.left;
    m += std::polar(1.0, xi) * ops.right;
    m += std::polar(1.0, -eta) * ops.down;
    m += std::polar(1.0, eta) * ops.up;
    return m;
}

inline Mat4 momentum_operator(const Coin& coin, double xi, double eta) {
    return momentum_operator(walk_operators(coin), xi, eta);
}

/// psi_hat(xi,eta) = sum_{x,y} e^{i(xi x + eta y)} psi(x,y), sampled on the
/// grid. Direct summation over the state's support.
inline FourierGrid fourier_transform(const LatticeState& state, int grid_size) {
    if (grid_size < 2 * state.time() + 1)
        throw std::invalid_argument("grid under-resolves support");
    FourierGrid g;
    g.size = grid_size;
    g.time = state.time();
    g.samples.resize(static_cast<std::size_t>(grid_size) * grid_size);
    const int n = state.time();
    for (int j = 0; j < grid_size; ++j) {
        const double xi = g.xi(j);
        for (int l = 0; l < grid_size; ++l) {
            const double eta = g.eta(l);
            Vec4 acc;
            for (int x = -n; x <= n; ++x) {
                for (int y = -n; y <= n; ++y) {
                    const Vec4& a = state.amplitude(x, y);
                    if (a.norm_sq() == 0.0) continue;
                    acc += std::polar(1.0, xi * x + eta * y) * a;
                }
            }
            g.at(j, l) = acc;
        }
    }
    return g;
}

/// Pointwise application of U(xi,eta)^steps. Exact in momentum space for any
/// number of steps; only inversion needs the grid to resolve the support.
inline FourierGrid evolve_fourier(const FourierGrid& grid, const Coin& coin, int steps) {
    if (steps < 0) throw std::invalid_argument("evolve_fourier requires steps >= 0");
    const WalkOperators ops = walk_operators(coin);
    FourierGrid out = grid;
    out.time = grid.time + steps;
    for (int j = 0; j < grid.size; ++j) {
        for (int l = 0; l < grid.size; ++l) {
            const Mat4 u = matrix_power(momentum_operator(ops, grid.xi(j), grid.eta(l)),
                                        static_cast<unsigned long long>(steps));
            out.at(j, l) = u * grid.at(j, l);
        }
    }
    return out;
}

/// psi(x,y) = (1/M^2) sum_{j,l} e^{-i(xi_j x + eta_l y)} psi_hat(xi_j, eta_l)
/// on {-n..n}^2; exact (up to roundoff) because the grid resolves the support.
inline LatticeState inverse_fourier(const FourierGrid& grid) {
    const int n = grid.time;
    const int M = grid.size;
    if (M < 2 * n + 1) throw std::invalid_argument("grid under-resolves support");
    const int side = 2 * n + 1;
    std::vector<Vec4> amp(static_cast<std::size_t>(side) * side);
    LatticeState out(n, std::move(amp));
    const double inv = 1.0 / (static_cast<double>(M) * M);
    for (int x = -n; x <= n; ++x) {
        for (int y = -n; y <= n; ++y) {
            Vec4 acc;
            for (int j = 0; j < M; ++j) {
                const double xi = grid.xi(j);
                for (int l = 0; l < M; ++l) {
                    const double eta = grid.eta(l);
                    acc += std::polar(1.0, -(xi * x + eta * y)) * grid.at(j, l);
                }
            }
            out.at(x, y) = Complex(inv, 0.0) * acc;
        }
    }
    return out;
}

/// (1/M^2) * sum_{j,l} ||psi_hat(xi_j,eta_l)||^2; equals the position-space
/// total probability for a resolved grid.
inline double parseval_total(const FourierGrid& grid) {
    double s = 0.0;
    for (const Vec4& v : grid.samples) s += v.norm_sq();
    return s / (static_cast<double>(grid.size) * grid.size);
}

}  // namespace qw2d
