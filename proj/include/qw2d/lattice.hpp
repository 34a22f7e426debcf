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

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qw2d/coin.hpp"
#include "qw2d/linalg.hpp"
#include "qw2d/rng.hpp"

namespace qw2d {

/// Initial chirality state (alpha, beta, gamma, lambda) at the origin,
/// ordered like the chirality rows L, R, D, U.
struct Qubit4 {
    Complex alpha, beta, gamma, lambda;

    Vec4 vec() const {
        Vec4 v;
        v[0] = alpha;
        v[1] = beta;
        v[2] = gamma;
        v[3] = lambda;
        return v;
    }
    double norm_sq() const { return vec().norm_sq(); }
};

/// Seeded normalized state; the four components are drawn as
/// (2u-1) + i(2u-1) in component order from SplitMix64(seed), then the
/// vector is normalized.
inline Qubit4 random_qubit(std::uint64_t seed) {
    SplitMix64 rng(seed);
    Complex comp[4];
    for (auto& c : comp) {
        const double re = 2.0 * rng.next_unit() - 1.0;
        const double im = 2.0 * rng.next_unit() - 1.0;
        c = Complex(re, im);
    }
    double n = 0.0;
    for (const auto& c : comp) n += std::norm(c);
    const double inv = 1.0 / std::sqrt(n);
    return Qubit4{inv * comp[0], inv * comp[1], inv * comp[2], inv * comp[3]};
}

inline constexpr Vec4 kZeroVec4{};

/// Wave function after n steps, stored densely on the square
/// {-n..n} x {-n..n} (the reachable diamond sits inside it; off-diamond
/// sites simply stay zero). amplitude() returns zero outside the square,
/// which makes the update stencil below bound-free.
class LatticeState {
public:
    LatticeState(int time, std::vector<Vec4> amplitudes)
        : time_(time), side_(2 * time + 1), amp_(std::move(amplitudes)) {
        if (time < 0) throw std::invalid_argument("lattice state time must be >= 0");
        if (amp_.size() != static_cast<std::size_t>(side_) * side_)
            throw std::invalid_argument("lattice state storage does not match its time");
    }

    int time() const { return time_; }

    const Vec4& amplitude(int x, int y) const {
        if (x < -time_ || x > time_ || y < -time_ || y > time_) return kZeroVec4;
        return amp_[static_cast<std::size_t>(x + time_) * side_ + (y + time_)];
    }

    Vec4& at(int x, int y) {
        return amp_[static_cast<std::size_t>(x + time_) * side_ + (y + time_)];
    }

    double total_probability() const {
        double s = 0.0;
        for (const Vec4& v : amp_) s += v.norm_sq();
        return s;
    }

private:
    int time_;
    int side_;
    std::vector<Vec4> amp_;
};

inline constexpr double kStateNormTol = 1e-9;

inline LatticeState initial_state(const Qubit4& phi) {
    if (std::abs(phi.norm_sq() - 1.0) > kStateNormTol)
        throw std::invalid_argument("initial state rejected: squared norm must equal 1 (got " +
                                    std::to_string(phi.norm_sq()) + ")");
    std::vector<Vec4> amp(1);
    amp[0] = phi.vec();
    return LatticeState(0, std::move(amp));
}

/// One time step. The new amplitude gathers from the four neighbours:
///
///   psi'(x,y) = right*psi(x-1,y) + left*psi(x+1,y)
///             + up*psi(x,y-1)    + down*psi(x,y+1)
inline LatticeState step(const LatticeState& state, const WalkOperators& ops) {
    const int n = state.time() + 1;
    const int side = 2 * n + 1;
    std::vector<Vec4> amp(static_cast<std::size_t>(side) * side);
    LatticeState out(n, std::move(amp));
    for (int x = -n; x <= n; ++x) {
        for (int y = -n; y <= n; ++y) {
            Vec4 v = ops.right * state.amplitude(x - 1, y);
            v += ops.left * state.amplitude(x + 1, y);
            v += ops.up * state.amplitude(x, y - 1);
            v += ops.down * state.amplitude(x, y + 1);
            out.at(x, y) = v;
        }
    }
    return out;
}

inline LatticeState evolve(LatticeState state, const WalkOperators& ops, int steps) {
    if (steps < 0) throw std::invalid_argument("evolve requires steps >= 0");
    for (int i = 0; i < steps; ++i) state = step(state, ops);
    return state;
}

/// Position distribution: strictly positive masses only, keyed by (x,y) in
/// lexicographic order (std::map), so iteration order is deterministic.
struct Distribution {
    int time = 0;
    std::map<std::pair<int, int>, double> probs;
};

inline Distribution distribution(const LatticeState& state) {
    Distribution d;
    d.time = state.time();
    for (int x = -state.time(); x <= state.time(); ++x) {
        for (int y = -state.time(); y <= state.time(); ++y) {
            const double p = state.amplitude(x, y).norm_sq();
            if (p > 0.0) d.probs[{x, y}] = p;
        }
    }
    return d;
}

namespace detail {
inline double int_pow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}
}  // namespace detail

/// E[X^kx * Y^ky] under the distribution (0^0 = 1).
inline double moment(const Distribution& dist, int kx, int ky) {
    if (kx < 0 || ky < 0) throw std::invalid_argument("moment orders must be >= 0");
    double s = 0.0;
    for (const auto& [site, p] : dist.probs)
        s += detail::int_pow(site.first, kx) * detail::int_pow(site.second, ky) * p;
    return s;
}

}  // namespace qw2d
