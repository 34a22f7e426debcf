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
#include <stdexcept>
#include <string>
#include <vector>

#include "qw2d/coin.hpp"
#include "qw2d/lattice.hpp"
#include "qw2d/linalg.hpp"

namespace qw2d {

/// One single-axis nearest-neighbour path of n steps starting at 0.
///
/// Encoding contract: bit (j-1) of `index` is 1 iff step j moves +1, so the
/// least significant bit is the FIRST step. increments[j-1] = v(j) in {-1,+1}
/// and positions[m] = w(m) = v(1) + ... + v(m), with positions[0] = 0.
struct Path1D {
    int length = 0;
    std::uint32_t index = 0;
    std::vector<int> increments;
    std::vector<int> positions;
};

inline constexpr int kMaxPathLength = 30;

inline Path1D path_from_index(int n, std::uint64_t k) {
    if (n < 0 || n > kMaxPathLength)
        throw std::invalid_argument("path length must lie in [0, " +
                                    std::to_string(kMaxPathLength) + "]");
    if (k >> n)
        throw std::invalid_argument("path index must satisfy k < 2^n");
    Path1D p;
    p.length = n;
    p.index = static_cast<std::uint32_t>(k);
    p.increments.resize(n);
    p.positions.resize(n + 1);
    p.positions[0] = 0;
    for (int j = 0; j < n; ++j) {
        p.increments[j] = (k >> j) & 1ull ? +1 : -1;
        p.positions[j + 1] = p.positions[j] + p.increments[j];
    }
    return p;
}

inline std::uint32_t index_from_increments(const std::vector<int>& increments) {
    if (increments.size() > kMaxPathLength)
        throw std::invalid_argument("path length must lie in [0, " +
                                    std::to_string(kMaxPathLength) + "]");
    std::uint32_t k = 0;
    for (std::size_t j = 0; j < increments.size(); ++j)
        if (increments[j] > 0) k |= (1u << j);
    return k;
}

struct PathPair {
    Path1D first, second;
};

/// Ordered single-axis weight W(k) = P_{v(n)} ... P_{v(1)}: the factor for
/// the FIRST step sits rightmost; v = -1 contributes p = [[a,b],[0,0]] and
/// v = +1 contributes q = [[0,0],[c,d]].
inline Mat2 path_weight(const Coin& coin, const Path1D& path) {
    const WalkOperators ops = walk_operators(coin);
    Mat2 w = Mat2::identity();
    for (int v : path.increments) w = (v < 0 ? ops.p1 : ops.q1) * w;
    return w;
}

/// Weight of an axis pair: W(first) (x) W(second).
inline Mat4 pair_weight(const Coin& coin, const PathPair& pair) {
    return tensor_product(path_weight(coin, pair.first), path_weight(coin, pair.second));
}

/// All 2^n single-axis paths of length n, with their weights and position
/// sequences, indexed by the encoding above. This is the working set for
/// every identity sweep, so it is computed once per (coin, n).
struct PathEnsemble {
    int length = 0;
    std::vector<Mat2> weights;
    std::vector<std::vector<int>> positions;
};

inline PathEnsemble enumerate_paths(const Coin& coin, int n) {
    if (n < 0 || n > 16)
        throw std::invalid_argument("path enumeration is limited to n <= 16");
    const WalkOperators ops = walk_operators(coin);
    PathEnsemble e;
    e.length = n;
    const std::size_t count = std::size_t{1} << n;
    e.weights.resize(count);
    e.positions.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        Mat2 w = Mat2::identity();
        std::vector<int> pos(n + 1);
        pos[0] = 0;
        for (int j = 0; j < n; ++j) {
            const bool plus = (k >> j) & 1u;
            w = (plus ? ops.q1 : ops.p1) * w;
            pos[j + 1] = pos[j] + (plus ? 1 : -1);
        }
        e.weights[k] = w;
        e.positions[k] = std::move(pos);
    }
    return e;
}

/// Step-count table at order n: entry (l,r,d,u) with l+r+d+u = n is the sum,
/// over all length-n sequences with those left/right/down/up step counts, of
/// the ordered operator products (later steps leftmost). Order 0 holds the
/// single entry I_4, and the table satisfies
///
///   X_{n+1}(l,r,d,u) = left*X_n(l-1,r,d,u) + right*X_n(l,r-1,d,u)
///                    + down*X_n(l,r,d-1,u) + up*X_n(l,r,d,u-1)
///
/// (missing neighbours read as zero) as well as sum over all entries
/// = (U (x) U)^n.
class XiTable {
public:
    explicit XiTable(int n) : n_(n), stride_(n + 1) {
        if (n < 0) throw std::invalid_argument("table order must be >= 0");
        entries_.resize(static_cast<std::size_t>(stride_) * stride_ * stride_);
    }

    int order() const { return n_; }

    const Mat4& entry(int l, int r, int d, int u) const {
        if (l < 0 || r < 0 || d < 0 || u < 0 || l + r + d + u != n_)
            throw std::invalid_argument("table entry requires l,r,d,u >= 0 with l+r+d+u = n");
        return entries_[(static_cast<std::size_t>(l) * stride_ + r) * stride_ + d];
    }

    Mat4& slot(int l, int r, int d) {
        return entries_[(static_cast<std::size_t>(l) * stride_ + r) * stride_ + d];
    }
    const Mat4& slot(int l, int r, int d) const {
        return entries_[(static_cast<std::size_t>(l) * stride_ + r) * stride_ + d];
    }

    /// Visits entries in lexicographically increasing (l, r, d) order
    /// (u = n - l - r - d is determined).
    template <typename F>
    void for_each(F&& fn) const {
        for (int l = 0; l <= n_; ++l)
            for (int r = 0; l + r <= n_; ++r)
                for (int d = 0; l + r + d <= n_; ++d)
                    fn(l, r, d, n_ - l - r - d, slot(l, r, d));
    }

    Mat4 total() const {
        Mat4 t;
        for_each([&](int, int, int, int, const Mat4& m) { t += m; });
        return t;
    }

private:
    int n_;
    int stride_;
    std::vector<Mat4> entries_;
};

inline constexpr int kMaxXiRecursive = 12;
inline constexpr int kMaxXiBruteForce = 10;

inline XiTable xi_recursive(const Coin& coin, int n) {
    if (n < 0 || n > kMaxXiRecursive)
        throw std::invalid_argument("recursive table order is limited to n <= " +
                                    std::to_string(kMaxXiRecursive));
    const WalkOperators ops = walk_operators(coin);
    XiTable cur(0);
    cur.slot(0, 0, 0) = Mat4::identity();
    for (int m = 0; m < n; ++m) {
        XiTable next(m + 1);
        for (int l = 0; l <= m + 1; ++l) {
            for (int r = 0; l + r <= m + 1; ++r) {
                for (int d = 0; l + r + d <= m + 1; ++d) {
                    const int u = m + 1 - l - r - d;
                    Mat4 acc;
                    if (l >= 1 && r + d + u <= m) acc += ops.left * cur.slot(l - 1, r, d);
                    if (r >= 1 && l + d + u <= m) acc += ops.right * cur.slot(l, r - 1, d);
                    if (d >= 1 && l + r + u <= m) acc += ops.down * cur.slot(l, r, d - 1);
                    if (u >= 1 && l + r + d <= m) acc += ops.up * cur.slot(l, r, d);
                    next.slot(l, r, d) = acc;
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

namespace detail {
inline void xi_brute_rec(const Mat4* dir_ops, int depth, int n, const Mat4& prod, int l, int r,
                         int d, XiTable& out) {
    if (depth == n) {
        out.slot(l, r, d) += prod;
        return;
    }
    xi_brute_rec(dir_ops, depth + 1, n, dir_ops[0] * prod, l + 1, r, d, out);
    xi_brute_rec(dir_ops, depth + 1, n, dir_ops[1] * prod, l, r + 1, d, out);
    xi_brute_rec(dir_ops, depth + 1, n, dir_ops[2] * prod, l, r, d + 1, out);
    xi_brute_rec(dir_ops, depth + 1, n, dir_ops[3] * prod, l, r, d, out);
}
}  // namespace detail

/// Independent oracle for xi_recursive: enumerates all 4^n step sequences
/// and multiplies the operators in order (later steps applied on the left).
inline XiTable xi_bruteforce(const Coin& coin, int n) {
    if (n < 0 || n > kMaxXiBruteForce)
        throw std::invalid_argument("brute-force table order is limited to n <= " +
                                    std::to_string(kMaxXiBruteForce));
    const WalkOperators ops = walk_operators(coin);
    const Mat4 dir_ops[4] = {ops.left, ops.right, ops.down, ops.up};
    XiTable out(n);
    detail::xi_brute_rec(dir_ops, 0, n, Mat4::identity(), 0, 0, 0, out);
    return out;
}

/// Position distribution read off the table: entries with equal displacement
/// (x, y) = (-l + r, -d + u) contribute to the SAME site, so their amplitude
/// vectors are summed coherently before taking the squared norm.
inline Distribution distribution_from_xi(const XiTable& table, const Qubit4& phi) {
    if (std::abs(phi.norm_sq() - 1.0) > kStateNormTol)
        throw std::invalid_argument("initial state rejected: squared norm must equal 1 (got " +
                                    std::to_string(phi.norm_sq()) + ")");
    const Vec4 v = phi.vec();
    std::map<std::pair<int, int>, Vec4> site_amp;
    table.for_each([&](int l, int r, int d, int u, const Mat4& m) {
        site_amp[{-l + r, -d + u}] += m * v;
    });
    Distribution dist;
    dist.time = table.order();
    for (const auto& [site, amp] : site_amp) {
        const double p = amp.norm_sq();
        if (p > 0.0) dist.probs[site] = p;
    }
    return dist;
}

}  // namespace qw2d
