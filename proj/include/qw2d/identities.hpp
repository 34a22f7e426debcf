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

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qw2d/coin.hpp"
#include "qw2d/fourier.hpp"
#include "qw2d/functions.hpp"
#include "qw2d/lattice.hpp"
#include "qw2d/linalg.hpp"
#include "qw2d/paths.hpp"
#include "qw2d/serialize.hpp"
#include "qw2d/textio.hpp"

namespace qw2d {

// Tolerances are fixed, not configurable: scalar identities are exact up to
// a handful of roundings; operator sums accumulate up to 2^24 terms.
inline constexpr double kScalarTol = 1e-12;
inline constexpr double kOperatorTol = 1e-10;
inline constexpr double kCounterexampleThreshold = 1e-9;
inline constexpr int kMaxPairBits = 24;
inline constexpr int kMaxConjectureOrder = 8;

/// Each two-parameter statement has two displayed expressions, one stepping
/// the first path's clock and one the second's; Axis selects which is checked.
enum class Axis { first, second };

inline const char* to_string(Axis a) { return a == Axis::first ? "first" : "second"; }

enum class Verdict { pass, fail, report_only };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "report-only";
    }
}

struct Counterexample {
    JsonValue params;
    double residual = 0.0;
};

struct IdentityReport {
    std::string check;
    JsonValue params = JsonValue::object();
    std::variant<std::monostate, Complex, Mat4> lhs, rhs;
    double residual = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::pass;
    std::vector<Counterexample> counterexamples;

    /// Normative row shape: {check, params, residual, tolerance, verdict,
    /// counterexamples}. lhs/rhs stay in-process only.
    JsonValue to_json() const {
        JsonValue ces = JsonValue::array();
        for (const Counterexample& ce : counterexamples)
            ces.push(JsonValue::object().add("params", ce.params).add("residual", ce.residual));
        return JsonValue::object()
            .add("check", check)
            .add("params", params)
            .add("residual", residual)
            .add("tolerance", tolerance)
            .add("verdict", to_string(verdict))
            .add("counterexamples", std::move(ces));
    }
};

/// One report per line so reruns diff cleanly.
inline std::string reports_json(const std::vector<IdentityReport>& reports) {
    if (reports.empty()) return "[]\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        reports[i].to_json().dump(out);
        out += (i + 1 < reports.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

/// 0 if no pass/fail check failed, else 3 (report-only checks never fail).
inline int exit_code_for(const std::vector<IdentityReport>& reports) {
    for (const IdentityReport& r : reports)
        if (r.verdict == Verdict::fail) return 3;
    return 0;
}

struct NamedCoin {
    std::string spec;
    Coin coin;
};

namespace detail {

inline void require_pair_guard(int n, int np) {
    if (n < 0 || np < 0) throw std::invalid_argument("path lengths must be >= 0");
    if (n + np > kMaxPairBits)
        throw std::invalid_argument("pair enumeration guard exceeded: n + n' = " +
                                    std::to_string(n + np) + " but 2^(n+n') must not exceed 2^" +
                                    std::to_string(kMaxPairBits));
}

/// Registry functions are called millions of times inside sweeps; this
/// caches f on the square [-range, range]^2 so the hot loops do table reads.
class FunctionTable {
public:
    FunctionTable(const LatticeFunction& f, int range) : range_(range), side_(2 * range + 1) {
        values_.resize(static_cast<std::size_t>(side_) * side_);
        for (int x = -range; x <= range; ++x)
            for (int y = -range; y <= range; ++y)
                values_[static_cast<std::size_t>(x + range_) * side_ + (y + range_)] = f.eval(x, y);
    }
    Complex operator()(int x, int y) const {
        return values_[static_cast<std::size_t>(x + range_) * side_ + (y + range_)];
    }

private:
    int range_;
    int side_;
    std::vector<Complex> values_;
};

inline std::vector<std::vector<int>> all_positions(int n) {
    if (n < 0 || n > 16) throw std::invalid_argument("path enumeration is limited to n <= 16");
    std::vector<std::vector<int>> ps(std::size_t{1} << n);
    for (std::size_t k = 0; k < ps.size(); ++k) {
        std::vector<int> pos(n + 1);
        pos[0] = 0;
        for (int j = 0; j < n; ++j) pos[j + 1] = pos[j] + (((k >> j) & 1u) ? 1 : -1);
        ps[k] = std::move(pos);
    }
    return ps;
}

struct ItoSides {
    Complex lhs, rhs;
};

/// The single-axis increment decomposition at one time step:
///   f(w + Delta*e) - f(w) = (1/2)[f(w+e) - f(w-e)]*Delta
///                         + (1/2)[f(w+e) - 2 f(w) + f(w-e)]
/// with e the active-axis unit vector. axis=first reads w1 at m and m+1 and
/// w2 at m' (m' = n' is legal there); axis=second is the mirror image.
template <typename F>
ItoSides ito_sides(const F& f, const std::vector<int>& w1, const std::vector<int>& w2, int m,
                   int mp, Axis axis) {
    ItoSides s;
    if (axis == Axis::first) {
        const int x = w1[m], xn = w1[m + 1], y = w2[mp];
        const Complex fw = f(x, y), fp = f(x + 1, y), fm = f(x - 1, y);
        const double delta = xn - x;
        s.lhs = f(xn, y) - fw;
        s.rhs = 0.5 * delta * (fp - fm) + 0.5 * (fp - 2.0 * fw + fm);
    } else {
        const int x = w1[m], y = w2[mp], yn = w2[mp + 1];
        const Complex fw = f(x, y), fp = f(x, y + 1), fm = f(x, y - 1);
        const double delta = yn - y;
        s.lhs = f(x, yn) - fw;
        s.rhs = 0.5 * delta * (fp - fm) + 0.5 * (fp - 2.0 * fw + fm);
    }
    return s;
}

/// Part (b): the full-horizon increment against the telescoped sum of
/// part-(a) right-hand sides (the passive clock pinned at its endpoint).
template <typename F>
ItoSides telescoped_sides(const F& f, const std::vector<int>& w1, const std::vector<int>& w2,
                          Axis axis) {
    const int n = static_cast<int>(w1.size()) - 1;
    const int np = static_cast<int>(w2.size()) - 1;
    ItoSides out{};
    if (axis == Axis::first) {
        out.lhs = f(w1[n], w2[np]) - f(w1[0], w2[np]);
        for (int m = 0; m < n; ++m) out.rhs += ito_sides(f, w1, w2, m, np, Axis::first).rhs;
    } else {
        out.lhs = f(w1[n], w2[np]) - f(w1[n], w2[0]);
        for (int mp = 0; mp < np; ++mp) out.rhs += ito_sides(f, w1, w2, n, mp, Axis::second).rhs;
    }
    return out;
}

struct OperatorSides {
    Mat4 lhs, rhs;
};

inline std::vector<Mat4> all_pair_weights(const PathEnsemble& e1, const PathEnsemble& e2) {
    std::vector<Mat4> w;
    w.reserve(e1.weights.size() * e2.weights.size());
    for (const Mat2& a : e1.weights)
        for (const Mat2& b : e2.weights) w.push_back(tensor_product(a, b));
    return w;
}

/// Operator-weighted increment identity: each scalar side is multiplied by
/// the pair weight W(k) (x) W(k') and summed over all pairs; summed=true
/// additionally sums the scalars over the full clock rectangle
/// [0,n) x [0,n') before weighting (then m, m' are ignored).
template <typename F>
OperatorSides weighted_ito_sides(const F& f, const PathEnsemble& e1, const PathEnsemble& e2,
                                 int m, int mp, Axis axis, bool summed,
                                 const std::vector<Mat4>* pair_w = nullptr) {
    OperatorSides out{};
    const std::size_t c1 = e1.weights.size(), c2 = e2.weights.size();
    std::size_t idx = 0;
    Mat4 tmp;
    for (std::size_t k = 0; k < c1; ++k) {
        for (std::size_t kp = 0; kp < c2; ++kp, ++idx) {
            Complex lsum{}, rsum{};
            if (summed) {
                for (int mm = 0; mm < e1.length; ++mm) {
                    for (int mmp = 0; mmp < e2.length; ++mmp) {
                        const ItoSides s =
                            ito_sides(f, e1.positions[k], e2.positions[kp], mm, mmp, axis);
                        lsum += s.lhs;
                        rsum += s.rhs;
                    }
                }
            } else {
                const ItoSides s = ito_sides(f, e1.positions[k], e2.positions[kp], m, mp, axis);
                lsum = s.lhs;
                rsum = s.rhs;
            }
            if (lsum == Complex{} && rsum == Complex{}) continue;
            const Mat4* P;
            if (pair_w) {
                P = &(*pair_w)[idx];
            } else {
                tmp = tensor_product(e1.weights[k], e2.weights[kp]);
                P = &tmp;
            }
            out.lhs += lsum * *P;
            out.rhs += rsum * *P;
        }
    }
    return out;
}

/// Absolute-value specialization with sgn(0) = 0. literal=true drops the
/// |w(t)| subtrahend from the left side (the printed form), which is why it
/// is reported rather than asserted.
inline OperatorSides tanaka_sides(const PathEnsemble& e1, const PathEnsemble& e2, int m, int mp,
                                  Axis axis, bool literal,
                                  const std::vector<Mat4>* pair_w = nullptr) {
    OperatorSides out{};
    const std::size_t c1 = e1.weights.size(), c2 = e2.weights.size();
    std::size_t idx = 0;
    Mat4 tmp;
    for (std::size_t k = 0; k < c1; ++k) {
        for (std::size_t kp = 0; kp < c2; ++kp, ++idx) {
            const std::vector<int>& w =
                axis == Axis::first ? e1.positions[k] : e2.positions[kp];
            const int t = axis == Axis::first ? m : mp;
            const int wt = w[t], wn = w[t + 1];
            const double lc =
                std::abs(static_cast<double>(wn)) - (literal ? 0.0 : std::abs(static_cast<double>(wt)));
            const double sg = wt > 0 ? 1.0 : (wt < 0 ? -1.0 : 0.0);
            const double rc = sg * (wn - wt) + (wt == 0 ? 1.0 : 0.0);
            const Mat4* P;
            if (pair_w) {
                P = &(*pair_w)[idx];
            } else {
                tmp = tensor_product(e1.weights[k], e2.weights[kp]);
                P = &tmp;
            }
            out.lhs += Complex(lc) * *P;
            out.rhs += Complex(rc) * *P;
        }
    }
    return out;
}

inline Mat2 phase_diag(double angle) {
    Mat2 d;
    d(0, 0) = std::polar(1.0, -angle);
    d(1, 1) = std::polar(1.0, angle);
    return d;
}

/// Exact binomial coefficient (row-wise multiplicative; integral at every
/// intermediate step, exact in double for the n <= 30 range used here).
inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    unsigned long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return static_cast<double>(c);
}

struct WorstCase {
    double residual = -1.0;
    JsonValue where = JsonValue::object();

    template <typename MakeParams>
    void offer(double r, MakeParams&& make) {
        if (r > residual) {
            residual = r;
            where = make();
        }
    }
    double value() const { return residual < 0.0 ? 0.0 : residual; }
};

inline IdentityReport make_report(std::string check, JsonValue params, double residual,
                                  double tolerance, bool report_only) {
    IdentityReport r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.residual = residual;
    r.tolerance = tolerance;
    r.verdict = report_only ? Verdict::report_only
                            : (residual <= tolerance ? Verdict::pass : Verdict::fail);
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single checks
// ---------------------------------------------------------------------------

inline IdentityReport check_prop2_local(const LatticeFunction& f, const PathPair& pair, int m,
                                        int mp, Axis axis) {
    const int n = pair.first.length, np = pair.second.length;
    if (m < 0 || m >= n || mp < 0 || mp >= np)
        throw std::out_of_range("clock indices require 0 <= m < n and 0 <= m' < n'");
    const auto ev = [&f](int x, int y) { return f.eval(x, y); };
    const detail::ItoSides s =
        detail::ito_sides(ev, pair.first.positions, pair.second.positions, m, mp, axis);
    IdentityReport r = detail::make_report(
        "prop2.local",
        JsonValue::object()
            .add("function", f.name)
            .add("n", n)
            .add("nprime", np)
            .add("k", static_cast<long long>(pair.first.index))
            .add("kprime", static_cast<long long>(pair.second.index))
            .add("m", m)
            .add("mprime", mp)
            .add("axis", to_string(axis)),
        std::abs(s.lhs - s.rhs), kScalarTol, false);
    r.lhs = s.lhs;
    r.rhs = s.rhs;
    return r;
}

inline IdentityReport check_prop2_telescoped(const LatticeFunction& f, const PathPair& pair,
                                             Axis axis) {
    const auto ev = [&f](int x, int y) { return f.eval(x, y); };
    const detail::ItoSides s =
        detail::telescoped_sides(ev, pair.first.positions, pair.second.positions, axis);
    IdentityReport r = detail::make_report(
        "prop2.telescoped",
        JsonValue::object()
            .add("function", f.name)
            .add("n", pair.first.length)
            .add("nprime", pair.second.length)
            .add("k", static_cast<long long>(pair.first.index))
            .add("kprime", static_cast<long long>(pair.second.index))
            .add("axis", to_string(axis)),
        std::abs(s.lhs - s.rhs), kScalarTol, false);
    r.lhs = s.lhs;
    r.rhs = s.rhs;
    return r;
}

inline IdentityReport check_thm3(const LatticeFunction& f, const Coin& coin, int n, int np, int m,
                                 int mp, Axis axis, bool summed) {
    detail::require_pair_guard(n, np);
    if (!summed && (m < 0 || m >= n || mp < 0 || mp >= np))
        throw std::out_of_range("clock indices require 0 <= m < n and 0 <= m' < n'");
    const PathEnsemble e1 = enumerate_paths(coin, n);
    const PathEnsemble e2 = enumerate_paths(coin, np);
    const auto ev = [&f](int x, int y) { return f.eval(x, y); };
    const detail::OperatorSides s = detail::weighted_ito_sides(ev, e1, e2, m, mp, axis, summed);
    JsonValue params = JsonValue::object()
                           .add("function", f.name)
                           .add("coin", coin_json(coin))
                           .add("n", n)
                           .add("nprime", np);
    if (!summed) params.add("m", m).add("mprime", mp);
    params.add("axis", to_string(axis)).add("summed", summed);
    IdentityReport r =
        detail::make_report(summed ? "thm3.summed" : "thm3.pointwise", std::move(params),
                            frobenius_distance(s.lhs, s.rhs), kOperatorTol, false);
    r.lhs = s.lhs;
    r.rhs = s.rhs;
    return r;
}

inline IdentityReport check_tanaka(const Coin& coin, int n, int np, int m, int mp, Axis axis,
                                   bool literal) {
    detail::require_pair_guard(n, np);
    if (axis == Axis::first ? (m < 0 || m >= n) : (mp < 0 || mp >= np))
        throw std::out_of_range("clock index must address a step of the active axis");
    const PathEnsemble e1 = enumerate_paths(coin, n);
    const PathEnsemble e2 = enumerate_paths(coin, np);
    const detail::OperatorSides s = detail::tanaka_sides(e1, e2, m, mp, axis, literal);
    IdentityReport r = detail::make_report(
        literal ? "tanaka.literal" : "tanaka.corrected",
        JsonValue::object()
            .add("coin", coin_json(coin))
            .add("n", n)
            .add("nprime", np)
            .add("m", m)
            .add("mprime", mp)
            .add("axis", to_string(axis))
            .add("literal", literal),
        frobenius_distance(s.lhs, s.rhs), kOperatorTol, literal);
    r.lhs = s.lhs;
    r.rhs = s.rhs;
    return r;
}

enum class Cor5Variant { literal, tensor };

inline const char* to_string(Cor5Variant v) {
    return v == Cor5Variant::literal ? "literal" : "tensor";
}

namespace detail {

inline OperatorSides cor5_sides(const Coin& coin, const PathEnsemble& e, double xi, double eta,
                                Cor5Variant variant) {
    const int n = e.length;
    const std::size_t c = e.weights.size();
    OperatorSides out{};
    if (variant == Cor5Variant::tensor) {
        for (std::size_t k = 0; k < c; ++k) {
            for (std::size_t kp = 0; kp < c; ++kp) {
                const Complex ph =
                    std::polar(1.0, xi * e.positions[k][n] + eta * e.positions[kp][n]);
                out.lhs += ph * tensor_product(e.weights[k], e.weights[kp]);
            }
        }
        const Mat2 u = coin.matrix();
        out.rhs = tensor_product(matrix_power(phase_diag(xi) * u, n),
                                 matrix_power(phase_diag(eta) * u, n));
        return out;
    }
    const WalkOperators ops = walk_operators(coin);
    out.lhs = matrix_power(momentum_operator(ops, xi, eta), static_cast<unsigned long long>(n));
    // The (m,m') double phase sum factors per pair into two single-clock
    // sums; sA carries the first-axis increment factor.
    std::vector<Complex> sA(c), sC(c), sB(c);
    for (std::size_t k = 0; k < c; ++k) {
        Complex a{}, cc{}, b{};
        for (int m = 0; m < n; ++m) {
            const Complex p1 = std::polar(1.0, xi * e.positions[k][m]);
            a += p1 * static_cast<double>(e.positions[k][m + 1] - e.positions[k][m]);
            cc += p1;
            b += std::polar(1.0, eta * e.positions[k][m]);
        }
        sA[k] = a;
        sC[k] = cc;
        sB[k] = b;
    }
    Mat4 s1, s2;
    for (std::size_t k = 0; k < c; ++k) {
        for (std::size_t kp = 0; kp < c; ++kp) {
            const Mat4 P = tensor_product(e.weights[k], e.weights[kp]);
            s1 += (sA[k] * sB[kp]) * P;
            s2 += (sC[k] * sB[kp]) * P;
        }
    }
    out.rhs = matrix_power(tensor_product(coin.matrix(), coin.matrix()),
                           static_cast<unsigned long long>(n));
    out.rhs += (Complex(0.0, 1.0) * std::sin(xi + eta)) * s1;
    out.rhs += Complex(std::cos(xi + eta) - 1.0, 0.0) * s2;
    return out;
}

}  // namespace detail

inline IdentityReport check_cor5(const Coin& coin, int n, double xi, double eta,
                                 Cor5Variant variant) {
    detail::require_pair_guard(n, n);
    const PathEnsemble e = enumerate_paths(coin, n);
    const detail::OperatorSides s = detail::cor5_sides(coin, e, xi, eta, variant);
    IdentityReport r = detail::make_report(
        variant == Cor5Variant::tensor ? "cor5.tensor" : "cor5.literal",
        JsonValue::object()
            .add("coin", coin_json(coin))
            .add("n", n)
            .add("xi", xi)
            .add("eta", eta)
            .add("variant", to_string(variant)),
        frobenius_distance(s.lhs, s.rhs), kOperatorTol, variant == Cor5Variant::literal);
    r.lhs = s.lhs;
    r.rhs = s.rhs;
    return r;
}

namespace detail {

/// Right side of the conjectured two-parameter rule: one cross-term group per
/// coordinate plus a five-point second-difference group, with each "+1"/"-1"
/// shift taken along the coordinate whose clock index moves in that argument.
template <typename F>
ItoSides conjecture6_sides(const F& f, const std::vector<int>& w1, const std::vector<int>& w2,
                           int m, int mp) {
    const int xm = w1[m], xp = w1[m + 1], xmm = w1[m - 1];
    const int ym = w2[mp], yp = w2[mp + 1], ymm = w2[mp - 1];
    const Complex a = f(xm, yp + 1);
    const Complex b = f(xm, ymm - 1);
    const Complex c = f(xp + 1, ym);
    const Complex d = f(xmm - 1, ym);
    ItoSides s;
    s.lhs = f(xp, yp) - f(xm, ym);
    s.rhs = 0.5 * static_cast<double>(yp - ym) * (a - b) +
            0.5 * static_cast<double>(xp - xm) * (c - d) +
            0.5 * (a + b - 4.0 * f(xm, ym) + c - d);
    return s;
}

}  // namespace detail

inline IdentityReport check_conjecture6(const LatticeFunction& f, const PathPair& pair, int m,
                                        int mp) {
    const int n = pair.first.length, np = pair.second.length;
    if (m < 1 || m >= n || mp < 1 || mp >= np)
        throw std::out_of_range(
            "clock indices require 1 <= m < n and 1 <= m' < n' (the scheme samples m-1 and m'-1)");
    const auto ev = [&f](int x, int y) { return f.eval(x, y); };
    const detail::ItoSides s =
        detail::conjecture6_sides(ev, pair.first.positions, pair.second.positions, m, mp);
    IdentityReport r = detail::make_report(
        "conjecture6",
        JsonValue::object()
            .add("function", f.name)
            .add("n", n)
            .add("nprime", np)
            .add("k", static_cast<long long>(pair.first.index))
            .add("kprime", static_cast<long long>(pair.second.index))
            .add("m", m)
            .add("mprime", mp),
        std::abs(s.lhs - s.rhs), kCounterexampleThreshold, true);
    r.lhs = s.lhs;
    r.rhs = s.rhs;
    return r;
}

/// sigma_{n,n'}(f) = sum over pairs of f at the endpoint pair times the
/// pair weight; f = 1 collapses it to U^n (x) U^n' by completeness.
inline Mat4 path_integral_sigma(const LatticeFunction& f, const Coin& coin, int n, int np) {
    detail::require_pair_guard(n, np);
    const PathEnsemble e1 = enumerate_paths(coin, n);
    const PathEnsemble e2 = enumerate_paths(coin, np);
    Mat4 acc;
    for (std::size_t k = 0; k < e1.weights.size(); ++k) {
        for (std::size_t kp = 0; kp < e2.weights.size(); ++kp) {
            const Complex v = f.eval(e1.positions[k][n], e2.positions[kp][np]);
            if (v == Complex{}) continue;
            acc += v * tensor_product(e1.weights[k], e2.weights[kp]);
        }
    }
    return acc;
}

/// Scalar counterpart of the operator identity: pair weights become products
/// of per-axis step probabilities p/(p+q), q/(p+q) (first axis) and
/// r/(r+s), s/(r+s) (second axis) — the only normalization under which the
/// path measure totals 1. Checks, in one residual: the pointwise and summed
/// scalar identities for every clock pair, total measure = 1, and (for
/// p=q=r=s=1/4) the endpoint law against the product of two symmetric
/// binomial laws.
inline IdentityReport check_classical_reduction(const ClassicalWeights& w,
                                                const LatticeFunction& f, int n, int np) {
    detail::require_pair_guard(n, np);
    const double pq = w.p + w.q, rs = w.r + w.s;
    if (n > 0 && pq <= 0.0)
        throw std::invalid_argument("classical reduction: first-axis weights sum to zero with n > 0");
    if (np > 0 && rs <= 0.0)
        throw std::invalid_argument(
            "classical reduction: second-axis weights sum to zero with n' > 0");
    const auto pos1 = detail::all_positions(n);
    const auto pos2 = detail::all_positions(np);
    std::vector<double> mu1(pos1.size()), mu2(pos2.size());
    for (std::size_t k = 0; k < mu1.size(); ++k) {
        double m = 1.0;
        for (int j = 0; j < n; ++j) m *= ((k >> j) & 1u) ? w.q / pq : w.p / pq;
        mu1[k] = m;
    }
    for (std::size_t k = 0; k < mu2.size(); ++k) {
        double m = 1.0;
        for (int j = 0; j < np; ++j) m *= ((k >> j) & 1u) ? w.s / rs : w.r / rs;
        mu2[k] = m;
    }

    const detail::FunctionTable table(f, std::max(n, np) + 2);
    const std::size_t cells = static_cast<std::size_t>(n) * np;
    std::array<std::vector<Complex>, 2> accL, accR;
    for (int ai = 0; ai < 2; ++ai) {
        accL[ai].assign(cells, Complex{});
        accR[ai].assign(cells, Complex{});
    }
    Complex sumL[2] = {}, sumR[2] = {};
    double total = 0.0;
    std::map<std::pair<int, int>, double> law;
    for (std::size_t k = 0; k < mu1.size(); ++k) {
        for (std::size_t kp = 0; kp < mu2.size(); ++kp) {
            const double mu = mu1[k] * mu2[kp];
            total += mu;
            law[{pos1[k][n], pos2[kp][np]}] += mu;
            if (mu == 0.0) continue;
            for (int ai = 0; ai < 2; ++ai) {
                const Axis axis = ai == 0 ? Axis::first : Axis::second;
                for (int m = 0; m < n; ++m) {
                    for (int mp = 0; mp < np; ++mp) {
                        const detail::ItoSides s =
                            detail::ito_sides(table, pos1[k], pos2[kp], m, mp, axis);
                        accL[ai][static_cast<std::size_t>(m) * np + mp] += mu * s.lhs;
                        accR[ai][static_cast<std::size_t>(m) * np + mp] += mu * s.rhs;
                        sumL[ai] += mu * s.lhs;
                        sumR[ai] += mu * s.rhs;
                    }
                }
            }
        }
    }

    double residual = std::abs(total - 1.0);
    for (int ai = 0; ai < 2; ++ai) {
        for (std::size_t i = 0; i < cells; ++i)
            residual = std::max(residual, std::abs(accL[ai][i] - accR[ai][i]));
        residual = std::max(residual, std::abs(sumL[ai] - sumR[ai]));
    }
    if (w.p == 0.25 && w.q == 0.25 && w.r == 0.25 && w.s == 0.25) {
        for (int x = -n; x <= n; ++x) {
            for (int y = -np; y <= np; ++y) {
                double expected = 0.0;
                if ((x + n) % 2 == 0 && (y + np) % 2 == 0)
                    expected = std::ldexp(detail::binom(n, (x + n) / 2), -n) *
                               std::ldexp(detail::binom(np, (y + np) / 2), -np);
                const auto it = law.find({x, y});
                const double actual = it == law.end() ? 0.0 : it->second;
                residual = std::max(residual, std::abs(actual - expected));
            }
        }
    }
    return detail::make_report("classical.reduction",
                               JsonValue::object()
                                   .add("weights", JsonValue::array()
                                                       .push(w.p)
                                                       .push(w.q)
                                                       .push(w.r)
                                                       .push(w.s))
                                   .add("function", f.name)
                                   .add("n", n)
                                   .add("nprime", np),
                               residual, kScalarTol, false);
}

// ---------------------------------------------------------------------------
// Sweeps (the verify suites). Each aggregates a full normative parameter
// range into a handful of reports whose residual is the sweep maximum and
// whose params record where that maximum occurred.
// ---------------------------------------------------------------------------

inline std::vector<IdentityReport> sweep_prop2(int max_n = 6) {
    const auto& registry = function_registry();
    std::vector<detail::FunctionTable> tables;
    tables.reserve(registry.size());
    for (const LatticeFunction& f : registry) tables.emplace_back(f, max_n + 2);
    std::vector<std::vector<std::vector<int>>> pos(max_n + 1);
    for (int n = 1; n <= max_n; ++n) pos[n] = detail::all_positions(n);

    // trackers [f][axis][0 = local, 1 = telescoped]
    std::vector<std::array<std::array<detail::WorstCase, 2>, 2>> worst(registry.size());
    for (int n = 1; n <= max_n; ++n) {
        for (int np = 1; np <= max_n; ++np) {
            detail::require_pair_guard(n, np);
            for (std::size_t k = 0; k < pos[n].size(); ++k) {
                for (std::size_t kp = 0; kp < pos[np].size(); ++kp) {
                    for (std::size_t fi = 0; fi < registry.size(); ++fi) {
                        for (int ai = 0; ai < 2; ++ai) {
                            const Axis axis = ai == 0 ? Axis::first : Axis::second;
                            for (int m = 0; m < n; ++m) {
                                for (int mp = 0; mp < np; ++mp) {
                                    const detail::ItoSides s = detail::ito_sides(
                                        tables[fi], pos[n][k], pos[np][kp], m, mp, axis);
                                    worst[fi][ai][0].offer(std::abs(s.lhs - s.rhs), [&] {
                                        return JsonValue::object()
                                            .add("n", n)
                                            .add("nprime", np)
                                            .add("k", static_cast<long long>(k))
                                            .add("kprime", static_cast<long long>(kp))
                                            .add("m", m)
                                            .add("mprime", mp);
                                    });
                                }
                            }
                            const detail::ItoSides t = detail::telescoped_sides(
                                tables[fi], pos[n][k], pos[np][kp], axis);
                            worst[fi][ai][1].offer(std::abs(t.lhs - t.rhs), [&] {
                                return JsonValue::object()
                                    .add("n", n)
                                    .add("nprime", np)
                                    .add("k", static_cast<long long>(k))
                                    .add("kprime", static_cast<long long>(kp));
                            });
                        }
                    }
                }
            }
        }
    }

    std::vector<IdentityReport> reports;
    for (std::size_t fi = 0; fi < registry.size(); ++fi) {
        for (int ai = 0; ai < 2; ++ai) {
            for (int part = 0; part < 2; ++part) {
                reports.push_back(detail::make_report(
                    part == 0 ? "prop2.local" : "prop2.telescoped",
                    JsonValue::object()
                        .add("function", registry[fi].name)
                        .add("axis", to_string(ai == 0 ? Axis::first : Axis::second))
                        .add("n_max", max_n)
                        .add("worst", worst[fi][ai][part].where),
                    worst[fi][ai][part].value(), kScalarTol, false));
            }
        }
    }
    return reports;
}

inline std::vector<IdentityReport> sweep_thm3(const std::vector<NamedCoin>& coins, int max_n = 5) {
    const auto& registry = function_registry();
    std::vector<detail::FunctionTable> tables;
    tables.reserve(registry.size());
    for (const LatticeFunction& f : registry) tables.emplace_back(f, max_n + 2);

    std::vector<IdentityReport> reports;
    for (const NamedCoin& nc : coins) {
        std::vector<std::array<std::array<detail::WorstCase, 2>, 2>> worst(registry.size());
        for (int n = 1; n <= max_n; ++n) {
            for (int np = 1; np <= max_n; ++np) {
                detail::require_pair_guard(n, np);
                const PathEnsemble e1 = enumerate_paths(nc.coin, n);
                const PathEnsemble e2 = enumerate_paths(nc.coin, np);
                const bool hoist = n + np <= 16;
                const std::vector<Mat4> pw =
                    hoist ? detail::all_pair_weights(e1, e2) : std::vector<Mat4>{};
                const std::vector<Mat4>* pwp = hoist ? &pw : nullptr;
                for (std::size_t fi = 0; fi < registry.size(); ++fi) {
                    for (int ai = 0; ai < 2; ++ai) {
                        const Axis axis = ai == 0 ? Axis::first : Axis::second;
                        for (int m = 0; m < n; ++m) {
                            for (int mp = 0; mp < np; ++mp) {
                                const detail::OperatorSides s = detail::weighted_ito_sides(
                                    tables[fi], e1, e2, m, mp, axis, false, pwp);
                                worst[fi][ai][0].offer(frobenius_distance(s.lhs, s.rhs), [&] {
                                    return JsonValue::object()
                                        .add("n", n)
                                        .add("nprime", np)
                                        .add("m", m)
                                        .add("mprime", mp);
                                });
                            }
                        }
                        const detail::OperatorSides s =
                            detail::weighted_ito_sides(tables[fi], e1, e2, 0, 0, axis, true, pwp);
                        worst[fi][ai][1].offer(frobenius_distance(s.lhs, s.rhs), [&] {
                            return JsonValue::object().add("n", n).add("nprime", np);
                        });
                    }
                }
            }
        }
        for (std::size_t fi = 0; fi < registry.size(); ++fi) {
            for (int ai = 0; ai < 2; ++ai) {
                for (int part = 0; part < 2; ++part) {
                    reports.push_back(detail::make_report(
                        part == 0 ? "thm3.pointwise" : "thm3.summed",
                        JsonValue::object()
                            .add("function", registry[fi].name)
                            .add("coin_spec", nc.spec)
                            .add("coin", coin_json(nc.coin))
                            .add("axis", to_string(ai == 0 ? Axis::first : Axis::second))
                            .add("n_max", max_n)
                            .add("worst", worst[fi][ai][part].where),
                        worst[fi][ai][part].value(), kOperatorTol, false));
                }
            }
        }
    }
    return reports;
}

inline std::vector<IdentityReport> sweep_tanaka(const std::vector<NamedCoin>& coins,
                                                int max_n = 5) {
    std::vector<IdentityReport> reports;
    for (const NamedCoin& nc : coins) {
        // trackers [axis][0 = corrected, 1 = literal]
        std::array<std::array<detail::WorstCase, 2>, 2> worst;
        for (int n = 1; n <= max_n; ++n) {
            for (int np = 1; np <= max_n; ++np) {
                detail::require_pair_guard(n, np);
                const PathEnsemble e1 = enumerate_paths(nc.coin, n);
                const PathEnsemble e2 = enumerate_paths(nc.coin, np);
                const std::vector<Mat4> pw = detail::all_pair_weights(e1, e2);
                for (int ai = 0; ai < 2; ++ai) {
                    const Axis axis = ai == 0 ? Axis::first : Axis::second;
                    const int steps = ai == 0 ? n : np;
                    for (int t = 0; t < steps; ++t) {
                        const int m = ai == 0 ? t : 0;
                        const int mp = ai == 0 ? 0 : t;
                        for (int lit = 0; lit < 2; ++lit) {
                            const detail::OperatorSides s =
                                detail::tanaka_sides(e1, e2, m, mp, axis, lit == 1, &pw);
                            worst[ai][lit].offer(frobenius_distance(s.lhs, s.rhs), [&] {
                                return JsonValue::object()
                                    .add("n", n)
                                    .add("nprime", np)
                                    .add(ai == 0 ? "m" : "mprime", t);
                            });
                        }
                    }
                }
            }
        }
        for (int ai = 0; ai < 2; ++ai) {
            for (int lit = 0; lit < 2; ++lit) {
                reports.push_back(detail::make_report(
                    lit == 0 ? "tanaka.corrected" : "tanaka.literal",
                    JsonValue::object()
                        .add("coin_spec", nc.spec)
                        .add("coin", coin_json(nc.coin))
                        .add("axis", to_string(ai == 0 ? Axis::first : Axis::second))
                        .add("n_max", max_n)
                        .add("worst", worst[ai][lit].where),
                    worst[ai][lit].value(), kOperatorTol, lit == 1));
            }
        }
    }
    return reports;
}

/// The 5x5 momentum sample grid for the Fourier-expansion checks; includes
/// the origin (where the literal variant is exact) and one point
/// incommensurate with pi.
inline const std::array<double, 5>& cor5_grid() {
    static const std::array<double, 5> g = {-std::numbers::pi, -std::numbers::pi / 2.0, 0.0,
                                            std::numbers::pi / 2.0, 2.0};
    return g;
}

inline std::vector<IdentityReport> sweep_cor5(const NamedCoin& nc, int max_n = 6) {
    std::vector<IdentityReport> reports;
    for (int n = 1; n <= max_n; ++n) {
        detail::require_pair_guard(n, n);
        const PathEnsemble e = enumerate_paths(nc.coin, n);
        for (int variant = 0; variant < 2; ++variant) {
            const Cor5Variant v = variant == 0 ? Cor5Variant::tensor : Cor5Variant::literal;
            detail::WorstCase worst;
            double origin_residual = 0.0;
            for (double xi : cor5_grid()) {
                for (double eta : cor5_grid()) {
                    const detail::OperatorSides s = detail::cor5_sides(nc.coin, e, xi, eta, v);
                    const double r = frobenius_distance(s.lhs, s.rhs);
                    if (xi == 0.0 && eta == 0.0) origin_residual = r;
                    worst.offer(r, [&] {
                        return JsonValue::object().add("xi", xi).add("eta", eta);
                    });
                }
            }
            JsonValue params = JsonValue::object()
                                   .add("coin_spec", nc.spec)
                                   .add("coin", coin_json(nc.coin))
                                   .add("n", n)
                                   .add("grid", "5x5");
            if (v == Cor5Variant::literal) params.add("origin_residual", origin_residual);
            params.add("worst", worst.where);
            reports.push_back(detail::make_report(
                v == Cor5Variant::tensor ? "cor5.tensor" : "cor5.literal", std::move(params),
                worst.value(), kOperatorTol, v == Cor5Variant::literal));
        }
    }
    return reports;
}

/// Momentum-space one-step law: the transform of the stepped state must equal
/// the pointwise product of the one-step momentum operator with the transform
/// of the original, on every grid point. n here is the post-step time.
inline std::vector<IdentityReport> sweep_lemma1(const std::vector<NamedCoin>& coins,
                                                const std::vector<std::uint64_t>& state_seeds,
                                                int max_steps = 20) {
    if (coins.size() != state_seeds.size())
        throw std::invalid_argument("each coin needs exactly one initial-state seed");
    std::vector<IdentityReport> reports;
    for (std::size_t i = 0; i < coins.size(); ++i) {
        const WalkOperators ops = walk_operators(coins[i].coin);
        LatticeState state = initial_state(random_qubit(state_seeds[i]));
        detail::WorstCase worst;
        for (int t = 1; t <= max_steps; ++t) {
            const int grid_size = 2 * t + 2;
            const FourierGrid before = fourier_transform(state, grid_size);
            state = step(state, ops);
            const FourierGrid after = fourier_transform(state, grid_size);
            const FourierGrid predicted = evolve_fourier(before, coins[i].coin, 1);
            double r = 0.0;
            for (std::size_t s = 0; s < after.samples.size(); ++s)
                for (int comp = 0; comp < 4; ++comp)
                    r = std::max(r,
                                 std::abs(after.samples[s][comp] - predicted.samples[s][comp]));
            worst.offer(r, [&] { return JsonValue::object().add("n", t); });
        }
        reports.push_back(detail::make_report(
            "lemma1",
            JsonValue::object()
                .add("coin_spec", coins[i].spec)
                .add("coin", coin_json(coins[i].coin))
                .add("state_seed", static_cast<long long>(state_seeds[i]))
                .add("n_max", max_steps)
                .add("grid", "M=2n+2")
                .add("worst", worst.where),
            worst.value(), kScalarTol, false));
    }
    return reports;
}

inline std::vector<IdentityReport> sweep_xi_oracle(const std::vector<NamedCoin>& coins,
                                                   int max_n = 8) {
    std::vector<IdentityReport> reports;
    for (const NamedCoin& nc : coins) {
        detail::WorstCase worst_tab, worst_tot;
        const Mat4 uu = tensor_product(nc.coin.matrix(), nc.coin.matrix());
        for (int n = 0; n <= max_n; ++n) {
            const XiTable rec = xi_recursive(nc.coin, n);
            const XiTable bru = xi_bruteforce(nc.coin, n);
            double r = 0.0;
            rec.for_each([&](int l, int rr, int d, int, const Mat4& m) {
                r = std::max(r, max_abs_entry(m - bru.slot(l, rr, d)));
            });
            worst_tab.offer(r, [&] { return JsonValue::object().add("n", n); });
            worst_tot.offer(frobenius_distance(rec.total(),
                                               matrix_power(uu, static_cast<unsigned long long>(n))),
                            [&] { return JsonValue::object().add("n", n); });
        }
        reports.push_back(detail::make_report(
            "xi.recursive_vs_bruteforce",
            JsonValue::object()
                .add("coin_spec", nc.spec)
                .add("coin", coin_json(nc.coin))
                .add("n_max", max_n)
                .add("worst", worst_tab.where),
            worst_tab.value(), kScalarTol, false));
        reports.push_back(detail::make_report(
            "xi.total_vs_power",
            JsonValue::object()
                .add("coin_spec", nc.spec)
                .add("coin", coin_json(nc.coin))
                .add("n_max", max_n)
                .add("worst", worst_tot.where),
            worst_tot.value(), kScalarTol, false));
    }
    return reports;
}

inline std::vector<IdentityReport> sweep_classical(int max_n = 5) {
    const auto& registry = function_registry();
    const LatticeFunction* one = find_function("one");
    std::vector<IdentityReport> reports;

    const ClassicalWeights uniform = make_classical_weights(0.25, 0.25, 0.25, 0.25);
    detail::WorstCase worst_uniform;
    for (int n = 1; n <= max_n; ++n)
        for (int np = 1; np <= max_n; ++np)
            worst_uniform.offer(check_classical_reduction(uniform, *one, n, np).residual, [&] {
                return JsonValue::object().add("n", n).add("nprime", np);
            });
    reports.push_back(detail::make_report(
        "classical.uniform_binomial",
        JsonValue::object()
            .add("weights", JsonValue::array().push(0.25).push(0.25).push(0.25).push(0.25))
            .add("function", "one")
            .add("n_max", max_n)
            .add("worst", worst_uniform.where),
        worst_uniform.value(), kScalarTol, false));

    // All first-axis weight on the -1 step concentrates the whole measure on
    // the all-left path; the second axis is empty so its weights are unused.
    {
        const ClassicalWeights degenerate = make_classical_weights(1.0, 0.0, 0.0, 0.0);
        const int n = 3;
        const auto pos = detail::all_positions(n);
        double mass_at_target = 0.0, mass_elsewhere = 0.0;
        for (std::size_t k = 0; k < pos.size(); ++k) {
            double mu = 1.0;
            for (int j = 0; j < n; ++j) mu *= ((k >> j) & 1u) ? 0.0 : 1.0;
            (pos[k][n] == -n ? mass_at_target : mass_elsewhere) += mu;
        }
        const double direct = std::max(std::abs(mass_at_target - 1.0), mass_elsewhere);
        const double generic = check_classical_reduction(degenerate, *one, n, 0).residual;
        reports.push_back(detail::make_report(
            "classical.degenerate",
            JsonValue::object()
                .add("weights", JsonValue::array().push(1.0).push(0.0).push(0.0).push(0.0))
                .add("n", n)
                .add("nprime", 0),
            std::max(direct, generic), kScalarTol, false));
    }

    const ClassicalWeights biased = make_classical_weights(0.4, 0.3, 0.2, 0.1);
    for (const LatticeFunction& f : registry) {
        detail::WorstCase worst;
        for (int n = 1; n <= max_n; ++n)
            for (int np = 1; np <= max_n; ++np)
                worst.offer(check_classical_reduction(biased, f, n, np).residual, [&] {
                    return JsonValue::object().add("n", n).add("nprime", np);
                });
        reports.push_back(detail::make_report(
            "classical.ito_identity",
            JsonValue::object()
                .add("weights", JsonValue::array().push(0.4).push(0.3).push(0.2).push(0.1))
                .add("function", f.name)
                .add("n_max", max_n)
                .add("worst", worst.where),
            worst.value(), kScalarTol, false));
    }
    return reports;
}

/// Report-only conjecture sweep: one report per registry function, residual
/// maxima plus every (k, k', m, m') whose residual exceeds the threshold,
/// in ascending parameter order.
inline std::vector<IdentityReport> sweep_conjecture6(int n, int np) {
    if (n < 0 || np < 0 || n > kMaxConjectureOrder || np > kMaxConjectureOrder)
        throw std::invalid_argument("conjecture sweep guard exceeded: n and n' must lie in [0, " +
                                    std::to_string(kMaxConjectureOrder) + "]");
    const auto pos1 = detail::all_positions(n);
    const auto pos2 = detail::all_positions(np);
    const auto& registry = function_registry();
    const int range = std::max(n, np) + 2;

    std::vector<IdentityReport> reports;
    for (const LatticeFunction& f : registry) {
        const detail::FunctionTable table(f, range);
        detail::WorstCase worst;
        std::vector<Counterexample> ces;
        for (std::size_t k = 0; k < pos1.size(); ++k) {
            for (std::size_t kp = 0; kp < pos2.size(); ++kp) {
                for (int m = 1; m < n; ++m) {
                    for (int mp = 1; mp < np; ++mp) {
                        const detail::ItoSides s =
                            detail::conjecture6_sides(table, pos1[k], pos2[kp], m, mp);
                        const double r = std::abs(s.lhs - s.rhs);
                        const auto where = [&] {
                            return JsonValue::object()
                                .add("k", static_cast<long long>(k))
                                .add("kprime", static_cast<long long>(kp))
                                .add("m", m)
                                .add("mprime", mp);
                        };
                        worst.offer(r, where);
                        if (r > kCounterexampleThreshold) ces.push_back({where(), r});
                    }
                }
            }
        }
        IdentityReport rep = detail::make_report("conjecture6",
                                                 JsonValue::object()
                                                     .add("function", f.name)
                                                     .add("n", n)
                                                     .add("nprime", np)
                                                     .add("worst", worst.where),
                                                 worst.value(), kCounterexampleThreshold, true);
        rep.counterexamples = std::move(ces);
        reports.push_back(std::move(rep));
    }
    return reports;
}

// ---------------------------------------------------------------------------
// Suite assembly
// ---------------------------------------------------------------------------

inline std::vector<NamedCoin> coin_panel(const NamedCoin& primary,
                                         std::initializer_list<std::uint64_t> seeds) {
    std::vector<NamedCoin> v{primary};
    for (std::uint64_t s : seeds) v.push_back({"seed:" + std::to_string(s), random_coin(s)});
    return v;
}

/// Runs one verify suite (or all of them) at its normative parameter range;
/// n_override > 0 replaces the suite's maximum order. Throws on an unknown
/// suite name.
inline std::vector<IdentityReport> run_verify_suite(const std::string& suite,
                                                    const NamedCoin& primary,
                                                    int n_override = -1) {
    const auto pick = [&](int normative) { return n_override > 0 ? n_override : normative; };
    const bool all = suite == "all";
    bool matched = all;
    std::vector<IdentityReport> out;
    const auto append = [&out](std::vector<IdentityReport> r) {
        for (IdentityReport& x : r) out.push_back(std::move(x));
    };
    if (all || suite == "prop2") {
        matched = true;
        append(sweep_prop2(pick(6)));
    }
    if (all || suite == "thm3") {
        matched = true;
        append(sweep_thm3(coin_panel(primary, {1, 2, 3, 4, 5}), pick(5)));
    }
    if (all || suite == "tanaka") {
        matched = true;
        append(sweep_tanaka(coin_panel(primary, {1, 2, 3, 4, 5}), pick(5)));
    }
    if (all || suite == "cor5") {
        matched = true;
        append(sweep_cor5(primary, pick(6)));
    }
    if (all || suite == "lemma1") {
        matched = true;
        append(sweep_lemma1(coin_panel(primary, {1, 2, 3, 4, 5, 6, 7, 8, 9}),
                            {101, 102, 103, 104, 105, 106, 107, 108, 109, 110}, pick(20)));
    }
    if (all || suite == "xi-oracle") {
        matched = true;
        append(sweep_xi_oracle(coin_panel(primary, {1, 2, 3}), pick(8)));
    }
    if (all || suite == "classical") {
        matched = true;
        append(sweep_classical(pick(5)));
    }
    if (!matched)
        throw std::invalid_argument("unknown verify suite '" + suite +
                                    "' (expected prop2, thm3, tanaka, cor5, lemma1, xi-oracle, "
                                    "classical, or all)");
    return out;
}

}  // namespace qw2d
