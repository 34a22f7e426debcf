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
#include <complex>
#include <cstddef>

namespace qw2d {

using Complex = std::complex<double>;

/// Dense row-major N x N complex matrix with value semantics and no heap
/// allocation. Dimensions are fixed at 2 and 4: the walk lives entirely in
/// the single-axis chirality space C^2 and its tensor square C^4.
template <std::size_t N>
struct SquareMatrix {
    static_assert(N == 2 || N == 4, "only 2x2 and 4x4 matrices are used here");

    std::array<Complex, N * N> entries{};

    static constexpr std::size_t dim = N;

    constexpr Complex& operator()(std::size_t row, std::size_t col) {
        return entries[row * N + col];
    }
    constexpr const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries[row * N + col];
    }

    static constexpr SquareMatrix zero() { return {}; }

    static constexpr SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = Complex(1.0, 0.0);
        return m;
    }

    bool all_finite() const {
        for (const Complex& e : entries) {
            if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
        }
        return true;
    }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix r;
        for (std::size_t i = 0; i < N * N; ++i) r.entries[i] = a.entries[i] + b.entries[i];
        return r;
    }
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix r;
        for (std::size_t i = 0; i < N * N; ++i) r.entries[i] = a.entries[i] - b.entries[i];
        return r;
    }
    friend SquareMatrix operator*(const Complex& s, const SquareMatrix& m) {
        SquareMatrix r;
        for (std::size_t i = 0; i < N * N; ++i) r.entries[i] = s * m.entries[i];
        return r;
    }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix r;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }
    SquareMatrix& operator+=(const SquareMatrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) entries[i] += o.entries[i];
        return *this;
    }
};

template <std::size_t N>
struct ColumnVector {
    std::array<Complex, N> entries{};

    constexpr Complex& operator[](std::size_t i) { return entries[i]; }
    constexpr const Complex& operator[](std::size_t i) const { return entries[i]; }

    double norm_sq() const {
        double s = 0.0;
        for (const Complex& e : entries) s += std::norm(e);
        return s;
    }

    friend ColumnVector operator+(const ColumnVector& a, const ColumnVector& b) {
        ColumnVector r;
        for (std::size_t i = 0; i < N; ++i) r.entries[i] = a.entries[i] + b.entries[i];
        return r;
    }
    ColumnVector& operator+=(const ColumnVector& o) {
        for (std::size_t i = 0; i < N; ++i) entries[i] += o.entries[i];
        return *this;
    }
    friend ColumnVector operator*(const Complex& s, const ColumnVector& v) {
        ColumnVector r;
        for (std::size_t i = 0; i < N; ++i) r.entries[i] = s * v.entries[i];
        return r;
    }
};

template <std::size_t N>
ColumnVector<N> operator*(const SquareMatrix<N>& m, const ColumnVector<N>& v) {
    ColumnVector<N> r;
    for (std::size_t i = 0; i < N; ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < N; ++j) acc += m(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;
using Vec2 = ColumnVector<2>;
using Vec4 = ColumnVector<4>;

/// Kronecker product, row-major blocks: result((2i+k),(2j+l)) = a(i,j)*b(k,l).
inline Mat4 tensor_product(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

inline Vec4 tensor_product(const Vec2& a, const Vec2& b) {
    Vec4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) r[2 * i + k] = a[i] * b[k];
    return r;
}

template <std::size_t N>
SquareMatrix<N> adjoint(const SquareMatrix<N>& m) {
    SquareMatrix<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

/// m^n by binary exponentiation; m^0 = identity.
template <std::size_t N>
SquareMatrix<N> matrix_power(SquareMatrix<N> m, unsigned long long n) {
    SquareMatrix<N> r = SquareMatrix<N>::identity();
    while (n) {
        if (n & 1ull) r = r * m;
        n >>= 1;
        if (n) m = m * m;
    }
    return r;
}

template <std::size_t N>
double frobenius_norm(const SquareMatrix<N>& m) {
    double s = 0.0;
    for (const Complex& e : m.entries) s += std::norm(e);
    return std::sqrt(s);
}

template <std::size_t N>
double frobenius_distance(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
    return frobenius_norm(a - b);
}

template <std::size_t N>
double max_abs_entry(const SquareMatrix<N>& m) {
    double s = 0.0;
    for (const Complex& e : m.entries) s = std::max(s, std::abs(e));
    return s;
}

template <std::size_t N>
bool is_unitary(const SquareMatrix<N>& m, double tol) {
    return frobenius_distance(adjoint(m) * m, SquareMatrix<N>::identity()) <= tol;
}

}  // namespace qw2d
