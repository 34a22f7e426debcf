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

#include "qw2d/linalg.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <numbers>

namespace qw2d {
namespace {

void expect_cnear(const Complex& a, const Complex& b, double tol = 1e-14) {
    EXPECT_LE(std::abs(a - b), tol) << "got " << a.real() << "+" << a.imag() << "i, want "
                                    << b.real() << "+" << b.imag() << "i";
}

TEST(SquareMatrix, DefaultIsZeroAndIdentityIsDiagonal) {
    Mat2 z;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) expect_cnear(z(i, j), 0.0, 0.0);
    const Mat4 id = Mat4::identity();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) expect_cnear(id(i, j), i == j ? 1.0 : 0.0, 0.0);
}

TEST(SquareMatrix, ProductMatchesManualTripleLoop) {
    Mat2 a, b;
    a(0, 0) = {1, 2};
    a(0, 1) = {0, -1};
    a(1, 0) = {3, 0};
    a(1, 1) = {-2, 5};
    b(0, 0) = {0, 1};
    b(0, 1) = {4, 4};
    b(1, 0) = {-1, 0};
    b(1, 1) = {2, -3};
    const Mat2 c = a * b;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex want{};
            for (std::size_t k = 0; k < 2; ++k) want += a(i, k) * b(k, j);
            expect_cnear(c(i, j), want, 0.0);
        }
    }
}

TEST(TensorProduct, MatrixLayoutIsRowMajorPairIndexing) {
    Mat2 a, b;
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 3;
    a(1, 1) = 4;
    b(0, 0) = 5;
    b(0, 1) = 6;
    b(1, 0) = 7;
    b(1, 1) = 8;
    const Mat4 t = tensor_product(a, b);
    // t(2i+k, 2j+l) = a(i,j) b(k,l)
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 2; ++l)
                    expect_cnear(t(2 * i + k, 2 * j + l), a(i, j) * b(k, l), 0.0);
    expect_cnear(t(0, 0), 5.0, 0.0);
    expect_cnear(t(2, 1), 18.0, 0.0);
    expect_cnear(t(3, 3), 32.0, 0.0);
}

TEST(TensorProduct, VectorLayoutMatchesMatrixLayout) {
    Vec2 u, v;
    u[0] = 1;
    u[1] = 2;
    v[0] = 3;
    v[1] = 4;
    const Vec4 t = tensor_product(u, v);
    expect_cnear(t[0], 3.0, 0.0);
    expect_cnear(t[1], 4.0, 0.0);
    expect_cnear(t[2], 6.0, 0.0);
    expect_cnear(t[3], 8.0, 0.0);
}

TEST(TensorProduct, MixedProductRule) {
    // (A (x) B)(u (x) v) = (Au) (x) (Bv)
    Mat2 a, b;
    a(0, 0) = {0.3, -0.1};
    a(0, 1) = {1.0, 0.5};
    a(1, 0) = {-0.7, 0.0};
    a(1, 1) = {0.2, 0.9};
    b(0, 0) = {1.1, 0.0};
    b(0, 1) = {0.0, -2.0};
    b(1, 0) = {0.4, 0.4};
    b(1, 1) = {-0.6, 0.1};
    Vec2 u, v;
    u[0] = {0.5, 0.5};
    u[1] = {-1.0, 0.25};
    v[0] = {2.0, -1.0};
    v[1] = {0.0, 1.0};
    const Vec4 lhs = tensor_product(a, b) * tensor_product(u, v);
    const Vec4 rhs = tensor_product(a * u, b * v);
    for (std::size_t i = 0; i < 4; ++i) expect_cnear(lhs[i], rhs[i], 1e-14);
}

TEST(MatrixPower, ShearAndZeroExponent) {
    Mat2 m = Mat2::identity();
    m(0, 1) = 1;
    const Mat2 m5 = matrix_power(m, 5);
    expect_cnear(m5(0, 0), 1.0, 0.0);
    expect_cnear(m5(0, 1), 5.0, 0.0);
    expect_cnear(m5(1, 1), 1.0, 0.0);
    const Mat2 m0 = matrix_power(m, 0);
    expect_cnear(m0(0, 0), 1.0, 0.0);
    expect_cnear(m0(0, 1), 0.0, 0.0);
}

TEST(Adjoint, ConjugateTranspose) {
    Mat2 m;
    m(0, 1) = {2, 3};
    m(1, 0) = {-1, 4};
    const Mat2 a = adjoint(m);
    expect_cnear(a(1, 0), {2, -3}, 0.0);
    expect_cnear(a(0, 1), {-1, -4}, 0.0);
}

TEST(Norms, FrobeniusAndMaxEntry) {
    Mat2 m;
    m(0, 0) = {3, 4};  // |.| = 5
    m(1, 1) = {0, -2};
    EXPECT_NEAR(frobenius_norm(m), std::sqrt(29.0), 1e-14);
    EXPECT_NEAR(max_abs_entry(m), 5.0, 0.0);
    Mat2 o = m;
    o(1, 1) = 0;
    EXPECT_NEAR(frobenius_distance(m, o), 2.0, 1e-14);
}

TEST(Unitarity, HadamardIsUnitaryShearIsNot) {
    Mat2 h;
    const double s = 1.0 / std::numbers::sqrt2;
    h(0, 0) = s;
    h(0, 1) = s;
    h(1, 0) = s;
    h(1, 1) = -s;
    EXPECT_TRUE(is_unitary(h, 1e-12));
    Mat2 m = Mat2::identity();
    m(0, 1) = 1;
    EXPECT_FALSE(is_unitary(m, 1e-12));
}

TEST(Vectors, NormAndLinearOps) {
    Vec4 v;
    v[0] = {0.5, 0.0};
    v[1] = {0.0, 0.5};
    v[2] = {0.5, 0.0};
    v[3] = {0.0, -0.5};
    EXPECT_NEAR(v.norm_sq(), 1.0, 1e-15);
    Vec4 w = v;
    w += v;
    EXPECT_NEAR(w.norm_sq(), 4.0, 1e-15);
    const Vec4 u = Complex(0.0, 1.0) * v;
    expect_cnear(u[0], {0.0, 0.5}, 0.0);
}

TEST(Finiteness, DetectsNonFiniteEntries) {
    Mat2 m;
    EXPECT_TRUE(m.all_finite());
    m(0, 1) = std::numeric_limits<double>::infinity();
    EXPECT_FALSE(m.all_finite());
}

}  // namespace
}  // namespace qw2d
