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

#include "qw2d/serialize.hpp"

#include <gtest/gtest.h>

#include <string>

#include "qw2d/identities.hpp"

namespace qw2d {
namespace {

TEST(FormatDouble, SeventeenSignificantDigits) {
    EXPECT_EQ(format_double(0.25), "2.5000000000000000e-01");
    EXPECT_EQ(format_double(1.0), "1.0000000000000000e+00");
    EXPECT_EQ(format_double(-3.0), "-3.0000000000000000e+00");
    EXPECT_EQ(format_double(1e-300), "1.0000000000000000e-300");
}

TEST(JsonValue, EscapingAndInsertionOrder) {
    EXPECT_EQ(json_escape("a\"b\\c\n"), "a\\\"b\\\\c\\n");
    JsonValue v = JsonValue::object()
                      .add("b", 1)
                      .add("a", JsonValue::array().push(true).push(nullptr).push("s"));
    EXPECT_EQ(v.dump(), "{\"b\":1,\"a\":[true,null,\"s\"]}");
}

TEST(JsonValue, ComplexPairs) {
    EXPECT_EQ(complex_pair_json(Complex(1.5, -2.0)).dump(),
              "[1.5000000000000000e+00,-2.0000000000000000e+00]");
}

TEST(CoinJson, FieldOrderAndValues) {
    const std::string dump = coin_json(identity_coin()).dump();
    EXPECT_EQ(dump,
              "{\"a\":[1.0000000000000000e+00,0.0000000000000000e+00],"
              "\"b\":[0.0000000000000000e+00,0.0000000000000000e+00],"
              "\"delta\":[1.0000000000000000e+00,0.0000000000000000e+00]}");
}

TEST(MatrixJson, RowMajorSplit) {
    Mat2 m;
    m(0, 0) = 1;
    m(0, 1) = {0, 2};
    m(1, 1) = -1;
    EXPECT_EQ(matrix_json(m).dump(),
              "{\"re\":[1.0000000000000000e+00,0.0000000000000000e+00,"
              "0.0000000000000000e+00,-1.0000000000000000e+00],"
              "\"im\":[0.0000000000000000e+00,2.0000000000000000e+00,"
              "0.0000000000000000e+00,0.0000000000000000e+00]}");
}

TEST(DistributionCsv, IdentityCoinThreeStepsIsByteExact) {
    const LatticeState s =
        evolve(initial_state(Qubit4{1.0, 0.0, 0.0, 0.0}), walk_operators(identity_coin()), 3);
    EXPECT_EQ(distribution_csv(distribution(s)), "x,y,p\n-3,0,1.0000000000000000e+00\n");
}

TEST(DistributionCsv, RowsAreSortedLexicographically) {
    const LatticeState s =
        evolve(initial_state(Qubit4{1.0, 0.0, 0.0, 0.0}), walk_operators(hadamard_coin()), 1);
    const std::string csv = distribution_csv(distribution(s));
    const std::string::size_type a = csv.find("-1,0,");
    const std::string::size_type b = csv.find("0,-1,", a);
    const std::string::size_type c = csv.find("0,1,", b);
    const std::string::size_type d = csv.find("1,0,", c);
    EXPECT_NE(a, std::string::npos);
    EXPECT_NE(b, std::string::npos);
    EXPECT_NE(c, std::string::npos);
    EXPECT_NE(d, std::string::npos);
    EXPECT_EQ(csv.substr(0, 6), "x,y,p\n");
}

TEST(StateAmplitudesJson, IdentityCoinSingleRow) {
    const LatticeState s =
        evolve(initial_state(Qubit4{1.0, 0.0, 0.0, 0.0}), walk_operators(identity_coin()), 3);
    EXPECT_EQ(state_amplitudes_json(s).dump(),
              "[{\"x\":-3,\"y\":0,"
              "\"re\":[1.0000000000000000e+00,0.0000000000000000e+00,"
              "0.0000000000000000e+00,0.0000000000000000e+00],"
              "\"im\":[0.0000000000000000e+00,0.0000000000000000e+00,"
              "0.0000000000000000e+00,0.0000000000000000e+00]}]");
}

TEST(MomentsJson, KeyOrderAndIdentityCoinValues) {
    const Distribution d = distribution(
        evolve(initial_state(Qubit4{1.0, 0.0, 0.0, 0.0}), walk_operators(identity_coin()), 3));
    EXPECT_EQ(moments_json(d).dump(),
              "{\"time\":3,"
              "\"mean_x\":-3.0000000000000000e+00,"
              "\"mean_y\":0.0000000000000000e+00,"
              "\"var_x\":0.0000000000000000e+00,"
              "\"var_y\":0.0000000000000000e+00}");
}

TEST(XiTableJson, RowCountAndLeadingRow) {
    const std::string dump = xi_table_json(xi_recursive(identity_coin(), 2)).dump();
    // Order-2 compositions of (l,r,d,u): C(5,3) = 10 rows, (0,0,0,2) first.
    std::size_t rows = 0;
    for (std::size_t pos = dump.find("{\"l\":"); pos != std::string::npos;
         pos = dump.find("{\"l\":", pos + 1))
        ++rows;
    EXPECT_EQ(rows, 10u);
    EXPECT_EQ(dump.rfind("[{\"l\":0,\"r\":0,\"d\":0,\"u\":2,", 0), 0u);
}

TEST(GridJson, RowMajorSampleOrderWithAngles) {
    const FourierGrid g = fourier_transform(initial_state(Qubit4{1.0, 0.0, 0.0, 0.0}), 2);
    const std::string dump = grid_json(g).dump();
    EXPECT_EQ(dump.rfind("[{\"j\":0,\"l\":0,\"xi\":-3.1415926535897931e+00,"
                         "\"eta\":-3.1415926535897931e+00,",
                         0),
              0u);
    EXPECT_NE(dump.find("{\"j\":1,\"l\":0,"), std::string::npos);
}

TEST(ReportsJson, EmptyAndSingleLineShapes) {
    EXPECT_EQ(reports_json({}), "[]\n");
    IdentityReport r;
    r.check = "demo";
    r.params = JsonValue::object().add("n", 1);
    r.residual = 0.0;
    r.tolerance = 1e-12;
    r.verdict = Verdict::pass;
    const std::string out = reports_json({r});
    EXPECT_EQ(out,
              "[\n{\"check\":\"demo\",\"params\":{\"n\":1},"
              "\"residual\":0.0000000000000000e+00,"
              "\"tolerance\":9.9999999999999998e-13,"
              "\"verdict\":\"pass\",\"counterexamples\":[]}\n]\n");
}

}  // namespace
}  // namespace qw2d
