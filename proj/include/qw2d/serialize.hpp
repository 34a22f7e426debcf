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

#include <string>

#include "qw2d/coin.hpp"
#include "qw2d/fourier.hpp"
#include "qw2d/lattice.hpp"
#include "qw2d/linalg.hpp"
#include "qw2d/paths.hpp"
#include "qw2d/textio.hpp"

namespace qw2d {

inline JsonValue complex_pair_json(const Complex& z) {
    return JsonValue::array().push(z.real()).push(z.imag());
}

/// Coin object as it appears inside reports: {a:[re,im], b:[re,im], delta:[re,im]}.
inline JsonValue coin_json(const Coin& coin) {
    return JsonValue::object()
        .add("a", complex_pair_json(coin.a))
        .add("b", complex_pair_json(coin.b))
        .add("delta", complex_pair_json(coin.delta));
}

/// Row-major re/im split of a matrix: {"re":[N*N], "im":[N*N]}.
template <std::size_t N>
JsonValue matrix_json(const SquareMatrix<N>& m) {
    JsonValue re = JsonValue::array();
    JsonValue im = JsonValue::array();
    for (const Complex& e : m.entries) {
        re.push(e.real());
        im.push(e.imag());
    }
    return JsonValue::object().add("re", std::move(re)).add("im", std::move(im));
}

template <std::size_t N>
JsonValue vector_json_fields(const ColumnVector<N>& v, JsonValue& row) {
    JsonValue re = JsonValue::array();
    JsonValue im = JsonValue::array();
    for (const Complex& e : v.entries) {
        re.push(e.real());
        im.push(e.imag());
    }
    row.add("re", std::move(re)).add("im", std::move(im));
    return row;
}

/// CSV `x,y,p`, rows sorted lexicographically by (x,y); Distribution's map
/// already iterates in that order.
inline std::string distribution_csv(const Distribution& dist) {
    std::string out = "x,y,p\n";
    for (const auto& [site, p] : dist.probs) {
        out += std::to_string(site.first);
        out += ',';
        out += std::to_string(site.second);
        out += ',';
        out += format_double(p);
        out += '\n';
    }
    return out;
}

/// Amplitude rows {x, y, re:[4], im:[4]} for every occupied site, sorted by (x,y).
inline JsonValue state_amplitudes_json(const LatticeState& state) {
    JsonValue rows = JsonValue::array();
    const int n = state.time();
    for (int x = -n; x <= n; ++x) {
        for (int y = -n; y <= n; ++y) {
            const Vec4& a = state.amplitude(x, y);
            if (a.norm_sq() == 0.0) continue;
            JsonValue row = JsonValue::object().add("x", x).add("y", y);
            vector_json_fields(a, row);
            rows.push(std::move(row));
        }
    }
    return rows;
}

/// Moments summary printed by the CLI after a distribution run.
inline JsonValue moments_json(const Distribution& dist) {
    const double mx = moment(dist, 1, 0);
    const double my = moment(dist, 0, 1);
    return JsonValue::object()
        .add("time", dist.time)
        .add("mean_x", mx)
        .add("mean_y", my)
        .add("var_x", moment(dist, 2, 0) - mx * mx)
        .add("var_y", moment(dist, 0, 2) - my * my);
}

/// Step-count table dump: rows {l,r,d,u, re:[16], im:[16]}, entries in
/// lexicographically increasing (l,r,d) order, matrices row-major.
inline JsonValue xi_table_json(const XiTable& table) {
    JsonValue rows = JsonValue::array();
    table.for_each([&rows](int l, int r, int d, int u, const Mat4& m) {
        JsonValue row =
            JsonValue::object().add("l", l).add("r", r).add("d", d).add("u", u);
        JsonValue re = JsonValue::array();
        JsonValue im = JsonValue::array();
        for (const Complex& e : m.entries) {
            re.push(e.real());
            im.push(e.imag());
        }
        row.add("re", std::move(re)).add("im", std::move(im));
        rows.push(std::move(row));
    });
    return rows;
}

/// Momentum-grid dump: rows {j, l, xi, eta, re:[4], im:[4]}, j outer.
inline JsonValue grid_json(const FourierGrid& grid) {
    JsonValue rows = JsonValue::array();
    for (int j = 0; j < grid.size; ++j) {
        for (int l = 0; l < grid.size; ++l) {
            JsonValue row = JsonValue::object()
                                .add("j", j)
                                .add("l", l)
                                .add("xi", grid.xi(j))
                                .add("eta", grid.eta(l));
            vector_json_fields(grid.at(j, l), row);
            rows.push(std::move(row));
        }
    }
    return rows;
}

}  // namespace qw2d
