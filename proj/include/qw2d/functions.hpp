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
#include <complex>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "qw2d/linalg.hpp"

namespace qw2d {

/// A complex-valued test function on lattice sites (x, y).
struct LatticeFunction {
    std::string name;
    std::function<Complex(int, int)> eval;
};

namespace detail {
inline std::vector<LatticeFunction> build_registry() {
    std::vector<LatticeFunction> fs;
    auto real = [](double v) { return Complex(v, 0.0); };
    fs.push_back({"x", [real](int x, int) { return real(x); }});
    fs.push_back({"y", [real](int, int y) { return real(y); }});
    fs.push_back({"x_plus_y", [real](int x, int y) { return real(x + y); }});
    fs.push_back({"x2", [real](int x, int) { return real(double(x) * x); }});
    fs.push_back({"y2", [real](int, int y) { return real(double(y) * y); }});
    fs.push_back({"xy", [real](int x, int y) { return real(double(x) * y); }});
    fs.push_back({"abs_x", [real](int x, int) { return real(std::abs(x)); }});
    fs.push_back({"abs_y", [real](int, int y) { return real(std::abs(y)); }});
    fs.push_back({"abs_x_plus_abs_y",
                  [real](int x, int y) { return real(std::abs(x) + std::abs(y)); }});
    fs.push_back({"one", [real](int, int) { return real(1.0); }});
    // Plane waves exp(i(xi*x + eta*y)) on the 4x4 frequency grid
    // {0, pi/5, pi/3, 2} x {0, pi/5, pi/3, 2}.
    struct Freq {
        const char* tag;
        double value;
    };
    const Freq freqs[4] = {{"0", 0.0},
                           {"pi5", std::numbers::pi / 5.0},
                           {"pi3", std::numbers::pi / 3.0},
                           {"2", 2.0}};
    for (const Freq& fx : freqs) {
        for (const Freq& fy : freqs) {
            const double xi = fx.value;
            const double eta = fy.value;
            fs.push_back({std::string("exp_") + fx.tag + "_" + fy.tag,
                          [xi, eta](int x, int y) { return std::polar(1.0, xi * x + eta * y); }});
        }
    }
    return fs;
}
}  // namespace detail

/// The fixed 26-entry test-function set every identity sweep runs over:
/// 10 polynomial/absolute-value/constant entries followed by 16 plane waves.
inline const std::vector<LatticeFunction>& function_registry() {
    static const std::vector<LatticeFunction> registry = detail::build_registry();
    return registry;
}

/// nullptr if no registry entry has this name.
inline const LatticeFunction* find_function(std::string_view name) {
    for (const LatticeFunction& f : function_registry())
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace qw2d
