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
//
// Command-line front end. Exit codes: 0 success (all asserted identities
// hold), 2 precondition or guard violation (including argument errors),
// 3 at least one asserted identity exceeded its tolerance.

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qw2d/qw2d.hpp"

namespace {

std::vector<double> parse_reals(const std::string& text, std::size_t expected, const char* what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string tok =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (...) {
            used = 0;
        }
        if (tok.empty() || used != tok.size())
            throw std::invalid_argument(std::string(what) + ": '" + tok +
                                        "' is not a real number");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != expected)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                    " comma-separated reals, got " + std::to_string(out.size()));
    return out;
}

// hadamard | identity | seed:N | a_re,a_im,b_re,b_im,delta_re,delta_im
qw2d::NamedCoin parse_coin(const std::string& spec) {
    if (spec == "hadamard") return {spec, qw2d::hadamard_coin()};
    if (spec == "identity") return {spec, qw2d::identity_coin()};
    if (spec.rfind("seed:", 0) == 0) {
        const std::string digits = spec.substr(5);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("coin seed must be a non-negative integer: '" + spec +
                                        "'");
        return {spec, qw2d::random_coin(std::stoull(digits))};
    }
    const std::vector<double> v = parse_reals(spec, 6, "--coin");
    return {spec, qw2d::make_coin({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]})};
}

qw2d::Qubit4 parse_init(const std::string& text) {
    const std::vector<double> v = parse_reals(text, 8, "--init");
    return qw2d::Qubit4{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

// The engine is sequential; the cap is validated and then trivially honored.
void validate_thread_cap() {
    const char* tv = std::getenv("QW2D_THREADS");
    if (!tv) return;
    const std::string s = tv;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("QW2D_THREADS must be a positive integer, got '" + s + "'");
    long v = 0;
    try {
        v = std::stol(s);
    } catch (...) {
        throw std::invalid_argument("QW2D_THREADS out of range: '" + s + "'");
    }
    if (v < 1) throw std::invalid_argument("QW2D_THREADS must be >= 1, got '" + s + "'");
}

int run_dist(const std::string& coin_spec, int n, const std::string& init,
             const std::string& format, const std::string& out_opt) {
    if (n < 0) throw std::invalid_argument("--n must be >= 0");
    const qw2d::NamedCoin coin = parse_coin(coin_spec);
    const qw2d::WalkOperators ops = qw2d::walk_operators(coin.coin);
    const qw2d::LatticeState state =
        qw2d::evolve(qw2d::initial_state(parse_init(init)), ops, n);
    const qw2d::Distribution dist = qw2d::distribution(state);
    const std::string out =
        out_opt.empty() ? (format == "csv" ? "dist.csv" : "dist.json") : out_opt;
    if (format == "csv") {
        write_file(out, qw2d::distribution_csv(dist));
    } else {
        qw2d::JsonValue doc = qw2d::JsonValue::object()
                                  .add("time", state.time())
                                  .add("coin_spec", coin.spec)
                                  .add("coin", qw2d::coin_json(coin.coin))
                                  .add("amplitudes", qw2d::state_amplitudes_json(state));
        write_file(out, doc.dump() + "\n");
    }
    std::cout << qw2d::moments_json(dist).dump() << "\n";
    return 0;
}

int run_verify(const std::string& suite, const std::string& coin_spec, int n_override,
               const std::string& out) {
    const qw2d::NamedCoin coin = parse_coin(coin_spec);
    const std::vector<qw2d::IdentityReport> reports =
        qw2d::run_verify_suite(suite, coin, n_override);
    write_file(out, qw2d::reports_json(reports));
    for (const qw2d::IdentityReport& r : reports)
        std::cout << qw2d::to_string(r.verdict) << " " << r.check
                  << " residual=" << qw2d::format_double(r.residual) << "\n";
    return qw2d::exit_code_for(reports);
}

int run_conjecture6(int n, int np, const std::string& out) {
    const std::vector<qw2d::IdentityReport> reports = qw2d::sweep_conjecture6(n, np);
    write_file(out, qw2d::reports_json(reports));
    const auto& registry = qw2d::function_registry();
    for (std::size_t i = 0; i < reports.size(); ++i)
        std::cout << "report-only conjecture6 function=" << registry[i].name
                  << " residual=" << qw2d::format_double(reports[i].residual)
                  << " counterexamples=" << reports[i].counterexamples.size() << "\n";
    return 0;
}

int run_sigma(const std::string& fname, const std::string& coin_spec, int n, int np,
              const std::string& out) {
    const qw2d::LatticeFunction* f = qw2d::find_function(fname);
    if (!f) {
        std::string names;
        for (const qw2d::LatticeFunction& g : qw2d::function_registry()) {
            if (!names.empty()) names += ", ";
            names += g.name;
        }
        throw std::invalid_argument("unknown function '" + fname + "'; available: " + names);
    }
    const qw2d::NamedCoin coin = parse_coin(coin_spec);
    const qw2d::Mat4 sigma = qw2d::path_integral_sigma(*f, coin.coin, n, np);
    qw2d::JsonValue doc = qw2d::JsonValue::object()
                              .add("function", fname)
                              .add("coin_spec", coin.spec)
                              .add("coin", qw2d::coin_json(coin.coin))
                              .add("n", n)
                              .add("nprime", np)
                              .add("sigma", qw2d::matrix_json(sigma));
    write_file(out, doc.dump() + "\n");
    std::cout << "sigma written to " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "two-dimensional coined quantum walk: distributions, operator-weighted path sums, and "
        "identity verification"};
    app.require_subcommand(1);

    std::string dist_coin = "hadamard", dist_init = "1,0,0,0,0,0,0,0", dist_format = "csv",
                dist_out;
    int dist_n = 0;
    CLI::App* dist = app.add_subcommand("dist", "evolve a state and write its distribution");
    dist->add_option("--coin", dist_coin,
                     "hadamard | identity | seed:N | a_re,a_im,b_re,b_im,delta_re,delta_im");
    dist->add_option("--n", dist_n, "number of steps")->required();
    dist->add_option("--init", dist_init,
                     "initial qubit, 8 comma-separated reals (re,im per L,R,D,U component)");
    dist->add_option("--format", dist_format, "csv (distribution) or json (amplitudes)")
        ->check(CLI::IsMember({"csv", "json"}));
    dist->add_option("--out", dist_out, "output file (default dist.csv / dist.json)");

    std::string verify_suite, verify_coin = "hadamard", verify_out = "report.json";
    int verify_n = -1;
    CLI::App* verify = app.add_subcommand("verify", "run an identity suite and write a report");
    verify->add_option("--suite", verify_suite,
                       "prop2 | thm3 | tanaka | cor5 | lemma1 | xi-oracle | classical | all")
        ->required();
    verify->add_option("--coin", verify_coin, "primary coin for coin-dependent suites");
    verify->add_option("--n", verify_n, "override the suite's maximum order (> 0)");
    verify->add_option("--out", verify_out, "report file");

    int conj_n = 0, conj_np = 0;
    std::string conj_out = "counterexamples.json";
    CLI::App* conj = app.add_subcommand(
        "conjecture6", "sweep the two-parameter chain-rule candidate and list counterexamples");
    conj->add_option("--n", conj_n, "first path length")->required();
    conj->add_option("--nprime", conj_np, "second path length")->required();
    conj->add_option("--out", conj_out, "report file");

    std::string sig_f, sig_coin = "hadamard", sig_out = "sigma.json";
    int sig_n = 0, sig_np = 0;
    CLI::App* sig =
        app.add_subcommand("sigma", "operator-weighted path sum of a registry function");
    sig->add_option("--f", sig_f, "registry function name")->required();
    sig->add_option("--coin", sig_coin,
                    "hadamard | identity | seed:N | a_re,a_im,b_re,b_im,delta_re,delta_im");
    sig->add_option("--n", sig_n, "first path length")->required();
    sig->add_option("--nprime", sig_np, "second path length")->required();
    sig->add_option("--out", sig_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        validate_thread_cap();
        if (*dist) return run_dist(dist_coin, dist_n, dist_init, dist_format, dist_out);
        if (*verify) return run_verify(verify_suite, verify_coin, verify_n, verify_out);
        if (*conj) return run_conjecture6(conj_n, conj_np, conj_out);
        if (*sig) return run_sigma(sig_f, sig_coin, sig_n, sig_np, sig_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
