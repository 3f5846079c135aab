/*
   Copyright 2026 The skewpbw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "skewpbw/catalog.hpp"
#include "skewpbw/consistency.hpp"
#include "skewpbw/expr.hpp"
#include "skewpbw/io.hpp"
#include "skewpbw/reduction.hpp"
#include "skewpbw/universal.hpp"

namespace {

using namespace skewpbw;

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kFail = 2;
constexpr int kMismatch = 3;
constexpr std::size_t kVerifyWordCap = 24;

constexpr const char* kFooter = R"(Presentations: a JSON file or catalog:NAME (e.g. catalog:weyl1,
catalog:quantum_plane, catalog:weyl?n=2,p=7).

Expressions:
  sum     := signed (('+' | '-') signed)*
  signed  := '-' signed | product
  product := power ('*' power)*
  power   := atom ('^' ['-'] INT)?
  atom    := INT ['/' INT] | IDENT | '(' sum ')'
'^' binds tighter than '*', '*' tighter than '+'; unary minus binds looser
than '*'. Products are noncommutative and need an explicit '*'. Identifiers
are coefficient generators, variable names, or x1..xn. Negative exponents
apply only to units of the coefficient ring.

mul --verify reduces the literal word product of the two expressions as
written and compares it with the normal-form product; they agree on every
consistent presentation.

Exit codes: 0 pass, 2 check failed, 1 usage or input error,
3 product mismatch under --verify.)";

int run_check(const std::string& ref, int samples, std::uint64_t seed, bool json) {
    const auto p = load_presentation(ref);
    CheckOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    const auto report = check_all(p, opts);
    if (json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report.to_text();
    return report.overall ? kPass : kFail;
}

int run_nf(const std::string& ref, const std::string& expr) {
    const Algebra alg(load_presentation(ref));
    std::cout << eval_text(expr, alg).to_string() << "\n";
    return kPass;
}

int run_mul(const std::string& ref, const std::string& e1, const std::string& e2, bool verify) {
    const auto p = load_presentation(ref);
    const Algebra alg(p);
    const Expr x1 = parse(e1, *p), x2 = parse(e2, *p);
    const Poly prod = alg.star(eval(x1, alg), eval(x2, alg));
    std::cout << prod.to_string() << "\n";
    if (!verify) return kPass;
    // reduce the literal word product, with no intermediate normal forms
    Reducer red(p, ReduceOptions{true, kVerifyWordCap});
    const Poly oracle = red.h(free_concat(to_free(x1, *p), to_free(x2, *p)));
    if (oracle == prod) return kPass;
    std::cerr << "verify: word-level reduction of the literal product differs\n  oracle: " << oracle.to_string()
              << "\n";
    return kMismatch;
}

int run_hom(const std::string& path, const std::string& expr, bool check_only, int samples, std::uint64_t seed,
            bool json) {
    const HomSpec spec = load_homspec(path);
    const HomReport report = check_hom_conditions(spec, samples, seed);
    if (check_only) {
        if (json)
            std::cout << hom_report_to_json(report).dump(2) << "\n";
        else
            std::cout << report.to_text();
        return report.overall ? kPass : kFail;
    }
    if (expr.empty()) {
        std::cerr << "error: hom needs an expression unless --check-only is given\n";
        return kUsage;
    }
    if (!report.overall) {
        std::cerr << "hom spec fails its conditions; no extension exists for this data\n" << report.to_text();
        return kFail;
    }
    const Algebra A(spec.source);
    std::cout << extend_hom(spec, eval_text(expr, A)).to_string() << "\n";
    return kPass;
}

int run_catalog_list() {
    for (const auto& e : catalog::entries()) {
        std::cout << e.name;
        if (!e.params.empty()) {
            std::cout << " [";
            for (std::size_t k = 0; k < e.params.size(); ++k) std::cout << (k ? ", " : "") << e.params[k];
            std::cout << "]";
        }
        std::cout << ": " << e.description << "\n";
    }
    return kPass;
}

int run_catalog_show(const std::string& name, const std::vector<std::string>& params) {
    catalog::Params map;
    for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::cerr << "error: --params expects key=value, got '" << kv << "'\n";
            return kUsage;
        }
        map[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    const auto p = params.empty() ? catalog::resolve(name) : catalog::get(name, map);
    std::cout << presentation_to_json(*p).dump(2) << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew PBW extensions: consistency checks, normal forms, products and homomorphisms"};
    app.footer(kFooter);
    app.require_subcommand(1);

    int samples = 64;
    std::uint64_t seed = 0;
    bool json = false;
    std::string ref, expr, expr2, path, name;
    bool verify = false, check_only = false;
    std::vector<std::string> params;

    auto* check = app.add_subcommand("check", "Check the existence conditions of a presentation");
    check->add_option("presentation", ref, "JSON file or catalog:NAME")->required();
    check->add_option("--samples", samples, "Random elements per sampled check")->check(CLI::NonNegativeNumber);
    check->add_option("--seed", seed, "Seed for every sampled check");
    check->add_flag("--json", json, "Machine-readable report");

    auto* nf = app.add_subcommand("nf", "Print the normal form of an expression");
    nf->add_option("presentation", ref, "JSON file or catalog:NAME")->required();
    nf->add_option("expr", expr, "Expression")->required();

    auto* mul = app.add_subcommand("mul", "Multiply two expressions");
    mul->add_option("presentation", ref, "JSON file or catalog:NAME")->required();
    mul->add_option("expr1", expr, "Left factor")->required();
    mul->add_option("expr2", expr2, "Right factor")->required();
    mul->add_flag("--verify", verify, "Cross-check against the word-level reduction of the literal product");

    auto* hom = app.add_subcommand("hom", "Apply the homomorphism extending a hom spec");
    hom->add_option("homspec", path, "Hom spec JSON file")->required();
    hom->add_option("expr", expr, "Expression over the source");
    hom->add_flag("--check-only", check_only, "Only report the compatibility conditions");
    hom->add_option("--samples", samples, "Random elements per sampled check")->check(CLI::NonNegativeNumber);
    hom->add_option("--seed", seed, "Seed for every sampled check");
    hom->add_flag("--json", json, "Machine-readable report (with --check-only)");

    auto* cat = app.add_subcommand("catalog", "Built-in presentations");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "List entries");
    auto* show = cat->add_subcommand("show", "Print an entry as presentation JSON");
    show->add_option("name", name, "Entry name")->required();
    show->add_option("--params", params, "Parameters as key=value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (check->parsed()) return run_check(ref, samples, seed, json);
        if (nf->parsed()) return run_nf(ref, expr);
        if (mul->parsed()) return run_mul(ref, expr, expr2, verify);
        if (hom->parsed()) return run_hom(path, expr, check_only, samples, seed, json);
        if (cat->got_subcommand("list")) return run_catalog_list();
        if (show->parsed()) return run_catalog_show(name, params);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
