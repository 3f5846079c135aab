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

// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "skewpbw/algebra.hpp"
#include "skewpbw/catalog.hpp"
#include "skewpbw/consistency.hpp"
#include "skewpbw/io.hpp"
#include "skewpbw/reduction.hpp"
#include "skewpbw/universal.hpp"
#include "support.hpp"

using namespace skewpbw;
using namespace skewpbw::testing;

namespace {

const std::string kData = SKEWPBW_TEST_DATA;
const std::string kCli = SKEWPBW_CLI;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Word splice(const Word& a, const std::vector<Letter>& mid, const Word& b) {
    Word w = a;
    w.insert(w.end(), mid.begin(), mid.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

// 1 -------------------------------------------------------------------------

Outcome reduction_soundness() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t words = 0;
    for (const auto& P : catalog_all()) {
        Reducer red(P);
        Rng rng(101, "acceptance/reduction/" + P->label());
        for (int k = 0; k < 1000; ++k, ++words) {
            const Word w = random_word(*P, 8, rng);
            ReductionTrace trace;
            const FreeElem out = red.p(w, &trace);
            for (const auto& [word, m] : out.terms())
                if (!is_standard(word)) o.fail(P->label() + ": nonstandard output for " + to_string(w));
            if (!trace.monotone) o.fail(P->label() + ": non-monotone step under " + to_string(w));
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 60.0) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(words) + " words, " + std::to_string(secs) + " s";
    return o;
}

// 2 -------------------------------------------------------------------------

Outcome reduction_identities() {
    Outcome o;
    const auto presentations = catalog_all();
    const int per = (500 + static_cast<int>(presentations.size()) - 1) / static_cast<int>(presentations.size());
    std::size_t n25 = 0, n26 = 0, n27 = 0, n28 = 0;
    for (const auto& P : presentations) {
        const bool consistent = check_all(P, CheckOptions{16, 0, 2}).overall;
        if (!consistent) o.fail(P->label() + " fails check_all");
        Reducer red(P);
        const Algebra alg(P);
        const RingPtr& R = P->ring();
        Rng rng(202, "acceptance/identities/" + P->label());
        for (int k = 0; k < per; ++k) {
            const Word a = random_word(*P, 3, rng), b = random_word(*P, 3, rng);
            const CoeffElem r = random_elem(R, 1, rng), s = random_elem(R, 1, rng);
            auto h = [&](const std::vector<Letter>& mid) { return red.h(splice(a, mid, b)); };
            const std::string where = P->label() + " a=" + to_string(a) + " b=" + to_string(b);
            if (!h({Letter(CoeffElem(R))}).is_zero()) o.fail("(i) " + where);
            if (h({Letter(-r)}) != -h({Letter(r)})) o.fail("(ii) " + where);
            if (h({Letter(r + s)}) != h({Letter(r)}) + h({Letter(s)})) o.fail("(iii) " + where);
            if (h({Letter(CoeffElem(R, 1L))}) != h({})) o.fail("(iv) " + where);
            if (h({Letter(r * s)}) != h({Letter(r), Letter(s)})) o.fail("(v) " + where);
            ++n25;

            const FreeElem y = random_free(*P, 3, 2, rng), z = random_free(*P, 3, 2, rng);
            FreeElem std_part;
            for (int m = 0; m < 2; ++m) std_part.add_term(random_standard_word(*P, 3, rng), rng.uniform(-2, 2));
            if (red.h(free_concat(free_concat(y, std_part), z)) !=
                red.h(free_concat(free_concat(y, section_t(collapse_q(std_part, P))), z)))
                o.fail("h(y a z) on " + P->label());
            ++n26;

            if (!consistent) continue;
            const FreeElem x = random_free(*P, 3, 2, rng), mid = random_free(*P, 3, 2, rng);
            if (red.h(free_concat(free_concat(x, red.p(mid)), z)) != red.h(free_concat(free_concat(x, mid), z)))
                o.fail("h(x p(y) z) on " + P->label());
            ++n27;
            if (red.h(free_concat(x, mid)) != alg.star(red.h(x), red.h(mid))) o.fail("h(ab) on " + P->label());
            ++n28;
        }
    }
    if (std::min({n25, n26, n27, n28}) < 500) o.fail("too few instances");
    if (o.pass)
        o.detail = std::to_string(n25) + " instances of each zero/sign/sum/one/product identity, " +
                   std::to_string(n26) + " of h(yaz), " + std::to_string(n27) + " of h(xp(y)z), " +
                   std::to_string(n28) + " of h(ab)";
    return o;
}

// 3 -------------------------------------------------------------------------

Outcome ring_laws() {
    Outcome o;
    std::size_t triples = 0;
    for (const auto& P : catalog_all()) {
        const Algebra alg(P);
        Rng rng(303, "acceptance/ring-laws/" + P->label());
        for (int k = 0; k < 200; ++k, ++triples) {
            const Poly f = random_poly(P, 3, 3, 1, rng), g = random_poly(P, 3, 3, 1, rng),
                       h = random_poly(P, 3, 3, 1, rng);
            if (alg.star(alg.star(f, g), h) != alg.star(f, alg.star(g, h))) o.fail("associativity on " + P->label());
            if (alg.star(f, g + h) != alg.star(f, g) + alg.star(f, h)) o.fail("left distributivity on " + P->label());
            if (alg.star(f + g, h) != alg.star(f, h) + alg.star(g, h)) o.fail("right distributivity on " + P->label());
            if (alg.star(alg.one(), f) != f || alg.star(f, alg.one()) != f) o.fail("identity on " + P->label());
        }
    }
    if (o.pass) o.detail = std::to_string(triples) + " triples";
    return o;
}

// 4 -------------------------------------------------------------------------

Outcome decomposition_contracts() {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& P : catalog_all()) {
        const Algebra alg(P);
        const RingPtr& R = P->ring();
        Rng rng(404, "acceptance/decompose/" + P->label());
        for (int k = 0; k < 200; ++k, ++pairs) {
            const Monomial alpha = random_monomial(P->n(), static_cast<std::uint32_t>(rng.uniform(0, 4)), rng);
            const Monomial beta = random_monomial(P->n(), static_cast<std::uint32_t>(rng.uniform(0, 4)), rng);
            const CoeffElem r = random_nonzero_elem(R, 2, rng);
            const std::string where = P->label() + " alpha=" + mono_string(alpha);

            const auto split = alg.decompose_var_coeff(alpha, r);
            if (!split.tail.is_zero() && *split.tail.deg() >= total_degree(alpha)) o.fail("tail degree, " + where);
            CoeffElem composed = r;
            for (std::size_t i = P->n(); i-- > 0;)
                for (std::uint32_t e = 0; e < alpha[i]; ++e) composed = P->sigma(i).apply(composed);
            if (split.r_alpha != composed) o.fail("r_alpha differs from composed sigmas, " + where);
            if (alg.star(alg.monomial(alpha), alg.constant(r)) !=
                Poly::term(P, alpha, split.r_alpha) + split.tail)
                o.fail("x^alpha r reassembly, " + where);

            const auto prod = alg.monomial_product(alpha, beta);
            const Monomial sum = mono_add(alpha, beta);
            if (!prod.tail.is_zero() && *prod.tail.deg() >= total_degree(sum)) o.fail("product tail, " + where);
            if (!prod.c.is_unit()) o.fail("c_alpha_beta not a unit, " + where);
            if (alg.star(alg.monomial(alpha), alg.monomial(beta)) != Poly::term(P, sum, prod.c) + prod.tail)
                o.fail("x^alpha x^beta reassembly, " + where);
        }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " (alpha, r) and (alpha, beta) draws";
    return o;
}

// 5 -------------------------------------------------------------------------

Outcome oracle_equivalence() {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& P : catalog_all()) {
        const Algebra alg(P);
        Rng rng(505, "acceptance/oracle/" + P->label());
        for (int k = 0; k < 300; ++k, ++pairs) {
            const Poly f = random_poly(P, 4, 2, 1, rng), g = random_poly(P, 4, 2, 1, rng);
            if (alg.star(f, g) != alg.star_oracle(f, g))
                o.fail(P->label() + ": " + f.to_string() + " times " + g.to_string());
        }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " pairs";
    return o;
}

// 6 -------------------------------------------------------------------------

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

/// Triples where the Jacobiator is nonzero, and triples failing the overlap check.
std::pair<std::set<Triple>, std::set<Triple>> jacobi_sides(const StructureConstants& sc) {
    const auto P = std::make_shared<const Presentation>(lie_presentation(sc));
    std::set<Triple> jac, overlap;
    for (std::size_t i = 0; i < sc.n(); ++i)
        for (std::size_t j = i + 1; j < sc.n(); ++j)
            for (std::size_t k = j + 1; k < sc.n(); ++k) {
                const auto v = jacobiator(sc, i, j, k);
                if (std::any_of(v.begin(), v.end(), [](const auto& e) { return !e.is_zero(); })) jac.insert({i, j, k});
                if (!check_condition3(P, i, j, k).pass) overlap.insert({i, j, k});
            }
    for (const auto& t : check_all(P, CheckOptions{8, 0, 2}).failing_triples())
        if (!overlap.count(t)) overlap.insert(t);
    return {jac, overlap};
}

std::string triples_text(const std::set<Triple>& s) {
    std::string out;
    for (const auto& [i, j, k] : s)
        out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
    return out.empty() ? "none" : out;
}

Outcome pbw_jacobi() {
    Outcome o;
    const RingPtr Q = CoeffRing::rationals();
    for (const auto& [name, sc] : {std::pair{"sl2", sl2_constants(Q)}, std::pair{"heisenberg", heisenberg_constants(Q)},
                                   std::pair{"so3", so3_constants(Q)}}) {
        const auto [jac, overlap] = jacobi_sides(sc);
        if (!jac.empty() || !overlap.empty()) o.fail(std::string(name) + " fails: " + triples_text(overlap));
    }

    // Perturb one bracket of a 4-dimensional algebra (sl2 plus a central
    // element) and keep drawing until five non-Jacobi brackets are seen.
    Rng rng(606, "acceptance/jacobi");
    int broken = 0, drawn = 0;
    std::string identified;
    while (broken < 5 && drawn < 200) {
        ++drawn;
        StructureConstants sc(Q, 4);
        sc.set_bracket(0, 1, std::vector<long>{0, 0, 1, 0});
        sc.set_bracket(2, 0, std::vector<long>{2, 0, 0, 0});
        sc.set_bracket(2, 1, std::vector<long>{0, -2, 0, 0});
        const auto a = static_cast<std::size_t>(rng.uniform(0, 3));
        auto b = static_cast<std::size_t>(rng.uniform(0, 2));
        if (b >= a) ++b;
        std::vector<long> v = {0, 0, 0, 0};
        for (auto& e : v) e = rng.uniform(-2, 2);
        sc.set_bracket(a, b, v);
        const auto [jac, overlap] = jacobi_sides(sc);
        if (jac != overlap)
            o.fail("perturbation " + std::to_string(drawn) + ": Jacobiator flags " + triples_text(jac) +
                   ", overlap check flags " + triples_text(overlap));
        if (!jac.empty()) {
            ++broken;
            identified += (identified.empty() ? "" : " ") + triples_text(overlap);
        }
    }
    if (broken < 5) o.fail("only " + std::to_string(broken) + " non-Jacobi perturbations found");
    if (o.pass)
        o.detail = "sl2, heisenberg, so3 pass; " + std::to_string(broken) + " of " + std::to_string(drawn) +
                   " perturbations break Jacobi, failing triples " + identified;
    return o;
}

// 7 -------------------------------------------------------------------------

Outcome closed_forms() {
    Outcome o;
    const auto W = catalog::resolve("weyl1");
    const Algebra weyl(W);
    for (std::uint32_t m = 1; m <= 6; ++m) {
        const Poly x2m = weyl.pow(weyl.var(1), m);
        Poly expected = Poly::term(W, Monomial{1, m}, W->one());
        expected += Poly::term(W, Monomial{0, m - 1}, CoeffElem(W->ring(), static_cast<long>(m)));
        if (weyl.star_oracle(x2m, weyl.var(0)) != expected || weyl.star(x2m, weyl.var(0)) != expected)
            o.fail("weyl m=" + std::to_string(m));
    }
    const auto QP = catalog::resolve("quantum_plane");
    const Algebra qp(QP);
    const CoeffElem q = CoeffElem::generator(QP->ring(), "q");
    for (std::uint32_t a = 1; a <= 4; ++a)
        for (std::uint32_t b = 1; b <= 4; ++b) {
            const Poly lhs_a = qp.pow(qp.var(1), a), lhs_b = qp.pow(qp.var(0), b);
            const Poly expected = Poly::term(QP, Monomial{b, a}, q.pow(static_cast<std::int64_t>(a * b)));
            if (qp.star_oracle(lhs_a, lhs_b) != expected || qp.star(lhs_a, lhs_b) != expected)
                o.fail("quantum plane a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    if (o.pass) o.detail = "weyl m=1..6, quantum plane a,b=1..4";
    return o;
}

// 8 -------------------------------------------------------------------------

Outcome universal_property() {
    Outcome o;
    const HomSpec spec = load_homspec(kData + "/heisenberg_to_weyl.json");
    const HomReport rep = check_hom_conditions(spec, 32, 0);
    if (!rep.overall) o.fail("heisenberg to weyl spec fails its conditions");
    const Algebra A(spec.source);
    const Algebra& B = *spec.target_algebra;
    Rng rng(808, "acceptance/universal");
    for (int k = 0; k < 200; ++k) {
        const Poly f = random_poly(spec.source, 3, 3, 1, rng), g = random_poly(spec.source, 3, 3, 1, rng);
        const Poly ff = extend_hom(spec, f), fg = extend_hom(spec, g);
        if (extend_hom(spec, f + g) != ff + fg) o.fail("not additive on " + f.to_string() + ", " + g.to_string());
        if (extend_hom(spec, A.star(f, g)) != B.star(ff, fg))
            o.fail("not multiplicative on " + f.to_string() + ", " + g.to_string());
    }
    std::size_t inverses = 0;
    for (const auto& P : catalog_all()) {
        const HomSpec id = HomSpec::identity(P);
        const auto inv = verify_mutual_inverse(id, id, 16, 0);
        if (!inv.pass) o.fail("identity round trip on " + P->label() + ": " + inv.witness);
        ++inverses;
    }
    if (o.pass)
        o.detail = "conditions pass, 200 pairs additive and multiplicative, identity round trip on " +
                   std::to_string(inverses) + " presentations";
    return o;
}

// 9 -------------------------------------------------------------------------

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    return out + "'";
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

Outcome cli_contract() {
    Outcome o;
    auto cli = [](const std::string& args) { return run_command(quote(kCli) + " " + args); };
    auto expect = [&](const std::string& args, int code) {
        const auto r = cli(args);
        if (r.exit_code != code)
            o.fail("'" + args + "' exited " + std::to_string(r.exit_code) + ", expected " + std::to_string(code));
        return r;
    };
    expect("check catalog:weyl1", 0);
    expect("nf catalog:weyl1 'x1 x2'", 1);
    expect("frobnicate", 1);
    expect("nf catalog:nothing 'x1'", 1);
    expect("mul catalog:quantum_plane 'x2^2' 'x1' --verify", 0);
    expect("mul " + quote(kData + "/broken_jacobi.json") + " 'x3*x2' 'x1' --verify", 3);
    expect("hom --check-only " + quote(kData + "/heisenberg_to_weyl.json"), 0);
    expect("hom --check-only " + quote(kData + "/bad_hom.json"), 2);

    const auto jac = expect("check " + quote(kData + "/broken_jacobi.json"), 2);
    if (jac.out.find("(1,2,3)") == std::string::npos) o.fail("broken Jacobi report does not name (1,2,3)");
    const auto leib = expect("check " + quote(kData + "/broken_leibniz.json"), 2);
    if (leib.out.find("witness") == std::string::npos) o.fail("broken Leibniz report has no witness");

    const auto a = cli("check catalog:quantum_matrices2 --json --seed 9 --samples 10");
    const auto b = cli("check catalog:quantum_matrices2 --json --seed 9 --samples 10");
    if (a.out != b.out || a.out.empty()) o.fail("check --seed is not deterministic");

    for (const char* expr : {"(x2 + 2)^3*x1", "x2^2*x1 - 3/4*x1 + 2"}) {
        const auto first = cli(std::string("nf catalog:weyl1 ") + quote(expr));
        const auto again = cli("nf catalog:weyl1 " + quote(trim(first.out)));
        if (first.exit_code != 0 || again.out != first.out) o.fail(std::string("print/parse round trip on ") + expr);
    }
    if (o.pass) o.detail = "exit codes 0/1/2/3, seed determinism, round trips, witnesses";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"reduction soundness", reduction_soundness},
        {"reduction identities", reduction_identities},
        {"ring laws", ring_laws},
        {"decomposition contracts", decomposition_contracts},
        {"oracle equivalence", oracle_equivalence},
        {"PBW/Jacobi equivalence", pbw_jacobi},
        {"closed-form identities", closed_forms},
        {"universal property", universal_property},
        {"CLI contract", cli_contract},
    };
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::printf("%s criterion %zu: %s (%s) [%.1f s]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
