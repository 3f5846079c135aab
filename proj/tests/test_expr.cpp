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

#include <doctest.h>

#include "skewpbw/expr.hpp"
#include "skewpbw/reduction.hpp"
#include "support.hpp"

using namespace skewpbw;
using namespace skewpbw::testing;

TEST_SUITE("expr") {
    TEST_CASE("syntax trees") {
        const auto P = catalog::get("weyl");
        const Expr e = parse("x2*x1", *P);
        CHECK(e.kind == Expr::Kind::Mul);
        REQUIRE(e.kids.size() == 2);
        CHECK(e.kids[0].name == "x2");
        CHECK(e.kids[1].name == "x1");

        const auto qp = catalog::get("quantum_plane");
        const Expr s = parse("(1/2)*x1^3 + q*x2", *qp);
        CHECK(s.kind == Expr::Kind::Add);
        CHECK(s.kids[0].kind == Expr::Kind::Mul);
        CHECK(s.kids[0].kids[0].number == mpq_class(1, 2));
        CHECK(s.kids[0].kids[1].kind == Expr::Kind::Pow);
        CHECK(s.kids[0].kids[1].exponent == 3);

        // precedence: -a*b is -(a*b); a - b - c is (a - b) - c
        const Expr n = parse_syntax("-a*b");
        CHECK(n.kind == Expr::Kind::Neg);
        CHECK(n.kids[0].kind == Expr::Kind::Mul);
        const Expr m = parse_syntax("a - b - c");
        CHECK(m.kind == Expr::Kind::Sub);
        CHECK(m.kids[0].kind == Expr::Kind::Sub);
    }

    TEST_CASE("syntax errors carry positions") {
        const auto P = catalog::get("weyl");
        try {
            (void)parse("x1 x2", *P);
            FAIL("juxtaposition accepted");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(e.column() == 4);
            CHECK(std::string(e.what()).find("'*'") != std::string::npos);
        }
        try {
            (void)parse("x1 +\n  (x2", *P);
            FAIL("unbalanced parenthesis accepted");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
        CHECK_THROWS_AS(parse("x1 + y9", *P), ParseError);
        CHECK_THROWS_AS(parse("x3", *P), ParseError);
        CHECK_THROWS_AS(parse("x1 $ 2", *P), ParseError);
        CHECK_THROWS_AS(parse("1/0", *P), ParseError);
        CHECK_THROWS_AS(parse("x1^x2", *P), ParseError);
        CHECK_THROWS_AS(parse("x1^2^3", *P), ParseError);
        CHECK_THROWS_AS(parse("", *P), ParseError);
        CHECK_THROWS_AS(parse("x1 +", *P), ParseError);
    }

    TEST_CASE("names resolve to generators, variables and positional aliases") {
        const auto P = catalog::get("dilation_diff");
        const Algebra A(P);
        CHECK(eval_text("D*t", A) == eval_text("x2*t", A));
        CHECK(eval_text("D*t", A).to_string() == "t*x2 + 1");
        CHECK(eval_text("X*t", A).to_string() == "q*t*x1");
        CHECK(eval_text("D*X", A).to_string() == "q*x1*x2");
    }

    TEST_CASE("evaluation") {
        const Algebra W(catalog::get("weyl"));
        CHECK(eval_text("x2*x1", W).to_string() == "x1*x2 + 1");
        CHECK(eval_text("0*x1", W).is_zero());
        CHECK(eval_text("x1^0", W) == W.one());
        CHECK(eval_text("-(x1 - x1)", W).is_zero());
        const Algebra Q(catalog::get("quantum_plane"));
        CHECK(eval_text("x2^2*x1", Q).to_string() == "q^2*x1*x2^2");
        CHECK(eval_text("q^-2*x2^2*x1", Q).to_string() == "x1*x2^2");
        CHECK(eval_text("(q + 1)^2", Q).to_string() == "q^2 + 2*q + 1");
        CHECK_THROWS_AS(eval_text("x1^-1", Q), ParseError);
        CHECK_THROWS_AS(eval_text("(q + 1)^-1", Q), ParseError);
        CHECK_THROWS_AS(eval_text("x1^70000", Q), ParseError);
    }

    TEST_CASE("coefficient expressions") {
        const RingPtr R = CoeffRing::poly(CoeffRing::laurent(CoeffRing::rationals(), "q"), {"t"});
        CHECK(coeff_from_text("q*t - t*q", R).is_zero());
        CHECK(coeff_from_text("-(q - q^-1)", R).to_string() == "-q + q^-1");
        CHECK_THROWS_AS(coeff_from_text("x1", R), ParseError);
        CHECK_THROWS_AS(coeff_from_text("t^-1", R), ParseError);
        CHECK(coeff_from_text("3/6", CoeffRing::prime_field(5)) == CoeffElem(CoeffRing::prime_field(5), 3L));
    }

    TEST_CASE("print and parse round trip") {
        for (const auto& P : catalog_all()) {
            const Algebra A(P);
            Rng rng(5, "expr/roundtrip/" + P->label());
            for (int k = 0; k < 100; ++k) {
                const Poly f = random_poly(P, 3, 4, 2, rng);
                const std::string text = f.to_string();
                INFO(text);
                REQUIRE(eval_text(text, A) == f);
            }
        }
    }
    TEST_CASE("literal word expansion") {
        const auto W = catalog::resolve("weyl_ore");
        const RingPtr& R = W->ring();
        const Letter D(Var{0});
        const Letter t(CoeffElem::generator(R, "t"));
        CHECK(to_free(parse("D*t", *W), *W) == FreeElem::word(Word{D, t}));
        // variable-free subterms fold into a single scalar letter
        const FreeElem folded = to_free(parse("(t + 1)^2*D", *W), *W);
        CHECK(folded == FreeElem::word(Word{Letter(coeff_from_text("t^2 + 2*t + 1", R)), D}));
        CHECK(to_free(parse("(D - t)^2", *W), *W) ==
              FreeElem::word(Word{D, D}) - FreeElem::word(Word{D, t}) - FreeElem::word(Word{t, D}) +
                  FreeElem::word(Word{t, t}));
        CHECK(to_free(parse("0*D", *W), *W).is_zero());
        CHECK_THROWS_AS(to_free(parse("D^-1", *W), *W), ParseError);
    }

    TEST_CASE("reducing the literal expansion agrees with evaluation on consistent presentations") {
        for (const auto& P : catalog_all()) {
            const Algebra A(P);
            Rng rng(7, "expr/literal/" + P->label());
            for (int k = 0; k < 20; ++k) {
                const std::string text = "(" + random_poly(P, 2, 2, 1, rng).to_string() + ")*(" +
                                         random_poly(P, 2, 2, 1, rng).to_string() + ")";
                INFO(text);
                const Expr e = parse(text, *P);
                REQUIRE(normalize_h(to_free(e, *P), P) == eval(e, A));
            }
        }
    }
}
