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
#include "skewpbw/io.hpp"
#include "support.hpp"

using namespace skewpbw;
using namespace skewpbw::testing;

namespace {

const std::string kData = SKEWPBW_TEST_DATA;

PresentationPtr from_text(const char* text) { return presentation_from_json(Json::parse(text)); }

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("rings") {
        CHECK(ring_from_json(Json::parse(R"({"kind": "rationals"})"))->to_string() == "QQ");
        CHECK(ring_from_json(Json::parse(R"({"kind": "prime_field", "p": 7})"))->to_string() == "GF(7)");
        CHECK(ring_from_json(Json::parse(R"({"kind": "poly", "vars": ["s", "t"]})"))->to_string() == "QQ[s,t]");
        CHECK(ring_from_json(Json::parse(
                                 R"({"kind": "poly", "vars": ["t"], "base": {"kind": "laurent", "vars": ["q"]}})"))
                  ->to_string() == "QQ[q^+-1][t]");
        CHECK_THROWS_AS(ring_from_json(Json::parse(R"({"kind": "ring"})")), FormatError);
        CHECK_THROWS_AS(ring_from_json(Json::parse(R"({"kind": "rationals", "p": 3})")), FormatError);
        CHECK_THROWS_AS(ring_from_json(Json::parse(R"({"kind": "laurent", "vars": ["q", "r"]})")), FormatError);
        CHECK_THROWS_AS(ring_from_json(Json::parse(R"({"kind": "prime_field", "p": "7"})")), FormatError);
        CHECK_THROWS_AS(ring_from_json(Json::parse(R"({"kind": "prime_field", "p": 8})")), Error);
        CHECK_THROWS_AS(ring_from_json(Json::parse(R"({"kind": "rationals", "extra": 1})")), FormatError);
    }

    TEST_CASE("catalog presentations round trip through JSON") {
        for (const auto& P : catalog_all()) {
            const Json j = presentation_to_json(*P);
            const auto back = presentation_from_json(Json::parse(j.dump()));
            INFO(j.dump(2));
            CHECK(back->id() == P->id());
            CHECK(back->label() == P->label());
        }
    }

    TEST_CASE("defaults and relation parsing") {
        const auto P = from_text(R"({
            "ring": {"kind": "laurent", "vars": ["q"]},
            "vars": ["x", "y", "z"],
            "relations": [{"i": 1, "j": 2, "c": "q"}, {"i": 1, "j": 3, "d": 2, "a": [0, "q^-1", 0]}]
        })");
        const auto q = CoeffElem::generator(P->ring(), "q");
        CHECK(P->relation(0, 1).c == q);
        CHECK(P->relation(0, 2).c.is_one());
        CHECK(P->relation(0, 2).d == CoeffElem(P->ring(), 2L));
        CHECK(P->relation(0, 2).a[1] == q.unit_inverse());
        CHECK(P->relation(1, 2).c.is_one());
        CHECK(P->sigma(2).is_identity());
        CHECK(P->delta(1).is_zero());
    }

    TEST_CASE("schema errors") {
        CHECK_THROWS_AS(from_text(R"({"vars": ["x"], "sigmas": []})"), FormatError);
        CHECK_THROWS_AS(from_text(R"({"ring": {"kind": "rationals"}})"), FormatError);
        CHECK_THROWS_AS(from_text(R"({"vars": ["x", "y"], "relations": [{"i": 2, "j": 1}]})"), FormatError);
        CHECK_THROWS_AS(from_text(R"({"vars": ["x", "y"], "relations": [{"i": 1, "j": 2, "e": 1}]})"), FormatError);
        CHECK_THROWS_AS(from_text(R"({"vars": ["x", "y"], "relations": [{"i": 1, "j": 2}, {"i": 1, "j": 2}]})"),
                        FormatError);
        CHECK_THROWS_AS(from_text(R"({"vars": ["x", "y"], "relations": [{"i": 1, "j": 2, "a": [1]}]})"), FormatError);
        CHECK_THROWS_AS(from_text(R"({"vars": ["x"], "sigma": [{"t": "t"}]})"), FormatError);
        CHECK_THROWS_AS(from_text(R"({"vars": ["x", "y"], "relations": [{"i": 1, "j": 2, "c": "q"}]})"),
                        FormatError);
        CHECK_THROWS_AS(from_text(R"({"vars": ["x", "y"], "relations": [{"i": 1, "j": 2, "c": "1 +"}]})"),
                        FormatError);
        CHECK_THROWS_AS(from_text(R"({"vars": ["x"], "sigma": [{}, {}]})"), FormatError);
    }

    TEST_CASE("fixtures") {
        const auto broken = load_presentation(kData + "/broken_jacobi.json");
        const auto rep = check_all(broken);
        CHECK_FALSE(rep.overall);
        CHECK(rep.failing_triples().size() == 1);
        const auto leib = load_presentation(kData + "/broken_leibniz.json");
        CHECK_FALSE(check_all(leib).condition1_pass());
        CHECK_THROWS_AS(load_presentation(kData + "/missing.json"), FormatError);
        CHECK(load_presentation("catalog:weyl1")->n() == 2);
    }

    TEST_CASE("hom specs") {
        const HomSpec s = load_homspec(kData + "/heisenberg_to_weyl.json");
        CHECK(s.source->label() == "u_heisenberg");
        CHECK(check_hom_conditions(s, 8).overall);
        const Json inline_spec = Json::parse(R"({
            "source": {"ring": {"kind": "laurent", "vars": ["q"]}, "vars": ["x", "y"],
                       "relations": [{"i": 1, "j": 2, "c": "q"}]},
            "target": "catalog:quantum_plane",
            "phi": {"q": "q^-1"},
            "y": ["x2", "x1"]
        })");
        const HomSpec t = homspec_from_json(inline_spec);
        CHECK(check_hom_conditions(t, 8).overall);
        CHECK_THROWS_AS(homspec_from_json(Json::parse(R"({"source": "catalog:weyl1", "target": "catalog:weyl1",
                                                           "y": ["x1"]})")),
                        FormatError);
        CHECK_THROWS_AS(homspec_from_json(Json::parse(R"({"source": "catalog:weyl1", "target": "catalog:weyl1",
                                                           "y": ["x1", "x2"], "psi": {}})")),
                        FormatError);
        CHECK_THROWS_AS(homspec_from_json(Json::parse(R"({"source": "catalog:jackson", "target": "catalog:weyl1",
                                                           "y": ["x1"]})")),
                        FormatError);
    }

    TEST_CASE("report JSON") {
        const auto broken = load_presentation(kData + "/broken_jacobi.json");
        const Json j = report_to_json(check_all(broken));
        CHECK(j["overall"] == "fail");
        CHECK(j["condition3"]["failures"].size() == 1);
        CHECK(j["condition3"]["failures"][0]["i"] == 1);
        CHECK(j["condition3"]["failures"][0]["k"] == 3);
        const Json h = hom_report_to_json(check_hom_conditions(load_homspec(kData + "/heisenberg_to_weyl.json"), 4));
        CHECK(h["overall"] == "pass");
    }
}
