# Copyright 2026 The skewpbw Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pathlib

import pytest

import skewpbw

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def test_catalog_lists_the_standard_families():
    names = skewpbw.catalog_list()
    for name in ["weyl", "u_sl2", "u_heisenberg", "u_so3", "quantum_plane", "quantum_matrices2"]:
        assert name in names
    p = skewpbw.catalog_get("weyl", {"n": "2"})
    assert p.n == 4


def test_normal_forms_and_products():
    weyl = skewpbw.Algebra("catalog:weyl1")
    assert weyl.nf("x2*x1") == "x1*x2 + 1"
    qp = skewpbw.Algebra("catalog:quantum_plane")
    assert qp.mul("x2^3", "x1^2") == "q^6*x1^2*x2^3"
    f, g = qp.parse("x2 + q*x1"), qp.parse("x1^2")
    assert qp.star(f, g) == qp.star_oracle(f, g)
    assert str(qp.pow(qp.parse("x2"), 2)) == "x2^2"


def test_parse_errors_raise():
    weyl = skewpbw.Algebra("catalog:weyl1")
    with pytest.raises(skewpbw.ParseError, match="1:4"):
        weyl.nf("x1 x2")
    with pytest.raises(ValueError):
        skewpbw.load_presentation("catalog:no_such_entry")


def test_check_reports():
    assert skewpbw.check("catalog:u_sl2", samples=8)["overall"] == "pass"
    broken = skewpbw.check(str(DATA / "broken_jacobi.json"))
    assert broken["overall"] == "fail"
    failure = broken["condition3"]["failures"][0]
    assert (failure["i"], failure["j"], failure["k"]) == (1, 2, 3)


def test_presentation_json_round_trip():
    p = skewpbw.load_presentation("catalog:jackson")
    again = skewpbw.presentation_from_json(p.to_json())
    assert again.id == p.id


def test_literal_reduction_detects_an_ambiguous_overlap():
    broken = skewpbw.Algebra(str(DATA / "broken_jacobi.json"))
    assert str(broken.reduce_literal("x3*x2*x1")) != broken.mul("x3*x2", "x1")
    sl2 = skewpbw.Algebra("catalog:u_sl2")
    assert str(sl2.reduce_literal("x3*x2*x1")) == sl2.mul("x3*x2", "x1")


def test_homomorphisms():
    spec = skewpbw.load_homspec(str(DATA / "heisenberg_to_weyl.json"))
    assert skewpbw.check_hom(spec, samples=8)["overall"] == "pass"
    assert skewpbw.extend_hom(spec, "q*p") == "x1*x2"
    bad = skewpbw.load_homspec(str(DATA / "bad_hom.json"))
    assert skewpbw.check_hom(bad, samples=8)["overall"] == "fail"
    ident = skewpbw.HomSpec.identity("catalog:u_so3")
    ok, witness = skewpbw.verify_mutual_inverse(ident, ident)
    assert ok and witness == ""
