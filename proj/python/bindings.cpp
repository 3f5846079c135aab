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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewpbw/algebra.hpp"
#include "skewpbw/catalog.hpp"
#include "skewpbw/consistency.hpp"
#include "skewpbw/expr.hpp"
#include "skewpbw/io.hpp"
#include "skewpbw/reduction.hpp"
#include "skewpbw/universal.hpp"

namespace py = pybind11;
using namespace skewpbw;

namespace {

/// pybind11 holders cannot be shared_ptr<const T>; the object is never mutated.
using PyPresentation = std::shared_ptr<Presentation>;

PyPresentation expose(const PresentationPtr& p) { return std::const_pointer_cast<Presentation>(p); }

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& obj) {
    return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

/// A presentation either given directly or as a reference string.
PresentationPtr presentation_arg(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return load_presentation(obj.cast<std::string>());
    if (py::isinstance<py::dict>(obj)) return presentation_from_json(from_python(obj));
    return obj.cast<PyPresentation>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Skew PBW extensions: normal forms, products, consistency checks and homomorphisms";

    py::register_exception<Error>(m, "SkewPBWError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<Presentation, PyPresentation>(m, "Presentation")
        .def_property_readonly("n", &Presentation::n)
        .def_property_readonly("var_names", &Presentation::var_names)
        .def_property_readonly("label", &Presentation::label)
        .def_property_readonly("id", &Presentation::id)
        .def_property_readonly("ring", [](const Presentation& p) { return p.ring()->to_string(); })
        .def("to_json", [](const Presentation& p) { return to_python(presentation_to_json(p)); })
        .def("__repr__", [](const Presentation& p) {
            return "<Presentation " + (p.label().empty() ? std::string("(unnamed)") : p.label()) + " over " +
                   p.ring()->to_string() + ", n=" + std::to_string(p.n()) + ">";
        });

    m.def(
        "load_presentation", [](const std::string& ref) { return expose(load_presentation(ref)); }, py::arg("ref"),
          "Load 'catalog:NAME' or a JSON file path.");
    m.def(
        "presentation_from_json", [](const py::object& obj) { return expose(presentation_from_json(from_python(obj))); },
        py::arg("document"), "Build a presentation from its JSON document (a dict).");
    m.def("catalog_list", &catalog::list);
    m.def(
        "catalog_get",
        [](const std::string& name, const catalog::Params& params) { return expose(catalog::get(name, params)); },
        py::arg("name"), py::arg("params") = catalog::Params{});

    py::class_<Poly>(m, "Poly")
        .def("__str__", &Poly::to_string)
        .def("__repr__", [](const Poly& f) { return "<Poly " + f.to_string() + ">"; })
        .def("is_zero", &Poly::is_zero)
        .def("deg", &Poly::deg)
        .def("terms",
             [](const Poly& f) {
                 std::vector<std::pair<Monomial, std::string>> out;
                 for (const auto& [mono, c] : f.terms()) out.emplace_back(mono, c.to_string());
                 return out;
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__hash__", [](const Poly& f) { return std::hash<std::string>{}(f.to_string()); });

    py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
        .def(py::init([](const py::object& p) { return std::make_shared<Algebra>(presentation_arg(p)); }),
             py::arg("presentation"))
        .def_property_readonly("presentation", [](const Algebra& a) { return expose(a.presentation()); })
        .def(
            "parse", [](const Algebra& a, const std::string& src) { return eval_text(src, a); }, py::arg("expr"))
        .def(
            "nf", [](const Algebra& a, const std::string& src) { return eval_text(src, a).to_string(); },
            py::arg("expr"), "Normal form of an expression, as text.")
        .def("star", &Algebra::star)
        .def("star_oracle", &Algebra::star_oracle)
        .def("pow", &Algebra::pow)
        .def(
            "mul",
            [](const Algebra& a, const std::string& e1, const std::string& e2) {
                return a.star(eval_text(e1, a), eval_text(e2, a)).to_string();
            },
            py::arg("expr1"), py::arg("expr2"))
        .def(
            "reduce_literal",
            [](const Algebra& a, const std::string& src) {
                const auto& p = a.presentation();
                return normalize_h(to_free(parse(src, *p), *p), p);
            },
            py::arg("expr"), "Word-level reduction of the expression as written.");

    m.def(
        "check",
        [](const py::object& p, int samples, std::uint64_t seed) {
            return to_python(report_to_json(check_all(presentation_arg(p), CheckOptions{samples, seed, 2})));
        },
        py::arg("presentation"), py::arg("samples") = 64, py::arg("seed") = 0,
        "Run the existence checks; returns the JSON report as a dict.");

    py::class_<HomSpec>(m, "HomSpec")
        .def_property_readonly("source", [](const HomSpec& s) { return expose(s.source); })
        .def_property_readonly("target", [](const HomSpec& s) { return expose(s.target); })
        .def_static("identity", [](const py::object& p) { return HomSpec::identity(presentation_arg(p)); });

    m.def("load_homspec", &load_homspec, py::arg("path"));
    m.def(
        "homspec_from_json",
        [](const py::object& obj, const std::string& base_dir) { return homspec_from_json(from_python(obj), base_dir); },
        py::arg("document"), py::arg("base_dir") = ".");
    m.def(
        "check_hom",
        [](const HomSpec& s, int samples, std::uint64_t seed) {
            return to_python(hom_report_to_json(check_hom_conditions(s, samples, seed)));
        },
        py::arg("spec"), py::arg("samples") = 64, py::arg("seed") = 0);
    m.def(
        "extend_hom",
        [](const HomSpec& s, const std::string& src) {
            return extend_hom(s, eval_text(src, Algebra(s.source))).to_string();
        },
        py::arg("spec"), py::arg("expr"), "Image of a source expression, as text over the target.");
    m.def(
        "verify_mutual_inverse",
        [](const HomSpec& forward, const HomSpec& back, int samples, std::uint64_t seed) {
            const auto r = verify_mutual_inverse(forward, back, samples, seed);
            return py::make_tuple(r.pass, r.witness);
        },
        py::arg("forward"), py::arg("back"), py::arg("samples") = 32, py::arg("seed") = 0);
}
