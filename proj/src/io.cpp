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

#include "skewpbw/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "skewpbw/catalog.hpp"
#include "skewpbw/expr.hpp"

namespace skewpbw {

namespace {

void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw FormatError(where + ": expected an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key)) throw FormatError(where + ": unknown key '" + key + "'");
}

const Json& required(const Json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(where + ": missing key '" + key + "'");
    return *it;
}

std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw FormatError(where + ": expected a string");
    return j.get<std::string>();
}

std::vector<std::string> as_names(const Json& j, const std::string& where) {
    if (!j.is_array()) throw FormatError(where + ": expected an array of names");
    std::vector<std::string> out;
    for (const auto& e : j) out.push_back(as_string(e, where));
    return out;
}

/// Numbers are accepted as integers; everything else goes through the parser.
CoeffElem coeff_value(const Json& j, const RingPtr& ring, const std::string& where) {
    try {
        if (j.is_number_integer()) return CoeffElem(ring, static_cast<long>(j.get<std::int64_t>()));
        return coeff_from_text(as_string(j, where), ring);
    } catch (const ParseError& e) {
        throw FormatError(where + ": " + e.what());
    }
}

std::vector<CoeffElem> generator_images(const Json& j, const RingPtr& ring, bool derivation, const std::string& where) {
    std::vector<CoeffElem> images;
    for (std::size_t g = 0; g < ring->num_gens(); ++g)
        images.push_back(derivation ? CoeffElem(ring) : CoeffElem::generator(ring, g));
    if (j.is_null()) return images;
    if (!j.is_object()) throw FormatError(where + ": expected an object mapping generators to expressions");
    for (const auto& [name, value] : j.items()) {
        auto g = ring->gen_index(name);
        if (!g) throw FormatError(where + ": '" + name + "' is not a generator of " + ring->to_string());
        images[*g] = coeff_value(value, ring, where + "." + name);
    }
    return images;
}

}  // namespace

RingPtr ring_from_json(const Json& j) {
    const std::string where = "ring";
    only_keys(j, {"kind", "p", "vars", "base"}, where);
    const std::string kind = as_string(required(j, "kind", where), where + ".kind");
    auto forbid = [&](const char* key) {
        if (j.contains(key)) throw FormatError(where + ": key '" + key + "' does not apply to kind " + kind);
    };
    if (kind == "rationals") {
        forbid("p");
        forbid("vars");
        forbid("base");
        return CoeffRing::rationals();
    }
    if (kind == "prime_field") {
        forbid("vars");
        forbid("base");
        const Json& p = required(j, "p", where);
        if (!p.is_number_integer()) throw FormatError(where + ".p: expected an integer");
        return CoeffRing::prime_field(p.get<std::int64_t>());
    }
    forbid("p");
    const RingPtr base = j.contains("base") ? ring_from_json(j.at("base")) : CoeffRing::rationals();
    const auto vars = as_names(required(j, "vars", where), where + ".vars");
    if (kind == "poly") return CoeffRing::poly(base, vars);
    if (kind == "laurent") {
        if (vars.size() != 1) throw FormatError(where + ": a laurent ring has exactly one var");
        return CoeffRing::laurent(base, vars[0]);
    }
    throw FormatError(where + ": unknown kind '" + kind + "'");
}

Json ring_to_json(const CoeffRing& ring) {
    Json j;
    switch (ring.kind()) {
        case RingKind::Rationals: j["kind"] = "rationals"; break;
        case RingKind::PrimeField:
            j["kind"] = "prime_field";
            j["p"] = ring.characteristic();
            break;
        case RingKind::Laurent:
            j["kind"] = "laurent";
            j["vars"] = Json::array({ring.gen_name(0)});
            j["base"] = ring_to_json(*ring.base());
            break;
        case RingKind::Poly: {
            j["kind"] = "poly";
            const auto& base = *ring.base();
            Json vars = Json::array();
            for (std::size_t g = base.num_gens(); g < ring.num_gens(); ++g) vars.push_back(ring.gen_name(g));
            j["vars"] = vars;
            j["base"] = ring_to_json(base);
            break;
        }
    }
    return j;
}

PresentationPtr presentation_from_json(const Json& j) {
    only_keys(j, {"ring", "vars", "sigma", "delta", "relations", "label"}, "presentation");
    const RingPtr ring = j.contains("ring") ? ring_from_json(j.at("ring")) : CoeffRing::rationals();
    const auto vars = as_names(required(j, "vars", "presentation"), "vars");
    const std::size_t n = vars.size();

    auto per_var = [&](const char* key) -> std::vector<Json> {
        std::vector<Json> out(n);
        if (!j.contains(key)) return out;
        const Json& arr = j.at(key);
        if (!arr.is_array() || arr.size() != n)
            throw FormatError(std::string(key) + ": expected an array of " + std::to_string(n) + " objects");
        for (std::size_t i = 0; i < n; ++i) out[i] = arr[i];
        return out;
    };
    const auto sigma_json = per_var("sigma");
    const auto delta_json = per_var("delta");
    std::vector<RingMap> sigma;
    std::vector<SigmaDerivation> delta;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string tag = "[" + std::to_string(i + 1) + "]";
        sigma.emplace_back(ring, ring, generator_images(sigma_json[i], ring, false, "sigma" + tag));
        delta.emplace_back(sigma.back(), generator_images(delta_json[i], ring, true, "delta" + tag));
    }

    std::map<Presentation::PairKey, Relation> relations;
    if (j.contains("relations")) {
        const Json& rels = j.at("relations");
        if (!rels.is_array()) throw FormatError("relations: expected an array");
        for (const auto& r : rels) {
            only_keys(r, {"i", "j", "c", "d", "a"}, "relation");
            const Json& ji = required(r, "i", "relation");
            const Json& jj = required(r, "j", "relation");
            if (!ji.is_number_integer() || !jj.is_number_integer())
                throw FormatError("relation: i and j must be integers");
            const auto i = ji.get<std::int64_t>(), jv = jj.get<std::int64_t>();
            const std::string where = "relation (" + std::to_string(i) + "," + std::to_string(jv) + ")";
            if (!(1 <= i && i < jv && jv <= static_cast<std::int64_t>(n)))
                throw FormatError(where + ": need 1 <= i < j <= " + std::to_string(n));
            Relation rel{CoeffElem(ring, 1L), CoeffElem(ring), std::vector<CoeffElem>(n, CoeffElem(ring))};
            if (r.contains("c")) rel.c = coeff_value(r.at("c"), ring, where + ".c");
            if (r.contains("d")) rel.d = coeff_value(r.at("d"), ring, where + ".d");
            if (r.contains("a")) {
                const Json& a = r.at("a");
                if (!a.is_array() || a.size() != n)
                    throw FormatError(where + ".a: expected an array of " + std::to_string(n) + " entries");
                for (std::size_t k = 0; k < n; ++k) rel.a[k] = coeff_value(a[k], ring, where + ".a");
            }
            const Presentation::PairKey key{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jv - 1)};
            if (!relations.emplace(key, std::move(rel)).second) throw FormatError(where + ": given twice");
        }
    }
    std::string label = j.contains("label") ? as_string(j.at("label"), "label") : std::string();
    return std::make_shared<const Presentation>(ring, vars, std::move(sigma), std::move(delta), std::move(relations),
                                                std::move(label));
}

Json presentation_to_json(const Presentation& p) {
    const RingPtr& ring = p.ring();
    Json j;
    if (!p.label().empty()) j["label"] = p.label();
    j["ring"] = ring_to_json(*ring);
    j["vars"] = p.var_names();
    Json sigma = Json::array(), delta = Json::array();
    for (std::size_t i = 0; i < p.n(); ++i) {
        Json s = Json::object(), d = Json::object();
        for (std::size_t g = 0; g < ring->num_gens(); ++g) {
            const CoeffElem gen = CoeffElem::generator(ring, g);
            if (p.sigma(i).image(g) != gen) s[ring->gen_name(g)] = p.sigma(i).image(g).to_string();
            if (!p.delta(i).image(g).is_zero()) d[ring->gen_name(g)] = p.delta(i).image(g).to_string();
        }
        sigma.push_back(s);
        delta.push_back(d);
    }
    j["sigma"] = sigma;
    j["delta"] = delta;
    Json rels = Json::array();
    for (const auto& [key, rel] : p.relations()) {
        const bool trivial = rel.c.is_one() && rel.d.is_zero() &&
                             std::all_of(rel.a.begin(), rel.a.end(), [](const auto& e) { return e.is_zero(); });
        if (trivial) continue;
        Json r;
        r["i"] = key.first + 1;
        r["j"] = key.second + 1;
        r["c"] = rel.c.to_string();
        r["d"] = rel.d.to_string();
        Json a = Json::array();
        for (const auto& e : rel.a) a.push_back(e.to_string());
        r["a"] = a;
        rels.push_back(r);
    }
    j["relations"] = rels;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

PresentationPtr presentation_ref(const Json& j, const std::string& base_dir, const std::string& where) {
    if (j.is_object()) return presentation_from_json(j);
    const std::string ref = as_string(j, where);
    if (ref.starts_with("catalog:")) return load_presentation(ref);
    const std::filesystem::path path(ref);
    return load_presentation(path.is_absolute() ? ref : (std::filesystem::path(base_dir) / path).string());
}

}  // namespace

PresentationPtr load_presentation(const std::string& ref) {
    if (ref.starts_with("catalog:")) return catalog::resolve(ref.substr(8));
    return presentation_from_json(parse_json_file(ref));
}

HomSpec homspec_from_json(const Json& j, const std::string& base_dir) {
    only_keys(j, {"source", "target", "phi", "y"}, "homspec");
    const PresentationPtr source = presentation_ref(required(j, "source", "homspec"), base_dir, "source");
    const PresentationPtr target = presentation_ref(required(j, "target", "homspec"), base_dir, "target");
    const RingPtr& R = source->ring();
    const RingPtr& S = target->ring();

    const Json phi_json = j.contains("phi") ? j.at("phi") : Json::object();
    if (!phi_json.is_object()) throw FormatError("phi: expected an object mapping generators to expressions");
    std::vector<CoeffElem> images;
    for (std::size_t g = 0; g < R->num_gens(); ++g) {
        const std::string& name = R->gen_name(g);
        if (phi_json.contains(name)) {
            images.push_back(coeff_value(phi_json.at(name), S, "phi." + name));
        } else if (auto t = S->gen_index(name)) {
            images.push_back(CoeffElem::generator(S, *t));
        } else {
            throw FormatError("phi: no image for generator '" + name + "'");
        }
    }
    for (const auto& [name, value] : phi_json.items())
        if (!R->gen_index(name)) throw FormatError("phi: '" + name + "' is not a generator of the source ring");

    const Json& yj = required(j, "y", "homspec");
    if (!yj.is_array() || yj.size() != source->n())
        throw FormatError("y: expected an array of " + std::to_string(source->n()) + " expressions");
    const Algebra B(target);
    std::vector<Poly> y;
    for (std::size_t i = 0; i < yj.size(); ++i) {
        try {
            if (yj[i].is_number_integer())
                y.push_back(B.constant(CoeffElem(S, static_cast<long>(yj[i].get<std::int64_t>()))));
            else
                y.push_back(eval_text(as_string(yj[i], "y"), B));
        } catch (const ParseError& e) {
            throw FormatError("y[" + std::to_string(i + 1) + "]: " + e.what());
        }
    }
    return HomSpec(source, target, RingMap(R, S, std::move(images)), std::move(y));
}

HomSpec load_homspec(const std::string& path) {
    const auto dir = std::filesystem::path(path).parent_path();
    return homspec_from_json(parse_json_file(path), dir.empty() ? "." : dir.string());
}

Json report_to_json(const ConsistencyReport& r) {
    auto idx = [](std::size_t v) { return v + 1; };
    Json j;
    j["presentation_id"] = r.presentation_id;
    j["overall"] = r.overall ? "pass" : "fail";
    Json units = Json::array();
    for (const auto& u : r.units)
        units.push_back({{"i", idx(u.i)}, {"j", idx(u.j)}, {"c", u.c.to_string()}, {"pass", u.pass}});
    j["units"] = {{"pass", r.units_pass()}, {"items", units}};
    Json c1 = Json::array();
    for (const auto& c : r.condition1) {
        Json item{{"var", idx(c.var)},
                  {"pass", c.pass()},
                  {"endomorphism", c.endomorphism_ok},
                  {"derivation", c.derivation_ok},
                  {"derivation_mode", to_string(c.derivation_mode)},
                  {"nonzero", c.nonzero_ok},
                  {"nonzero_mode", to_string(c.nonzero_mode)},
                  {"injectivity", c.injectivity}};
        if (!c.witness.empty()) item["witness"] = c.witness;
        c1.push_back(item);
    }
    j["condition1"] = {{"pass", r.condition1_pass()}, {"items", c1}};
    Json c2 = Json::array();
    for (const auto& c : r.condition2)
        if (!c.pass)
            c2.push_back({{"i", idx(c.i)},
                          {"j", idx(c.j)},
                          {"r", c.r.to_string()},
                          {"origin", c.origin},
                          {"lhs", c.lhs.to_string()},
                          {"rhs", c.rhs.to_string()}});
    j["condition2"] = {{"pass", r.condition2_pass()},
                       {"mode", to_string(r.condition2_mode)},
                       {"checked", r.condition2.size()},
                       {"failures", c2}};
    Json c3 = Json::array();
    for (const auto& c : r.condition3)
        if (!c.pass)
            c3.push_back({{"i", idx(c.i)},
                          {"j", idx(c.j)},
                          {"k", idx(c.k)},
                          {"lhs", c.lhs.to_string()},
                          {"rhs", c.rhs.to_string()},
                          {"difference", (c.lhs - c.rhs).to_string()}});
    j["condition3"] = {{"pass", r.condition3_pass()},
                       {"mode", "structural"},
                       {"checked", r.condition3.size()},
                       {"failures", c3}};
    return j;
}

Json hom_report_to_json(const HomReport& r) {
    auto idx = [](std::size_t v) { return v + 1; };
    Json j;
    j["overall"] = r.overall ? "pass" : "fail";
    j["source_consistent"] = r.source_consistent;
    j["target_consistent"] = r.target_consistent;
    Json c1 = Json::array();
    for (const auto& c : r.condition1)
        if (!c.pass)
            c1.push_back({{"i", idx(c.var)},
                          {"r", c.r.to_string()},
                          {"origin", c.origin},
                          {"lhs", c.lhs.to_string()},
                          {"rhs", c.rhs.to_string()}});
    j["condition1"] = {{"pass", r.condition1_pass()}, {"checked", r.condition1.size()}, {"failures", c1}};
    Json c2 = Json::array();
    for (const auto& c : r.condition2)
        if (!c.pass)
            c2.push_back({{"i", idx(c.i)}, {"j", idx(c.j)}, {"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}});
    j["condition2"] = {{"pass", r.condition2_pass()}, {"checked", r.condition2.size()}, {"failures", c2}};
    return j;
}

}  // namespace skewpbw
