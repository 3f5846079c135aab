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

#include "skewpbw/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace skewpbw {

StructureConstants::StructureConstants(RingPtr field, std::size_t n) : field_(std::move(field)), n_(n) {
    if (!field_->is_field()) throw Error("structure constants must live in QQ or GF(p)");
    if (n_ == 0) throw Error("Lie algebra dimension must be positive");
}

void StructureConstants::set_bracket(std::size_t a, std::size_t b, const std::vector<CoeffElem>& value) {
    if (a >= n_ || b >= n_ || a == b) throw Error("set_bracket: bad index pair");
    if (value.size() != n_) throw Error("set_bracket: vector length must equal the dimension");
    for (const auto& v : value)
        if (!same_ring(v.ring(), field_)) throw RingMismatch("structure constant outside " + field_->to_string());
    if (a > b) {
        entries_[{b, a}] = value;  // [x_a, x_b] with b < a is the stored orientation
    } else {
        std::vector<CoeffElem> neg;
        for (const auto& v : value) neg.push_back(-v);
        entries_[{a, b}] = std::move(neg);
    }
}

void StructureConstants::set_bracket(std::size_t a, std::size_t b, const std::vector<long>& value) {
    std::vector<CoeffElem> v;
    for (long x : value) v.emplace_back(field_, x);
    set_bracket(a, b, v);
}

std::vector<CoeffElem> StructureConstants::bracket(std::size_t a, std::size_t b) const {
    std::vector<CoeffElem> zero(n_, CoeffElem(field_));
    if (a == b) return zero;
    const bool flipped = a < b;
    auto it = entries_.find({std::min(a, b), std::max(a, b)});
    if (it == entries_.end()) return zero;
    if (!flipped) return it->second;
    std::vector<CoeffElem> neg;
    for (const auto& v : it->second) neg.push_back(-v);
    return neg;
}

std::vector<CoeffElem> StructureConstants::bracket(const std::vector<CoeffElem>& u,
                                                   const std::vector<CoeffElem>& v) const {
    std::vector<CoeffElem> out(n_, CoeffElem(field_));
    for (std::size_t a = 0; a < n_; ++a) {
        if (u[a].is_zero()) continue;
        for (std::size_t b = 0; b < n_; ++b) {
            if (v[b].is_zero()) continue;
            const auto ab = bracket(a, b);
            const CoeffElem w = u[a] * v[b];
            for (std::size_t k = 0; k < n_; ++k) out[k] += w * ab[k];
        }
    }
    return out;
}

Presentation lie_presentation(const StructureConstants& sc, std::vector<std::string> var_names, std::string label) {
    const std::size_t n = sc.n();
    const RingPtr& k = sc.field();
    if (var_names.empty())
        for (std::size_t i = 0; i < n; ++i) var_names.push_back("x" + std::to_string(i + 1));
    std::vector<RingMap> sigma(n, RingMap::identity(k));
    std::vector<SigmaDerivation> delta(n, SigmaDerivation::zero(RingMap::identity(k)));
    std::map<Presentation::PairKey, Relation> rels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            rels.emplace(Presentation::PairKey{i, j}, Relation{CoeffElem(k, 1L), CoeffElem(k), sc.bracket(j, i)});
    return Presentation(k, std::move(var_names), std::move(sigma), std::move(delta), std::move(rels), std::move(label));
}

std::vector<CoeffElem> jacobiator(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = sc.n();
    if (i >= n || j >= n || k >= n) throw Error("jacobiator: index out of range");
    auto basis = [&](std::size_t a) {
        std::vector<CoeffElem> e(n, CoeffElem(sc.field()));
        e[a] = CoeffElem(sc.field(), 1L);
        return e;
    };
    const auto xi = basis(i), xj = basis(j), xk = basis(k);
    auto t1 = sc.bracket(sc.bracket(xj, xi), xk);
    auto t2 = sc.bracket(xj, sc.bracket(xk, xi));
    auto t3 = sc.bracket(sc.bracket(xk, xj), xi);
    for (std::size_t a = 0; a < n; ++a) t1[a] += t2[a] + t3[a];
    return t1;
}

StructureConstants sl2_constants(const RingPtr& field) {
    // basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
    StructureConstants sc(field, 3);
    sc.set_bracket(0, 1, std::vector<long>{0, 0, 1});
    sc.set_bracket(2, 0, std::vector<long>{2, 0, 0});
    sc.set_bracket(2, 1, std::vector<long>{0, -2, 0});
    return sc;
}

StructureConstants heisenberg_constants(const RingPtr& field) {
    // basis (q, p, z): [p,q] = z, z central
    StructureConstants sc(field, 3);
    sc.set_bracket(1, 0, std::vector<long>{0, 0, 1});
    return sc;
}

StructureConstants so3_constants(const RingPtr& field) {
    // [x1,x2] = x3, [x2,x3] = x1, [x3,x1] = x2
    StructureConstants sc(field, 3);
    sc.set_bracket(0, 1, std::vector<long>{0, 0, 1});
    sc.set_bracket(1, 2, std::vector<long>{1, 0, 0});
    sc.set_bracket(2, 0, std::vector<long>{0, 1, 0});
    return sc;
}

namespace catalog {

namespace {

std::int64_t int_param(const Params& params, const std::string& key, std::int64_t fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        std::size_t used = 0;
        const auto v = std::stoll(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw Error("parameter " + key + "=" + it->second + " is not an integer");
    }
}

mpq_class rational_param(const Params& params, const std::string& key, const mpq_class& fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    mpq_class v;
    if (v.set_str(it->second, 10) != 0) throw Error("parameter " + key + "=" + it->second + " is not a rational");
    if (v.get_den() == 0) throw Error("parameter " + key + " has zero denominator");
    v.canonicalize();
    return v;
}

RingPtr base_field(const Params& params) {
    const auto p = int_param(params, "p", 0);
    return p == 0 ? CoeffRing::rationals() : CoeffRing::prime_field(p);
}

std::vector<RingMap> identities(const RingPtr& r, std::size_t n) { return std::vector<RingMap>(n, RingMap::identity(r)); }

std::vector<SigmaDerivation> zeros(const std::vector<RingMap>& sigma) {
    std::vector<SigmaDerivation> out;
    for (const auto& s : sigma) out.push_back(SigmaDerivation::zero(s));
    return out;
}

Relation rel(const RingPtr& r, std::size_t n, CoeffElem c, CoeffElem d) {
    return Relation{std::move(c), std::move(d), std::vector<CoeffElem>(n, CoeffElem(r))};
}

PresentationPtr make_weyl(const Params& params) {
    const auto n = int_param(params, "n", 1);
    if (n < 1 || n > 8) throw Error("weyl: n must be between 1 and 8");
    const RingPtr k = base_field(params);
    const auto nn = static_cast<std::size_t>(n);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= nn; ++i) names.push_back("t" + std::to_string(i));
    for (std::size_t i = 1; i <= nn; ++i) names.push_back("d" + std::to_string(i));
    auto sigma = identities(k, 2 * nn);
    std::map<Presentation::PairKey, Relation> rels;
    // d_i t_i = t_i d_i + 1
    for (std::size_t i = 0; i < nn; ++i) rels.emplace(Presentation::PairKey{i, nn + i}, rel(k, 2 * nn, CoeffElem(k, 1L), CoeffElem(k, 1L)));
    return std::make_shared<const Presentation>(k, names, sigma, zeros(sigma), rels, "weyl" + std::to_string(n));
}

PresentationPtr make_lie(const std::string& name, const Params& params) {
    const RingPtr k = base_field(params);
    if (name == "u_sl2") return std::make_shared<const Presentation>(lie_presentation(sl2_constants(k), {"e", "f", "h"}, name));
    if (name == "u_heisenberg")
        return std::make_shared<const Presentation>(lie_presentation(heisenberg_constants(k), {"q", "p", "z"}, name));
    return std::make_shared<const Presentation>(lie_presentation(so3_constants(k), {"x1", "x2", "x3"}, name));
}

PresentationPtr make_quantum_plane(const Params&) {
    const RingPtr r = CoeffRing::laurent(CoeffRing::rationals(), "q");
    const auto q = CoeffElem::generator(r, "q");
    auto sigma = identities(r, 2);
    std::map<Presentation::PairKey, Relation> rels;
    rels.emplace(Presentation::PairKey{0, 1}, rel(r, 2, q, CoeffElem(r)));  // y x = q x y
    return std::make_shared<const Presentation>(r, std::vector<std::string>{"x", "y"}, sigma, zeros(sigma), rels,
                                                "quantum_plane");
}

// Manin's M_q(2) with generators a, b, c, d:
//   ab = q ba, ac = q ca, bd = q db, cd = q dc, bc = cb, ad - da = (q - q^-1) bc.
// The last relation is quadratic in the generators, so b and c go into the
// coefficient ring: M_q(2) = sigma(QQ[q^+-1][b,c]) <a, d>.
PresentationPtr make_quantum_matrices(const Params&) {
    const RingPtr lq = CoeffRing::laurent(CoeffRing::rationals(), "q");
    const RingPtr r = CoeffRing::poly(lq, {"b", "c"});
    const auto q = CoeffElem::generator(r, "q");
    const auto b = CoeffElem::generator(r, "b");
    const auto c = CoeffElem::generator(r, "c");
    const auto qi = q.unit_inverse();
    std::vector<RingMap> sigma{RingMap(r, r, {q, q * b, q * c}), RingMap(r, r, {q, qi * b, qi * c})};
    std::map<Presentation::PairKey, Relation> rels;
    // d a = a d - (q - q^-1) b c
    rels.emplace(Presentation::PairKey{0, 1}, rel(r, 2, CoeffElem(r, 1L), -((q - qi) * b * c)));
    return std::make_shared<const Presentation>(r, std::vector<std::string>{"a", "d"}, sigma, zeros(sigma), rels,
                                                "quantum_matrices2");
}

// Two-generator diffusion algebra
//   l12 D1 D2 - l21 D2 D1 = beta2 D1 - beta1 D2,
// i.e. D2 D1 = (l12/l21) D1 D2 - (beta2/l21) D1 + (beta1/l21) D2.
PresentationPtr make_diffusion(const Params& params) {
    const RingPtr k = CoeffRing::rationals();
    const mpq_class l12 = rational_param(params, "l12", 2);
    const mpq_class l21 = rational_param(params, "l21", 1);
    const mpq_class b1 = rational_param(params, "beta1", 1);
    const mpq_class b2 = rational_param(params, "beta2", 3);
    if (l12 == 0 || l21 == 0) throw Error("diffusion2: l12 and l21 must be nonzero");
    auto sigma = identities(k, 2);
    Relation r = rel(k, 2, CoeffElem(k, mpq_class(l12 / l21)), CoeffElem(k));
    r.a[0] = CoeffElem(k, mpq_class(-b2 / l21));
    r.a[1] = CoeffElem(k, mpq_class(b1 / l21));
    std::map<Presentation::PairKey, Relation> rels;
    rels.emplace(Presentation::PairKey{0, 1}, std::move(r));
    return std::make_shared<const Presentation>(k, std::vector<std::string>{"D1", "D2"}, sigma, zeros(sigma), rels,
                                                "diffusion2");
}

// A_1 as an Ore extension QQ[t][D; id, d/dt]
PresentationPtr make_weyl_ore(const Params& params) {
    const RingPtr r = CoeffRing::poly(base_field(params), {"t"});
    auto id = RingMap::identity(r);
    std::vector<RingMap> sigma{id};
    std::vector<SigmaDerivation> delta{SigmaDerivation(id, {CoeffElem(r, 1L)})};
    return std::make_shared<const Presentation>(r, std::vector<std::string>{"D"}, sigma, delta,
                                                std::map<Presentation::PairKey, Relation>{}, "weyl_ore");
}

// D t = q t D + 1 over QQ[q^+-1][t]
PresentationPtr make_jackson(const Params&) {
    const RingPtr lq = CoeffRing::laurent(CoeffRing::rationals(), "q");
    const RingPtr r = CoeffRing::poly(lq, {"t"});
    const auto q = CoeffElem::generator(r, "q");
    const auto t = CoeffElem::generator(r, "t");
    RingMap s(r, r, {q, q * t});
    std::vector<RingMap> sigma{s};
    std::vector<SigmaDerivation> delta{SigmaDerivation(s, {CoeffElem(r), CoeffElem(r, 1L)})};
    return std::make_shared<const Presentation>(r, std::vector<std::string>{"D"}, sigma, delta,
                                                std::map<Presentation::PairKey, Relation>{}, "jackson");
}

// Dilation X t = q t X and differentiation D t = t D + 1 over QQ[q^+-1][t];
// compatibility forces D X = q X D.
PresentationPtr make_dilation_diff(const Params&) {
    const RingPtr lq = CoeffRing::laurent(CoeffRing::rationals(), "q");
    const RingPtr r = CoeffRing::poly(lq, {"t"});
    const auto q = CoeffElem::generator(r, "q");
    const auto t = CoeffElem::generator(r, "t");
    RingMap dil(r, r, {q, q * t});
    auto id = RingMap::identity(r);
    std::vector<RingMap> sigma{dil, id};
    std::vector<SigmaDerivation> delta{SigmaDerivation::zero(dil), SigmaDerivation(id, {CoeffElem(r), CoeffElem(r, 1L)})};
    std::map<Presentation::PairKey, Relation> rels;
    rels.emplace(Presentation::PairKey{0, 1}, rel(r, 2, q, CoeffElem(r)));
    return std::make_shared<const Presentation>(r, std::vector<std::string>{"X", "D"}, sigma, delta, rels,
                                                "dilation_diff");
}

}  // namespace

std::vector<Entry> entries() {
    return {
        {"weyl", "Weyl algebra A_n over QQ or GF(p): d_i t_i = t_i d_i + 1", {"n", "p"}},
        {"u_sl2", "enveloping algebra of sl2, basis (e, f, h)", {"p"}},
        {"u_heisenberg", "enveloping algebra of the Heisenberg algebra, basis (q, p, z), [p,q] = z", {"p"}},
        {"u_so3", "enveloping algebra of so3: [x1,x2] = x3, [x2,x3] = x1, [x3,x1] = x2", {"p"}},
        {"quantum_plane", "y x = q x y over QQ[q^+-1] (standard form from the literature)", {}},
        {"quantum_matrices2", "Manin M_q(2) as sigma(QQ[q^+-1][b,c])<a,d> (standard form from the literature)", {}},
        {"diffusion2", "two-generator diffusion algebra (standard form from the literature)",
         {"l12", "l21", "beta1", "beta2"}},
        {"weyl_ore", "A_1 as the Ore extension QQ[t][D; d/dt]", {"p"}},
        {"jackson", "D t = q t D + 1 over QQ[q^+-1][t]", {}},
        {"dilation_diff", "X t = q t X, D t = t D + 1, D X = q X D over QQ[q^+-1][t]", {}},
    };
}

std::vector<std::string> list() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
}

PresentationPtr get(const std::string& name, const Params& params) {
    const auto all = entries();
    auto it = std::find_if(all.begin(), all.end(), [&](const Entry& e) { return e.name == name; });
    if (it == all.end()) throw Error("unknown catalog entry '" + name + "'");
    for (const auto& [key, value] : params)
        if (std::find(it->params.begin(), it->params.end(), key) == it->params.end())
            throw Error("catalog entry '" + name + "' has no parameter '" + key + "'");

    if (name == "weyl") return make_weyl(params);
    if (name == "u_sl2" || name == "u_heisenberg" || name == "u_so3") return make_lie(name, params);
    if (name == "quantum_plane") return make_quantum_plane(params);
    if (name == "quantum_matrices2") return make_quantum_matrices(params);
    if (name == "diffusion2") return make_diffusion(params);
    if (name == "weyl_ore") return make_weyl_ore(params);
    if (name == "jackson") return make_jackson(params);
    return make_dilation_diff(params);
}

PresentationPtr resolve(const std::string& spec) {
    if (const auto q = spec.find('?'); q != std::string::npos) {
        Params params;
        std::size_t start = q + 1;
        while (start <= spec.size()) {
            const auto end = std::min(spec.find(',', start), spec.size());
            const std::string item = spec.substr(start, end - start);
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) throw Error("catalog parameter '" + item + "' is not key=value");
            params[item.substr(0, eq)] = item.substr(eq + 1);
            start = end + 1;
        }
        return get(spec.substr(0, q), params);
    }
    if (spec.size() > 4 && spec.rfind("weyl", 0) == 0 &&
        std::all_of(spec.begin() + 4, spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return get("weyl", {{"n", spec.substr(4)}});
    return get(spec);
}

}  // namespace catalog

}  // namespace skewpbw
