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

#include "skewpbw/consistency.hpp"

#include <algorithm>

#include "skewpbw/reduction.hpp"

namespace skewpbw {

const char* to_string(CheckMode m) { return m == CheckMode::Structural ? "structural" : "sampled"; }

bool ConsistencyReport::units_pass() const {
    return std::all_of(units.begin(), units.end(), [](const auto& u) { return u.pass; });
}
bool ConsistencyReport::condition1_pass() const {
    return std::all_of(condition1.begin(), condition1.end(), [](const auto& c) { return c.pass(); });
}
bool ConsistencyReport::condition2_pass() const {
    return std::all_of(condition2.begin(), condition2.end(), [](const auto& c) { return c.pass; });
}
bool ConsistencyReport::condition3_pass() const {
    return std::all_of(condition3.begin(), condition3.end(), [](const auto& c) { return c.pass; });
}

void ConsistencyReport::finalize() {
    overall = units_pass() && condition1_pass() && condition2_pass() && condition3_pass();
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> ConsistencyReport::failing_triples() const {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    for (const auto& c : condition3)
        if (!c.pass) out.emplace_back(c.i, c.j, c.k);
    return out;
}

std::string ConsistencyReport::to_text() const {
    auto idx = [](std::size_t v) { return std::to_string(v + 1); };
    std::string s;
    s += "units c_ij: " + std::string(units_pass() ? "pass" : "FAIL") + "\n";
    for (const auto& u : units)
        if (!u.pass) s += "  c_" + idx(u.i) + idx(u.j) + " = " + u.c.to_string() + " is not a unit\n";
    s += "condition 1 (sigma endomorphism, delta sigma-derivation): " +
         std::string(condition1_pass() ? "pass" : "FAIL") + "\n";
    for (const auto& c : condition1) {
        s += "  x" + idx(c.var) + ": " + (c.pass() ? "pass" : "FAIL") + "; derivation " + to_string(c.derivation_mode) +
             "; nonzero-on-nonzero " + to_string(c.nonzero_mode) + "; injectivity: " + c.injectivity + "\n";
        if (!c.witness.empty()) s += "    witness: " + c.witness + "\n";
    }
    s += "condition 2 (h(xj xi r) = h(p(xj xi) r)), " + std::string(to_string(condition2_mode)) + ", " +
         std::to_string(condition2.size()) + " items: " + (condition2_pass() ? "pass" : "FAIL") + "\n";
    for (const auto& c : condition2)
        if (!c.pass)
            s += "  (i,j)=(" + idx(c.i) + "," + idx(c.j) + ") r=" + c.r.to_string() + " [" + c.origin +
                 "]\n    lhs: " + c.lhs.to_string() + "\n    rhs: " + c.rhs.to_string() + "\n";
    s += "condition 3 (h(xk xj xi) = h(p(xk xj) xi)), structural, " + std::to_string(condition3.size()) +
         " triples: " + (condition3_pass() ? "pass" : "FAIL") + "\n";
    for (const auto& c : condition3)
        if (!c.pass)
            s += "  (i,j,k)=(" + idx(c.i) + "," + idx(c.j) + "," + idx(c.k) + ")\n    lhs: " + c.lhs.to_string() +
                 "\n    rhs: " + c.rhs.to_string() + "\n    difference: " + (c.lhs - c.rhs).to_string() + "\n";
    s += std::string("overall: ") + (overall ? "pass" : "FAIL") + "\n";
    return s;
}

// ---------------------------------------------------------------------------

namespace {

Condition1Item check_variable(const Presentation& p, std::size_t var, const CheckOptions& opts) {
    const RingPtr& ring = p.ring();
    const RingMap& sigma = p.sigma(var);
    const SigmaDerivation& delta = p.delta(var);
    Condition1Item item;
    item.var = var;
    Rng rng(opts.seed, "condition1/" + std::to_string(var));
    auto note = [&](const std::string& w) {
        if (item.witness.empty()) item.witness = w;
    };

    // Over QQ and GF(p) every endomorphism is the identity and every
    // sigma-derivation vanishes; with no generators the data is forced.
    if (ring->is_field()) {
        item.injectivity = "injective (structural: field)";
        return item;
    }

    // Endomorphism: substitution is multiplicative and unital by
    // construction; sample the laws to confirm.
    if (!sigma.apply(p.one()).is_one()) {
        item.endomorphism_ok = false;
        note("sigma(1) != 1");
    }
    for (int s = 0; s < opts.samples && item.endomorphism_ok; ++s) {
        const CoeffElem a = random_elem(ring, opts.degree_bound, rng);
        const CoeffElem b = random_elem(ring, opts.degree_bound, rng);
        if (sigma.apply(a * b) != sigma.apply(a) * sigma.apply(b) || sigma.apply(a + b) != sigma.apply(a) + sigma.apply(b)) {
            item.endomorphism_ok = false;
            note("sigma law fails on r=" + a.to_string() + ", s=" + b.to_string());
        }
    }

    // Derivation: the extension from generator images is well defined iff
    // the twisted Leibniz rule agrees on both orders of every generator pair.
    if (!delta.apply(p.one()).is_zero()) {
        item.derivation_ok = false;
        note("delta(1) != 0");
    }
    auto leibniz_fails = [&](const CoeffElem& r, const CoeffElem& s) {
        const CoeffElem lhs = delta.apply(r * s);
        const CoeffElem rhs = sigma.apply(r) * delta.apply(s) + delta.apply(r) * s;
        if (lhs == rhs) return false;
        note("delta(rs) != sigma(r)delta(s) + delta(r)s for r=" + r.to_string() + ", s=" + s.to_string() +
             ": " + lhs.to_string() + " vs " + rhs.to_string());
        return true;
    };
    if (auto defect = delta.leibniz_defect()) {
        item.derivation_ok = false;
        leibniz_fails(CoeffElem::generator(ring, defect->second), CoeffElem::generator(ring, defect->first));
    }
    for (int s = 0; s < opts.samples && item.derivation_ok; ++s) {
        const CoeffElem a = random_elem(ring, opts.degree_bound, rng);
        const CoeffElem b = random_elem(ring, opts.degree_bound, rng);
        if (leibniz_fails(a, b) || delta.apply(a + b) != delta.apply(a) + delta.apply(b)) item.derivation_ok = false;
    }

    // sigma(r) != 0 for r != 0, and injectivity
    const auto structural = sigma.structurally_injective();
    if (structural.has_value()) {
        item.nonzero_mode = CheckMode::Structural;
        item.nonzero_ok = *structural;
        item.injectivity = *structural ? "injective (structural)" : "not injective (structural)";
        if (!*structural) note("sigma_" + std::to_string(var + 1) + " has a singular exponent matrix");
    } else {
        item.nonzero_mode = CheckMode::Sampled;
        item.injectivity = "no collision found (sampled)";
        for (int s = 0; s < opts.samples; ++s) {
            const CoeffElem r = random_nonzero_elem(ring, opts.degree_bound, rng);
            if (sigma.apply(r).is_zero()) {
                item.nonzero_ok = false;
                item.injectivity = "not injective (sampled witness)";
                note("sigma(" + r.to_string() + ") = 0");
                break;
            }
        }
    }
    return item;
}

std::vector<std::pair<CoeffElem, std::string>> condition2_elements(const Presentation& p, const CheckOptions& opts) {
    const RingPtr& ring = p.ring();
    std::vector<std::pair<CoeffElem, std::string>> out;
    out.emplace_back(p.one(), "one");
    std::vector<CoeffElem> gens;
    for (std::size_t g = 0; g < ring->num_gens(); ++g) {
        gens.push_back(CoeffElem::generator(ring, g));
        if (ring->gen_is_laurent(g)) gens.push_back(gens.back().unit_inverse());
    }
    for (const auto& g : gens) out.emplace_back(g, "generator");
    if (ring->kind() == RingKind::PrimeField) return out;  // 1 spans GF(p) additively

    Rng rng(opts.seed, "condition2");
    for (int s = 0; s < opts.samples; ++s) out.emplace_back(random_elem(ring, opts.degree_bound, rng), "random");
    if (!gens.empty()) {
        for (int s = 0; s < opts.samples; ++s) {
            CoeffElem prod = p.one();
            const auto len = rng.uniform(2, 3);
            for (std::int64_t k = 0; k < len; ++k)
                prod *= gens[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(gens.size()) - 1))];
            out.emplace_back(std::move(prod), "product");
        }
    }
    return out;
}

Condition2Item condition2_with(Reducer& red, std::size_t i, std::size_t j, const CoeffElem& r) {
    const Word lhs_word{Letter(Var{j}), Letter(Var{i}), Letter(r)};
    const FreeElem inner = red.p(Word{Letter(Var{j}), Letter(Var{i})});
    const FreeElem rhs_elem = free_concat(inner, FreeElem::word(Word{Letter(r)}));
    Poly lhs = red.h(lhs_word);
    Poly rhs = red.h(rhs_elem);
    const bool pass = lhs == rhs;
    return Condition2Item{i, j, r, "", pass, std::move(lhs), std::move(rhs)};
}

Condition3Item condition3_with(Reducer& red, std::size_t i, std::size_t j, std::size_t k) {
    const Word lhs_word{Letter(Var{k}), Letter(Var{j}), Letter(Var{i})};
    const FreeElem inner = red.p(Word{Letter(Var{k}), Letter(Var{j})});
    const FreeElem rhs_elem = free_concat(inner, FreeElem::word(Word{Letter(Var{i})}));
    Poly lhs = red.h(lhs_word);
    Poly rhs = red.h(rhs_elem);
    const bool pass = lhs == rhs;
    return Condition3Item{i, j, k, pass, std::move(lhs), std::move(rhs)};
}

void check_indices(const Presentation& p, std::initializer_list<std::size_t> ordered) {
    std::size_t prev = 0;
    bool first = true;
    for (auto v : ordered) {
        if (v >= p.n()) throw Error("variable index out of range");
        if (!first && v <= prev) throw Error("indices must be strictly increasing");
        prev = v;
        first = false;
    }
}

}  // namespace

ConsistencyReport validate_structure(const PresentationPtr& p, const CheckOptions& opts) {
    ConsistencyReport report;
    report.presentation_id = p->id();
    for (const auto& [key, rel] : p->relations())
        report.units.push_back(UnitCheck{key.first, key.second, rel.c, rel.c.is_unit()});
    for (std::size_t v = 0; v < p->n(); ++v) report.condition1.push_back(check_variable(*p, v, opts));
    report.finalize();
    return report;
}

Condition2Item check_condition2(const PresentationPtr& p, std::size_t i, std::size_t j, const CoeffElem& r) {
    check_indices(*p, {i, j});
    Reducer red(p);
    auto item = condition2_with(red, i, j, r);
    item.origin = "given";
    return item;
}

Condition3Item check_condition3(const PresentationPtr& p, std::size_t i, std::size_t j, std::size_t k) {
    check_indices(*p, {i, j, k});
    Reducer red(p);
    return condition3_with(red, i, j, k);
}

ConsistencyReport check_all(const PresentationPtr& p, const CheckOptions& opts) {
    ConsistencyReport report = validate_structure(p, opts);
    report.condition2_mode =
        p->ring()->kind() == RingKind::PrimeField ? CheckMode::Structural : CheckMode::Sampled;

    Reducer red(p);
    const auto elements = condition2_elements(*p, opts);
    for (std::size_t i = 0; i < p->n(); ++i)
        for (std::size_t j = i + 1; j < p->n(); ++j)
            for (const auto& [r, origin] : elements) {
                auto item = condition2_with(red, i, j, r);
                item.origin = origin;
                report.condition2.push_back(std::move(item));
            }
    for (std::size_t i = 0; i < p->n(); ++i)
        for (std::size_t j = i + 1; j < p->n(); ++j)
            for (std::size_t k = j + 1; k < p->n(); ++k) report.condition3.push_back(condition3_with(red, i, j, k));
    report.finalize();
    return report;
}

}  // namespace skewpbw
