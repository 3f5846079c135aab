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

#include "skewpbw/universal.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace skewpbw {

HomSpec::HomSpec(PresentationPtr source_, PresentationPtr target_, RingMap phi_, std::vector<Poly> y_)
    : source(std::move(source_)), target(std::move(target_)), phi(std::move(phi_)), y(std::move(y_)) {
    if (!source || !target) throw Error("hom spec: missing presentation");
    if (!same_ring(phi.source(), source->ring()))
        throw RingMismatch("hom spec: phi is defined on " + phi.source()->to_string() + ", source ring is " +
                           source->ring()->to_string());
    if (!same_ring(phi.target(), target->ring()))
        throw RingMismatch("hom spec: phi lands in " + phi.target()->to_string() + ", target ring is " +
                           target->ring()->to_string());
    if (y.size() != source->n())
        throw Error("hom spec: expected " + std::to_string(source->n()) + " images y, got " + std::to_string(y.size()));
    for (const auto& yi : y)
        if (yi.presentation()->id() != target->id()) throw RingMismatch("hom spec: image y lies outside the target");
    target_algebra = std::make_shared<const Algebra>(target);
}

HomSpec HomSpec::identity(const PresentationPtr& p) {
    std::vector<Poly> y;
    for (std::size_t i = 0; i < p->n(); ++i) y.push_back(Poly::var(p, i));
    return HomSpec(p, p, RingMap::identity(p->ring()), std::move(y));
}

// ---------------------------------------------------------------------------

bool HomReport::condition1_pass() const {
    return std::all_of(condition1.begin(), condition1.end(), [](const auto& c) { return c.pass; });
}
bool HomReport::condition2_pass() const {
    return std::all_of(condition2.begin(), condition2.end(), [](const auto& c) { return c.pass; });
}

std::string HomReport::to_text() const {
    auto idx = [](std::size_t v) { return std::to_string(v + 1); };
    std::string s;
    s += "source passes check_all: " + std::string(source_consistent ? "yes" : "NO") + "\n";
    s += "target passes check_all: " + std::string(target_consistent ? "yes" : "NO") + "\n";
    s += "condition (i) (y_i phi(r) = phi(sigma_i(r)) y_i + phi(delta_i(r))), " + std::to_string(condition1.size()) +
         " items: " + (condition1_pass() ? "pass" : "FAIL") + "\n";
    for (const auto& c : condition1)
        if (!c.pass)
            s += "  i=" + idx(c.var) + " r=" + c.r.to_string() + " [" + c.origin + "]\n    lhs: " + c.lhs.to_string() +
                 "\n    rhs: " + c.rhs.to_string() + "\n";
    s += "condition (ii) (y_j y_i = phi(c_ij) y_i y_j + sum phi(a_ij^k) y_k + phi(d_ij)), " +
         std::to_string(condition2.size()) + " pairs: " + (condition2_pass() ? "pass" : "FAIL") + "\n";
    for (const auto& c : condition2)
        if (!c.pass)
            s += "  (i,j)=(" + idx(c.i) + "," + idx(c.j) + ")\n    lhs: " + c.lhs.to_string() +
                 "\n    rhs: " + c.rhs.to_string() + "\n";
    s += std::string("overall: ") + (overall ? "pass" : "FAIL") + "\n";
    return s;
}

HomReport check_hom_conditions(const HomSpec& s, int samples, std::uint64_t seed) {
    HomReport report;
    CheckOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    report.source_consistent = check_all(s.source, opts).overall;
    report.target_consistent =
        s.target->id() == s.source->id() ? report.source_consistent : check_all(s.target, opts).overall;

    const Algebra& B = *s.target_algebra;
    const RingPtr& R = s.source->ring();
    auto phi_c = [&](const CoeffElem& r) { return B.constant(s.phi.apply(r)); };

    std::vector<std::pair<CoeffElem, std::string>> elements;
    elements.emplace_back(s.source->one(), "one");
    for (std::size_t g = 0; g < R->num_gens(); ++g) {
        const CoeffElem gen = CoeffElem::generator(R, g);
        elements.emplace_back(gen, "generator");
        if (R->gen_is_laurent(g)) elements.emplace_back(gen.unit_inverse(), "generator");
    }
    if (R->kind() != RingKind::PrimeField) {
        Rng rng(seed, "hom/condition1");
        for (int k = 0; k < samples; ++k) elements.emplace_back(random_elem(R, 2, rng), "random");
    }

    for (std::size_t i = 0; i < s.source->n(); ++i) {
        for (const auto& [r, origin] : elements) {
            Poly lhs = B.star(s.y[i], phi_c(r));
            Poly rhs = B.star(phi_c(s.source->sigma(i).apply(r)), s.y[i]) + phi_c(s.source->delta(i).apply(r));
            const bool pass = lhs == rhs;
            report.condition1.push_back(HomCondition1Item{i, r, origin, pass, std::move(lhs), std::move(rhs)});
        }
    }

    for (std::size_t i = 0; i < s.source->n(); ++i)
        for (std::size_t j = i + 1; j < s.source->n(); ++j) {
            const Relation& rel = s.source->relation(i, j);
            Poly lhs = B.star(s.y[j], s.y[i]);
            Poly rhs = B.star(phi_c(rel.c), B.star(s.y[i], s.y[j])) + phi_c(rel.d);
            for (std::size_t k = 0; k < s.source->n(); ++k)
                if (!rel.a[k].is_zero()) rhs += B.star(phi_c(rel.a[k]), s.y[k]);
            const bool pass = lhs == rhs;
            report.condition2.push_back(HomCondition2Item{i, j, pass, std::move(lhs), std::move(rhs)});
        }

    report.overall =
        report.source_consistent && report.target_consistent && report.condition1_pass() && report.condition2_pass();
    return report;
}

// ---------------------------------------------------------------------------

Poly extend_hom(const HomSpec& s, const Poly& f) {
    if (f.presentation()->id() != s.source->id()) throw RingMismatch("extend_hom: argument lies outside the source");
    const Algebra& B = *s.target_algebra;
    std::map<std::pair<std::size_t, std::uint32_t>, Poly> powers;
    auto y_pow = [&](std::size_t i, std::uint32_t e) -> const Poly& {
        auto it = powers.find({i, e});
        if (it == powers.end()) it = powers.emplace(std::make_pair(i, e), B.pow(s.y[i], e)).first;
        return it->second;
    };
    Poly out = B.zero();
    for (const auto& [alpha, r] : f.terms()) {
        Poly term = B.constant(s.phi.apply(r));
        for (std::size_t i = 0; i < alpha.size(); ++i)
            if (alpha[i] != 0) term = B.star(term, y_pow(i, alpha[i]));
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Checks back(forward(x)) == x on one side; returns a witness on failure.
std::string round_trip_witness(const HomSpec& forward, const HomSpec& back, int samples, Rng& rng) {
    const PresentationPtr& A = forward.source;
    const RingPtr& R = A->ring();
    for (std::size_t g = 0; g < R->num_gens(); ++g) {
        const CoeffElem gen = CoeffElem::generator(R, g);
        const CoeffElem img = back.phi.apply(forward.phi.apply(gen));
        if (img != gen) return "coefficient " + gen.to_string() + " returns as " + img.to_string();
    }
    auto trip = [&](const Poly& f) -> std::string {
        const Poly img = extend_hom(back, extend_hom(forward, f));
        if (img == f) return {};
        return f.to_string() + " returns as " + img.to_string();
    };
    for (std::size_t i = 0; i < A->n(); ++i)
        if (auto w = trip(Poly::var(A, i)); !w.empty()) return w;
    for (int k = 0; k < samples; ++k)
        if (auto w = trip(random_poly(A, 3, 3, 1, rng)); !w.empty()) return w;
    return {};
}

}  // namespace

InverseReport verify_mutual_inverse(const HomSpec& forward, const HomSpec& back, int samples, std::uint64_t seed) {
    if (forward.target->id() != back.source->id() || back.target->id() != forward.source->id())
        throw Error("verify_mutual_inverse: specs do not compose to endomorphisms");
    InverseReport report;
    Rng rng(seed, "hom/inverse");
    report.witness = round_trip_witness(forward, back, samples, rng);
    if (report.witness.empty()) report.witness = round_trip_witness(back, forward, samples, rng);
    report.pass = report.witness.empty();
    return report;
}

// ---------------------------------------------------------------------------

BasisImageReport basis_image_rank(const HomSpec& s, std::uint32_t max_degree) {
    const std::size_t n = s.source->n();
    std::vector<Monomial> monos;
    Monomial cur(n, 0);
    std::function<void(std::size_t, std::uint32_t)> gen = [&](std::size_t pos, std::uint32_t left) {
        if (pos == n) {
            monos.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            cur[pos] = e;
            gen(pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    gen(0, max_degree);

    // Rows: images y^alpha; columns: standard monomials of B in their support.
    std::vector<std::map<Monomial, CoeffElem>> rows;
    for (const auto& alpha : monos) {
        const Poly img = extend_hom(s, Poly::term(s.source, alpha, s.source->one()));
        rows.emplace_back(img.terms().begin(), img.terms().end());
    }
    std::vector<Monomial> cols;
    for (const auto& r : rows)
        for (const auto& [m, c] : r) cols.push_back(m);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    auto entry = [&](const std::map<Monomial, CoeffElem>& row, const Monomial& m) -> CoeffElem {
        auto it = row.find(m);
        return it == row.end() ? CoeffElem(s.target->ring()) : it->second;
    };

    BasisImageReport report;
    report.monomials = monos.size();
    std::vector<bool> used(rows.size(), false);
    for (const auto& col : cols) {
        std::size_t piv = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!used[r] && !entry(rows[r], col).is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows.size()) continue;
        used[piv] = true;
        ++report.rank;
        const CoeffElem p = entry(rows[piv], col);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            const CoeffElem f = entry(rows[r], col);
            if (f.is_zero()) continue;
            // row_r <- p * row_r - f * row_piv; stays in R' and keeps the rank
            std::map<Monomial, CoeffElem> next;
            for (const auto& [m, c] : rows[r]) next.emplace(m, p * c);
            for (const auto& [m, c] : rows[piv]) {
                auto [it, fresh] = next.emplace(m, -(f * c));
                if (!fresh) it->second -= f * c;
            }
            std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
            rows[r] = std::move(next);
        }
    }
    return report;
}

}  // namespace skewpbw
