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

#include "skewpbw/poly.hpp"

#include <algorithm>

namespace skewpbw {

std::uint64_t total_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

Monomial mono_add(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw Error("monomials of different lengths");
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
        if (r[i] >= kExponentCap)
            throw Error("exponent of x" + std::to_string(i + 1) + " exceeds the cap " + std::to_string(kExponentCap));
    }
    return r;
}

Monomial unit_vector(std::size_t n, std::size_t i) {
    Monomial m(n, 0);
    m.at(i) = 1;
    return m;
}

std::string mono_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (m[i] != 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

Poly::Poly(PresentationPtr p) : p_(std::move(p)) {
    if (!p_) throw Error("Poly: null presentation");
}

Poly Poly::constant(PresentationPtr p, const CoeffElem& r) {
    Poly f(std::move(p));
    f.add_term(Monomial(f.p_->n(), 0), r);
    return f;
}

Poly Poly::term(PresentationPtr p, Monomial m, const CoeffElem& r) {
    Poly f(std::move(p));
    if (m.size() != f.p_->n()) throw Error("monomial length does not match the presentation");
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] >= kExponentCap) throw Error("exponent of x" + std::to_string(i + 1) + " exceeds the cap");
    f.add_term(m, r);
    return f;
}

Poly Poly::var(PresentationPtr p, std::size_t i) {
    const std::size_t n = p->n();
    if (i >= n) throw Error("variable index out of range");
    auto one = p->one();
    return term(std::move(p), unit_vector(n, i), one);
}

Poly Poly::one(PresentationPtr p) {
    auto r = p->one();
    return constant(std::move(p), r);
}

CoeffElem Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? p_->zero() : it->second;
}

std::optional<std::uint64_t> Poly::deg() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

void Poly::add_term(const Monomial& m, const CoeffElem& r) {
    if (r.is_zero()) return;
    if (!same_ring(r.ring(), p_->ring()))
        throw RingMismatch("coefficient in " + r.ring()->to_string() + ", polynomial over " + p_->ring()->to_string());
    auto [it, inserted] = terms_.try_emplace(m, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_same(const Poly& o) const {
    if (p_ != o.p_ && p_->id() != o.p_->id())
        throw RingMismatch("polynomials belong to different presentations");
}

Poly Poly::operator-() const {
    Poly r(p_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::scaled(const CoeffElem& r) const {
    Poly out(p_);
    for (const auto& [m, c] : terms_) out.add_term(m, r * c);
    return out;
}

bool Poly::operator==(const Poly& o) const {
    return (p_ == o.p_ || p_->id() == o.p_->id()) && terms_ == o.terms_;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        const auto da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::string out;
    for (const auto* t : order) {
        const auto& [m, c] = *t;
        const bool constant = total_degree(m) == 0;
        std::string piece;
        bool negative = false;
        if (constant) {
            piece = c.to_string();
        } else if (c.is_compound()) {
            piece = "(" + c.to_string() + ")*" + mono_string(m);
        } else {
            std::string cs = c.to_string();
            if (cs.front() == '-') {
                negative = true;
                cs.erase(0, 1);
            }
            piece = cs == "1" ? mono_string(m) : cs + "*" + mono_string(m);
        }
        if (constant && piece.front() == '-') {
            negative = true;
            piece.erase(0, 1);
        }
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

Poly add(const Poly& f, const Poly& g) { return f + g; }
Poly scalar_mul(const CoeffElem& r, const Poly& f) { return f.scaled(r); }

Monomial random_monomial(std::size_t n, std::uint32_t degree, Rng& rng) {
    Monomial m(n, 0);
    if (n == 0) return m;
    for (std::uint32_t k = 0; k < degree; ++k) ++m[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1))];
    return m;
}

Poly random_poly(const PresentationPtr& p, std::uint32_t max_degree, int max_terms, int coeff_degree, Rng& rng) {
    Poly f(p);
    const auto terms = rng.uniform(1, std::max(1, max_terms));
    for (std::int64_t t = 0; t < terms; ++t) {
        const auto d = static_cast<std::uint32_t>(rng.uniform(0, max_degree));
        f.add_term(random_monomial(p->n(), d, rng), random_nonzero_elem(p->ring(), coeff_degree, rng));
    }
    return f;
}

}  // namespace skewpbw
