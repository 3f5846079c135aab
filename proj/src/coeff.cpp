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

#include "skewpbw/coeff.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skewpbw {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int exps_degree(const CoeffElem::Exps& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

// printing order: total degree descending, then lexicographic descending
bool print_before(const CoeffElem::Exps& a, const CoeffElem::Exps& b) {
    const int da = exps_degree(a), db = exps_degree(b);
    if (da != db) return da > db;
    return a > b;
}

std::string scalar_string(const mpq_class& s) { return s.get_str(); }

}  // namespace

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RingPtr CoeffRing::rationals() {
    static const RingPtr q = [] {
        auto r = std::shared_ptr<CoeffRing>(new CoeffRing());
        r->kind_ = RingKind::Rationals;
        return RingPtr(r);
    }();
    return q;
}

RingPtr CoeffRing::prime_field(std::int64_t p) {
    if (!is_prime(p)) throw DomainError("prime_field: " + std::to_string(p) + " is not prime");
    if (p > (std::int64_t{1} << 31)) throw DomainError("prime_field: modulus too large");
    auto r = std::shared_ptr<CoeffRing>(new CoeffRing());
    r->kind_ = RingKind::PrimeField;
    r->p_ = p;
    return r;
}

RingPtr CoeffRing::poly(const RingPtr& base, std::vector<std::string> vars) {
    if (!base) throw Error("poly: null base ring");
    if (base->kind_ == RingKind::Poly) throw Error("poly: base ring may not itself be a polynomial ring");
    if (vars.empty()) throw Error("poly: at least one generator required");
    auto r = std::shared_ptr<CoeffRing>(new CoeffRing());
    r->kind_ = RingKind::Poly;
    r->p_ = base->p_;
    r->base_ = base;
    r->names_ = base->names_;
    r->laurent_ = base->laurent_;
    for (auto& v : vars) {
        r->names_.push_back(std::move(v));
        r->laurent_.push_back(false);
    }
    for (std::size_t i = 0; i < r->names_.size(); ++i) {
        if (!valid_identifier(r->names_[i])) throw Error("ring generator name '" + r->names_[i] + "' is not an identifier");
        for (std::size_t j = 0; j < i; ++j)
            if (r->names_[i] == r->names_[j]) throw Error("duplicate ring generator '" + r->names_[i] + "'");
    }
    return r;
}

RingPtr CoeffRing::laurent(const RingPtr& base, std::string var) {
    if (!base) throw Error("laurent: null base ring");
    if (!base->is_field()) throw Error("laurent: base ring must be QQ or GF(p)");
    if (!valid_identifier(var)) throw Error("ring generator name '" + var + "' is not an identifier");
    auto r = std::shared_ptr<CoeffRing>(new CoeffRing());
    r->kind_ = RingKind::Laurent;
    r->p_ = base->p_;
    r->base_ = base;
    r->names_ = {std::move(var)};
    r->laurent_ = {true};
    return r;
}

std::optional<std::size_t> CoeffRing::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::string CoeffRing::to_string() const {
    switch (kind_) {
        case RingKind::Rationals: return "QQ";
        case RingKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
        case RingKind::Laurent: return base_->to_string() + "[" + names_[0] + "^+-1]";
        case RingKind::Poly: {
            std::string s = base_->to_string() + "[";
            for (std::size_t i = base_->num_gens(); i < names_.size(); ++i) {
                if (i > base_->num_gens()) s += ",";
                s += names_[i];
            }
            return s + "]";
        }
    }
    return "?";
}

bool CoeffRing::operator==(const CoeffRing& o) const {
    if (kind_ != o.kind_ || p_ != o.p_ || names_ != o.names_ || laurent_ != o.laurent_) return false;
    if (static_cast<bool>(base_) != static_cast<bool>(o.base_)) return false;
    return !base_ || *base_ == *o.base_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

void CoeffRing::normalize(mpq_class& s) const {
    if (p_ == 0) {
        s.canonicalize();
        return;
    }
    mpz_class num = s.get_num() % p_;
    if (num < 0) num += p_;
    if (s.get_den() != 1) {
        mpz_class den = s.get_den() % p_;
        mpz_class inv;
        if (den == 0 || mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
            throw DomainError("denominator divisible by the characteristic " + std::to_string(p_));
        num = (num * inv) % p_;
    }
    s = mpq_class(num);
}

mpq_class CoeffRing::scalar(const mpq_class& s) const {
    mpq_class r = s;
    normalize(r);
    return r;
}

mpq_class CoeffRing::scalar_inverse(const mpq_class& s) const {
    if (s == 0) throw DomainError("inverse of zero");
    mpq_class r = 1 / s;
    normalize(r);
    return r;
}

// ---------------------------------------------------------------------------

CoeffElem::CoeffElem(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw Error("CoeffElem: null ring");
}

CoeffElem::CoeffElem(RingPtr ring, long value) : CoeffElem(std::move(ring), mpq_class(value)) {}

CoeffElem::CoeffElem(RingPtr ring, const mpq_class& value) : CoeffElem(std::move(ring)) {
    mpq_class s = ring_->scalar(value);
    if (s != 0) terms_.emplace(Exps(ring_->num_gens(), 0), std::move(s));
}

CoeffElem CoeffElem::generator(RingPtr ring, std::size_t index) {
    if (index >= ring->num_gens()) throw Error("generator index out of range");
    Exps e(ring->num_gens(), 0);
    e[index] = 1;
    return monomial(std::move(ring), std::move(e), 1);
}

CoeffElem CoeffElem::generator(RingPtr ring, const std::string& name) {
    auto idx = ring->gen_index(name);
    if (!idx) throw Error("ring " + ring->to_string() + " has no generator '" + name + "'");
    return generator(std::move(ring), *idx);
}

CoeffElem CoeffElem::monomial(RingPtr ring, Exps exps, const mpq_class& scalar) {
    CoeffElem r(std::move(ring));
    if (exps.size() != r.ring_->num_gens()) throw Error("monomial: exponent vector has wrong length");
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] < 0 && !r.ring_->gen_is_laurent(i))
            throw DomainError("negative exponent on polynomial generator '" + r.ring_->gen_name(i) + "'");
    mpq_class s = r.ring_->scalar(scalar);
    if (s != 0) r.terms_.emplace(std::move(exps), std::move(s));
    return r;
}

CoeffElem CoeffElem::from_terms(RingPtr ring, Terms terms) {
    CoeffElem r(std::move(ring));
    for (auto& [e, s] : terms) r += monomial(r.ring_, e, s);
    return r;
}

bool CoeffElem::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](auto v) { return v == 0; });
}

bool CoeffElem::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

mpq_class CoeffElem::constant_value() const {
    if (!is_constant()) throw DomainError("element " + to_string() + " is not a constant");
    return terms_.empty() ? mpq_class(0) : terms_.begin()->second;
}

int CoeffElem::degree() const {
    int best = 0;
    for (const auto& [e, s] : terms_) {
        int d = 0;
        for (auto v : e) d += v < 0 ? -v : v;
        best = std::max(best, d);
    }
    return best;
}

void CoeffElem::check_same(const CoeffElem& o, const char* op) const {
    if (!same_ring(ring_, o.ring_))
        throw RingMismatch(std::string(op) + ": elements of " + ring_->to_string() + " and " + o.ring_->to_string());
}

CoeffElem CoeffElem::operator-() const {
    CoeffElem r(ring_);
    for (const auto& [e, s] : terms_) {
        mpq_class v = -s;
        ring_->normalize(v);
        r.terms_.emplace(e, std::move(v));
    }
    return r;
}

CoeffElem& CoeffElem::operator+=(const CoeffElem& o) {
    check_same(o, "ring_add");
    for (const auto& [e, s] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, s);
        if (!inserted) {
            it->second += s;
            ring_->normalize(it->second);
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

CoeffElem& CoeffElem::operator-=(const CoeffElem& o) {
    return *this += -o;
}

CoeffElem operator*(const CoeffElem& a, const CoeffElem& b) {
    a.check_same(b, "ring_mul");
    CoeffElem r(a.ring_);
    CoeffElem::Exps e(a.ring_->num_gens());
    for (const auto& [ea, sa] : a.terms_) {
        for (const auto& [eb, sb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            mpq_class s = sa * sb;
            auto [it, inserted] = r.terms_.try_emplace(e, s);
            if (!inserted) it->second += s;
            a.ring_->normalize(it->second);
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

CoeffElem& CoeffElem::operator*=(const CoeffElem& o) {
    *this = *this * o;
    return *this;
}

CoeffElem CoeffElem::scaled(const mpq_class& s) const {
    return *this * CoeffElem(ring_, s);
}

CoeffElem CoeffElem::pow(std::int64_t e) const {
    if (e < 0) return unit_inverse().pow(-e);
    CoeffElem result(ring_, 1L);
    CoeffElem base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool CoeffElem::is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (!ring_->gen_is_laurent(i) && e[i] != 0) return false;
    return true;
}

CoeffElem CoeffElem::unit_inverse() const {
    if (!is_unit()) throw DomainError(to_string() + " is not a unit of " + ring_->to_string());
    const auto& [e, s] = *terms_.begin();
    Exps inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(ring_, std::move(inv), ring_->scalar_inverse(s));
}

bool CoeffElem::operator==(const CoeffElem& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

std::strong_ordering CoeffElem::operator<=>(const CoeffElem& o) const {
    if (terms_.size() != o.terms_.size()) return terms_.size() <=> o.terms_.size();
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (auto c = it->first <=> jt->first; c != 0) return c;
        if (it->second < jt->second) return std::strong_ordering::less;
        if (jt->second < it->second) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool CoeffElem::is_compound() const {
    return terms_.size() > 1;
}

std::string CoeffElem::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return print_before(a->first, b->first); });

    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, s] = *t;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->gen_name(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        const bool negative = s < 0;
        const mpq_class mag = negative ? mpq_class(-s) : s;
        std::string body;
        if (mono.empty())
            body = scalar_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = scalar_string(mag) + "*" + mono;
        if (first)
            out += (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

CoeffElem ring_add(const CoeffElem& a, const CoeffElem& b) { return a + b; }
CoeffElem ring_mul(const CoeffElem& a, const CoeffElem& b) { return a * b; }
bool is_unit(const CoeffElem& a) { return a.is_unit(); }
CoeffElem unit_inverse(const CoeffElem& a) { return a.unit_inverse(); }

// ---------------------------------------------------------------------------

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<CoeffElem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (source_->characteristic() != target_->characteristic())
        throw RingMismatch("ring map between different characteristics: " + source_->to_string() + " -> " +
                           target_->to_string());
    if (images_.size() != source_->num_gens())
        throw Error("ring map needs one image per generator of " + source_->to_string());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!same_ring(images_[i].ring(), target_))
            throw RingMismatch("image of '" + source_->gen_name(i) + "' is not in " + target_->to_string());
        if (source_->gen_is_laurent(i) && !images_[i].is_unit())
            throw DomainError("image of Laurent generator '" + source_->gen_name(i) + "' must be a unit, got " +
                              images_[i].to_string());
    }
}

RingMap RingMap::identity(const RingPtr& ring) {
    std::vector<CoeffElem> imgs;
    for (std::size_t i = 0; i < ring->num_gens(); ++i) imgs.push_back(CoeffElem::generator(ring, i));
    return RingMap(ring, ring, std::move(imgs));
}

bool RingMap::is_identity() const {
    if (!same_ring(source_, target_)) return false;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != CoeffElem::generator(source_, i)) return false;
    return true;
}

CoeffElem RingMap::apply(const CoeffElem& r) const {
    if (!same_ring(r.ring(), source_))
        throw RingMismatch("apply_map: element of " + r.ring()->to_string() + ", map defined on " +
                           source_->to_string());
    CoeffElem out(target_);
    // cache generator powers for this call
    std::vector<std::map<std::int32_t, CoeffElem>> powers(images_.size());
    for (const auto& [e, s] : r.terms()) {
        CoeffElem term(target_, s);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = powers[i].find(e[i]);
            if (it == powers[i].end()) it = powers[i].emplace(e[i], images_[i].pow(e[i])).first;
            term *= it->second;
        }
        out += term;
    }
    return out;
}

std::optional<bool> RingMap::structurally_injective() const {
    if (source_->is_field()) return true;  // field homomorphisms are injective
    if (is_identity()) return true;
    const std::size_t n = images_.size();
    // g -> c constant puts g - c in the kernel
    for (std::size_t g = 0; g < n; ++g)
        if (images_[g].is_constant()) return false;
    bool monomial_images = true;
    for (const auto& img : images_)
        if (img.terms().size() != 1) monomial_images = false;
    if (monomial_images && source_->num_gens() == target_->num_gens()) {
        // exponent matrix over QQ; nonsingular => distinct monomials stay distinct
        std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = images_[i].terms().begin()->first[j];
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n && rank < n; ++col) {
            std::size_t piv = rank;
            while (piv < n && m[piv][col] == 0) ++piv;
            if (piv == n) continue;
            std::swap(m[piv], m[rank]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == rank || m[r][col] == 0) continue;
                mpq_class f = m[r][col] / m[rank][col];
                for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[rank][c];
            }
            ++rank;
        }
        return rank == n;
    }
    // k[t] -> k[t], t -> f with f non-constant is injective
    if (source_->kind() == RingKind::Poly && n == 1 && !images_[0].is_constant()) return true;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

SigmaDerivation::SigmaDerivation(RingMap twist, std::vector<CoeffElem> images)
    : twist_(std::move(twist)), images_(std::move(images)) {
    if (!same_ring(twist_.source(), twist_.target()))
        throw Error("sigma-derivation must be twisted by an endomorphism");
    const auto& ring = twist_.source();
    if (images_.size() != ring->num_gens()) throw Error("derivation needs one image per generator of " + ring->to_string());
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (!same_ring(images_[i].ring(), ring))
            throw RingMismatch("derivation image of '" + ring->gen_name(i) + "' is not in " + ring->to_string());
}

SigmaDerivation SigmaDerivation::zero(RingMap twist) {
    const auto ring = twist.source();
    std::vector<CoeffElem> imgs(ring->num_gens(), CoeffElem(ring));
    return SigmaDerivation(std::move(twist), std::move(imgs));
}

bool SigmaDerivation::is_zero() const {
    return std::all_of(images_.begin(), images_.end(), [](const auto& e) { return e.is_zero(); });
}

CoeffElem SigmaDerivation::apply(const CoeffElem& r) const {
    const auto& ring = twist_.source();
    if (!same_ring(r.ring(), ring))
        throw RingMismatch("apply_derivation: element of " + r.ring()->to_string() + ", derivation on " +
                           ring->to_string());
    CoeffElem out(ring);
    if (is_zero()) return out;

    // d(g^-1) = -sigma(g)^-1 d(g) g^-1
    std::vector<std::optional<CoeffElem>> inv_images(images_.size());
    auto factor_delta = [&](std::size_t g, bool inverse) -> CoeffElem {
        if (!inverse) return images_[g];
        auto& slot = inv_images[g];
        if (!slot)
            slot = -(twist_.image(g).unit_inverse() * images_[g] * CoeffElem::generator(ring, g).unit_inverse());
        return *slot;
    };

    for (const auto& [e, s] : r.terms()) {
        // factor list f_1 ... f_m in generator order
        std::vector<std::pair<std::size_t, bool>> factors;
        for (std::size_t g = 0; g < e.size(); ++g)
            for (std::int32_t k = 0; k < (e[g] < 0 ? -e[g] : e[g]); ++k) factors.emplace_back(g, e[g] < 0);
        if (factors.empty()) continue;
        const std::size_t m = factors.size();
        // suffix products f_{k+1} ... f_m
        std::vector<CoeffElem> suffix(m + 1, CoeffElem(ring, 1L));
        for (std::size_t k = m; k-- > 0;) {
            const auto [g, inv] = factors[k];
            CoeffElem f = CoeffElem::generator(ring, g);
            suffix[k] = (inv ? f.unit_inverse() : f) * suffix[k + 1];
        }
        CoeffElem prefix_sigma(ring, 1L);
        CoeffElem acc(ring);
        for (std::size_t k = 0; k < m; ++k) {
            const auto [g, inv] = factors[k];
            acc += prefix_sigma * factor_delta(g, inv) * suffix[k + 1];
            const CoeffElem sg = inv ? twist_.image(g).unit_inverse() : twist_.image(g);
            prefix_sigma *= sg;
        }
        out += acc.scaled(s);
    }
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> SigmaDerivation::leibniz_defect() const {
    const auto& ring = twist_.source();
    for (std::size_t a = 0; a < images_.size(); ++a) {
        for (std::size_t b = a + 1; b < images_.size(); ++b) {
            const CoeffElem ga = CoeffElem::generator(ring, a);
            const CoeffElem gb = CoeffElem::generator(ring, b);
            const CoeffElem ab = twist_.image(a) * images_[b] + images_[a] * gb;
            const CoeffElem ba = twist_.image(b) * images_[a] + images_[b] * ga;
            if (ab != ba) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

CoeffElem apply_map(const RingMap& m, const CoeffElem& r) { return m.apply(r); }
CoeffElem apply_derivation(const SigmaDerivation& d, const CoeffElem& r) { return d.apply(r); }

// ---------------------------------------------------------------------------

namespace {

mpq_class random_scalar(const CoeffRing& ring, Rng& rng) {
    if (ring.characteristic() != 0) return mpq_class(rng.uniform(0, ring.characteristic() - 1));
    mpq_class s(rng.uniform(-6, 6), rng.uniform(1, 4));
    s.canonicalize();
    return s;
}

mpq_class random_nonzero_scalar(const CoeffRing& ring, Rng& rng) {
    if (ring.characteristic() != 0) return mpq_class(rng.uniform(1, ring.characteristic() - 1));
    std::int64_t num = rng.uniform(1, 6);
    if (rng.coin()) num = -num;
    mpq_class s(num, rng.uniform(1, 4));
    s.canonicalize();
    return s;
}

CoeffElem::Exps random_exps(const CoeffRing& ring, int degree_bound, Rng& rng, bool units_only) {
    CoeffElem::Exps e(ring.num_gens(), 0);
    std::vector<std::size_t> poly;
    int left = degree_bound;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (ring.gen_is_laurent(i)) {
            e[i] = static_cast<std::int32_t>(rng.uniform(-left, left));
            if (!units_only) left -= e[i] < 0 ? -e[i] : e[i];
        } else {
            poly.push_back(i);
        }
    }
    if (units_only) return e;
    // the remaining budget is shared by the polynomial generators in random order
    for (std::size_t k = poly.size(); k > 0; --k) {
        const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1));
        std::swap(poly[pick], poly[k - 1]);
        const auto g = poly[k - 1];
        e[g] = static_cast<std::int32_t>(rng.uniform(0, left));
        left -= e[g];
    }
    return e;
}

}  // namespace

CoeffElem random_elem(const RingPtr& ring, int degree_bound, Rng& rng) {
    if (degree_bound < 0) throw Error("random_elem: negative degree bound");
    CoeffElem out(ring);
    const auto nterms = rng.uniform(1, ring->is_field() ? 1 : 3);
    for (std::int64_t t = 0; t < nterms; ++t)
        out += CoeffElem::monomial(ring, random_exps(*ring, degree_bound, rng, false), random_scalar(*ring, rng));
    return out;
}

CoeffElem random_elem(const RingPtr& ring, int degree_bound, std::uint64_t seed) {
    Rng rng(seed, "random_elem");
    return random_elem(ring, degree_bound, rng);
}

CoeffElem random_nonzero_elem(const RingPtr& ring, int degree_bound, Rng& rng) {
    for (;;) {
        CoeffElem e = random_elem(ring, degree_bound, rng);
        if (!e.is_zero()) return e;
    }
}

CoeffElem random_unit(const RingPtr& ring, int degree_bound, Rng& rng) {
    return CoeffElem::monomial(ring, random_exps(*ring, degree_bound, rng, true), random_nonzero_scalar(*ring, rng));
}

}  // namespace skewpbw
