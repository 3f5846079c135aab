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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewpbw/rng.hpp"

namespace skewpbw {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

/// A mathematically undefined request: inverting a non-unit, dividing by p, ...
class DomainError : public Error {
public:
    using Error::Error;
};

enum class RingKind { Rationals, PrimeField, Poly, Laurent };

class CoeffRing;
using RingPtr = std::shared_ptr<const CoeffRing>;

/// Exact commutative coefficient ring.
///
/// Every supported ring is a (Laurent) polynomial ring over a prime field
/// F in a flat list of generators: Laurent generators first (at most one),
/// then ordinary polynomial generators. QQ and GF(p) have no generators.
class CoeffRing {
public:
    static RingPtr rationals();
    static RingPtr prime_field(std::int64_t p);
    static RingPtr poly(const RingPtr& base, std::vector<std::string> vars);
    static RingPtr laurent(const RingPtr& base, std::string var);

    RingKind kind() const { return kind_; }
    const RingPtr& base() const { return base_; }
    /// 0 for QQ-based rings, p otherwise.
    std::int64_t characteristic() const { return p_; }
    bool is_field() const { return names_.empty(); }

    std::size_t num_gens() const { return names_.size(); }
    const std::string& gen_name(std::size_t i) const { return names_.at(i); }
    bool gen_is_laurent(std::size_t i) const { return laurent_.at(i); }
    std::optional<std::size_t> gen_index(const std::string& name) const;
    const std::vector<std::string>& gen_names() const { return names_; }

    /// Short human form: QQ, GF(5), QQ[t], QQ[q^+-1], QQ[q^+-1][t].
    std::string to_string() const;

    bool operator==(const CoeffRing& other) const;

    /// Reduce a scalar into canonical form for the base field.
    void normalize(mpq_class& s) const;
    /// Map an arbitrary rational into the base field (a/b -> a*b^-1 mod p).
    mpq_class scalar(const mpq_class& s) const;
    mpq_class scalar_inverse(const mpq_class& s) const;

private:
    CoeffRing() = default;

    RingKind kind_ = RingKind::Rationals;
    std::int64_t p_ = 0;
    RingPtr base_;
    std::vector<std::string> names_;
    std::vector<bool> laurent_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
bool is_prime(std::int64_t p);

/// Element of a CoeffRing in canonical sparse form.
class CoeffElem {
public:
    using Exps = std::vector<std::int32_t>;
    using Terms = std::map<Exps, mpq_class>;

    explicit CoeffElem(RingPtr ring);
    CoeffElem(RingPtr ring, long value);
    CoeffElem(RingPtr ring, const mpq_class& value);

    static CoeffElem generator(RingPtr ring, std::size_t index);
    static CoeffElem generator(RingPtr ring, const std::string& name);
    static CoeffElem monomial(RingPtr ring, Exps exps, const mpq_class& scalar);
    static CoeffElem from_terms(RingPtr ring, Terms terms);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    /// Scalar part of a constant element; throws if not constant.
    mpq_class constant_value() const;
    /// Total degree over the non-Laurent generators plus |exponent| of the Laurent ones.
    int degree() const;

    CoeffElem operator-() const;
    CoeffElem& operator+=(const CoeffElem& o);
    CoeffElem& operator-=(const CoeffElem& o);
    CoeffElem& operator*=(const CoeffElem& o);
    friend CoeffElem operator+(CoeffElem a, const CoeffElem& b) { return a += b; }
    friend CoeffElem operator-(CoeffElem a, const CoeffElem& b) { return a -= b; }
    friend CoeffElem operator*(const CoeffElem& a, const CoeffElem& b);
    CoeffElem scaled(const mpq_class& s) const;

    /// e may be negative only for units.
    CoeffElem pow(std::int64_t e) const;

    bool is_unit() const;
    CoeffElem unit_inverse() const;

    bool operator==(const CoeffElem& o) const;
    /// Total order within a ring, used only for container keys.
    std::strong_ordering operator<=>(const CoeffElem& o) const;

    std::string to_string() const;
    /// True when printing needs parentheses inside a product.
    bool is_compound() const;

private:
    void check_same(const CoeffElem& o, const char* op) const;

    RingPtr ring_;
    Terms terms_;
};

CoeffElem ring_add(const CoeffElem& a, const CoeffElem& b);
CoeffElem ring_mul(const CoeffElem& a, const CoeffElem& b);
bool is_unit(const CoeffElem& a);
CoeffElem unit_inverse(const CoeffElem& a);

/// Ring homomorphism source -> target fixed by generator images.
/// With source == target this is an endomorphism (the sigma_i).
class RingMap {
public:
    RingMap(RingPtr source, RingPtr target, std::vector<CoeffElem> images);
    static RingMap identity(const RingPtr& ring);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const CoeffElem& image(std::size_t gen) const { return images_.at(gen); }
    const std::vector<CoeffElem>& images() const { return images_; }
    bool is_identity() const;

    CoeffElem apply(const CoeffElem& r) const;
    CoeffElem operator()(const CoeffElem& r) const { return apply(r); }

    /// Injectivity decided from structure alone, when possible: identity
    /// maps, monomial maps with nonsingular exponent matrix, and
    /// one-generator polynomial rings with a non-constant image.
    std::optional<bool> structurally_injective() const;

private:
    RingPtr source_;
    RingPtr target_;
    std::vector<CoeffElem> images_;
};

/// sigma-derivation: additive, delta(rs) = sigma(r) delta(s) + delta(r) s.
///
/// The map is extended from generator images through the twisted Leibniz
/// rule applied to the canonical factorisation of each monomial. Whether
/// that extension is well defined (independent of factor order) is a
/// property of the data; see leibniz_defect().
class SigmaDerivation {
public:
    SigmaDerivation(RingMap twist, std::vector<CoeffElem> images);
    static SigmaDerivation zero(RingMap twist);

    const RingMap& twist() const { return twist_; }
    const CoeffElem& image(std::size_t gen) const { return images_.at(gen); }
    const std::vector<CoeffElem>& images() const { return images_; }
    bool is_zero() const;

    CoeffElem apply(const CoeffElem& r) const;
    CoeffElem operator()(const CoeffElem& r) const { return apply(r); }

    /// First generator pair (a, b) where the extension would depend on the
    /// order of the factors, i.e. sigma(a)d(b) + d(a)b != sigma(b)d(a) + d(b)a.
    std::optional<std::pair<std::size_t, std::size_t>> leibniz_defect() const;

private:
    RingMap twist_;
    std::vector<CoeffElem> images_;
};

CoeffElem apply_map(const RingMap& m, const CoeffElem& r);
CoeffElem apply_derivation(const SigmaDerivation& d, const CoeffElem& r);

/// Pseudorandom element with at most three terms and degree <= degree_bound.
CoeffElem random_elem(const RingPtr& ring, int degree_bound, Rng& rng);
CoeffElem random_elem(const RingPtr& ring, int degree_bound, std::uint64_t seed);
CoeffElem random_nonzero_elem(const RingPtr& ring, int degree_bound, Rng& rng);
/// Random unit: nonzero scalar times a Laurent monomial.
CoeffElem random_unit(const RingPtr& ring, int degree_bound, Rng& rng);

}  // namespace skewpbw
