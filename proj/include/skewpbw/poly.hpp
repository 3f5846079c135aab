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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/coeff.hpp"
#include "skewpbw/presentation.hpp"

namespace skewpbw {

/// Exponent vector alpha of the standard monomial x_1^alpha_1 ... x_n^alpha_n.
using Monomial = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kExponentCap = 1U << 16;

std::uint64_t total_degree(const Monomial& m);
Monomial mono_add(const Monomial& a, const Monomial& b);
Monomial unit_vector(std::size_t n, std::size_t i);
/// "x1^2*x3", or "1" for the empty monomial.
std::string mono_string(const Monomial& m);

/// Element of the free left R-module on the standard monomials: the
/// underlying module of the extension. Multiplication lives in Algebra.
class Poly {
public:
    using Terms = std::map<Monomial, CoeffElem>;

    explicit Poly(PresentationPtr p);
    static Poly constant(PresentationPtr p, const CoeffElem& r);
    static Poly term(PresentationPtr p, Monomial m, const CoeffElem& r);
    static Poly var(PresentationPtr p, std::size_t i);
    static Poly one(PresentationPtr p);

    const PresentationPtr& presentation() const { return p_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CoeffElem coeff(const Monomial& m) const;

    /// Maximum |alpha| over the support; nullopt for the zero polynomial.
    std::optional<std::uint64_t> deg() const;

    void add_term(const Monomial& m, const CoeffElem& r);
    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    /// Left module action r * f.
    Poly scaled(const CoeffElem& r) const;

    bool operator==(const Poly& o) const;

    /// Canonical text: degree-then-lex descending, "x1^2*x3", coefficient 1 elided.
    std::string to_string() const;

private:
    void check_same(const Poly& o) const;

    PresentationPtr p_;
    Terms terms_;
};

Poly add(const Poly& f, const Poly& g);
Poly scalar_mul(const CoeffElem& r, const Poly& f);

/// Monomial of total degree exactly `degree` (n > 0), exponents spread at random.
Monomial random_monomial(std::size_t n, std::uint32_t degree, Rng& rng);
/// Sparse random element: 1..max_terms terms of degree <= max_degree. May be zero
/// when terms cancel.
Poly random_poly(const PresentationPtr& p, std::uint32_t max_degree, int max_terms, int coeff_degree, Rng& rng);

}  // namespace skewpbw
