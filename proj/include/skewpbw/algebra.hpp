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

#include <map>
#include <mutex>
#include <utility>

#include "skewpbw/poly.hpp"
#include "skewpbw/presentation.hpp"

namespace skewpbw {

/// The skew PBW extension as a computable ring.
///
/// star() straightens products with memoised "variable past monomial"
/// steps. It does not consult the word-level reduction at all; the two are
/// tied together only by the oracle cross-check (star_oracle, tests). The
/// results are meaningful only for presentations that pass check_all().
class Algebra {
public:
    explicit Algebra(PresentationPtr p);

    const PresentationPtr& presentation() const { return p_; }
    std::size_t n() const { return p_->n(); }

    Poly zero() const { return Poly(p_); }
    Poly one() const { return Poly::one(p_); }
    Poly var(std::size_t i) const { return Poly::var(p_, i); }
    Poly constant(const CoeffElem& r) const { return Poly::constant(p_, r); }
    Poly monomial(const Monomial& m) const { return Poly::term(p_, m, p_->one()); }

    Poly star(const Poly& f, const Poly& g) const;
    /// h(t(f) t(g)) through the word-level reduction.
    Poly star_oracle(const Poly& f, const Poly& g) const;
    Poly pow(const Poly& f, std::uint32_t e) const;

    /// x_i * g.
    Poly left_var_mul(std::size_t i, const Poly& g) const;
    /// x^alpha * g, applying x_n first and x_1 last.
    Poly left_mono_mul(const Monomial& alpha, const Poly& g) const;

    /// sigma^alpha(r) = sigma_1^a1 o ... o sigma_n^an (r).
    CoeffElem sigma_pow(const Monomial& alpha, const CoeffElem& r) const;

    struct VarCoeffSplit {
        CoeffElem r_alpha;
        Poly tail;
    };
    /// x^alpha r = r_alpha x^alpha + tail, deg(tail) < |alpha|. r must be nonzero.
    VarCoeffSplit decompose_var_coeff(const Monomial& alpha, const CoeffElem& r) const;

    struct MonoSplit {
        CoeffElem c;
        Poly tail;
    };
    /// x^alpha x^beta = c x^(alpha+beta) + tail with c a unit; throws if c is not a unit.
    MonoSplit monomial_product(const Monomial& alpha, const Monomial& beta) const;

    std::size_t memo_size() const;

private:
    /// x_i * x^beta, memoised.
    const Poly& var_times_mono(std::size_t i, const Monomial& beta) const;
    Poly var_times_mono_uncached(std::size_t i, const Monomial& beta) const;

    PresentationPtr p_;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<std::size_t, Monomial>, Poly> memo_;
};

std::optional<std::uint64_t> deg(const Poly& f);

}  // namespace skewpbw
