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

#include "skewpbw/algebra.hpp"

#include "skewpbw/reduction.hpp"

namespace skewpbw {

Algebra::Algebra(PresentationPtr p) : p_(std::move(p)) {
    if (!p_) throw Error("Algebra: null presentation");
}

std::size_t Algebra::memo_size() const {
    std::lock_guard lock(mu_);
    return memo_.size();
}

const Poly& Algebra::var_times_mono(std::size_t i, const Monomial& beta) const {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(i, beta);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Poly value = var_times_mono_uncached(i, beta);
    return memo_.insert_or_assign(std::move(key), std::move(value)).first->second;
}

Poly Algebra::var_times_mono_uncached(std::size_t k, const Monomial& beta) const {
    // smallest index present in beta
    std::size_t m = 0;
    while (m < beta.size() && beta[m] == 0) ++m;
    if (m == beta.size() || k <= m) return Poly::term(p_, mono_add(beta, unit_vector(n(), k)), p_->one());

    // x_k x_m x^rest with m < k:
    //   (c_mk x_m x_k + sum_l a_mk^(l) x_l + d_mk) x^rest
    Monomial rest = beta;
    --rest[m];
    const Relation& rel = p_->relation(m, k);
    const Poly rest_poly = Poly::term(p_, rest, p_->one());

    Poly out = left_var_mul(m, var_times_mono(k, rest)).scaled(rel.c);
    for (std::size_t l = 0; l < n(); ++l)
        if (!rel.a[l].is_zero()) out += var_times_mono(l, rest).scaled(rel.a[l]);
    if (!rel.d.is_zero()) out += rest_poly.scaled(rel.d);
    return out;
}

Poly Algebra::left_var_mul(std::size_t i, const Poly& g) const {
    if (i >= n()) throw Error("variable index out of range");
    // x_i s x^beta = sigma_i(s) (x_i x^beta) + delta_i(s) x^beta
    Poly out(p_);
    const RingMap& sigma = p_->sigma(i);
    const SigmaDerivation& delta = p_->delta(i);
    const bool trivial_sigma = sigma.is_identity();
    const bool zero_delta = delta.is_zero();
    for (const auto& [beta, s] : g.terms()) {
        const CoeffElem ss = trivial_sigma ? s : sigma.apply(s);
        out += var_times_mono(i, beta).scaled(ss);
        if (!zero_delta) {
            CoeffElem ds = delta.apply(s);
            if (!ds.is_zero()) out.add_term(beta, ds);
        }
    }
    return out;
}

Poly Algebra::left_mono_mul(const Monomial& alpha, const Poly& g) const {
    if (alpha.size() != n()) throw Error("monomial length does not match the presentation");
    Poly out = g;
    for (std::size_t i = n(); i-- > 0;)
        for (std::uint32_t e = 0; e < alpha[i]; ++e) out = left_var_mul(i, out);
    return out;
}

Poly Algebra::star(const Poly& f, const Poly& g) const {
    if (f.presentation()->id() != p_->id() || g.presentation()->id() != p_->id())
        throw RingMismatch("star: operand from a different presentation");
    Poly out(p_);
    for (const auto& [alpha, r] : f.terms()) out += left_mono_mul(alpha, g).scaled(r);
    return out;
}

Poly Algebra::star_oracle(const Poly& f, const Poly& g) const {
    if (f.presentation()->id() != p_->id() || g.presentation()->id() != p_->id())
        throw RingMismatch("star_oracle: operand from a different presentation");
    Reducer r(p_, ReduceOptions{.prune_zero_scalars = true, .max_word_length = 64});
    return r.h(free_concat(section_t(f), section_t(g)));
}

Poly Algebra::pow(const Poly& f, std::uint32_t e) const {
    Poly out = one();
    for (std::uint32_t k = 0; k < e; ++k) out = star(out, f);
    return out;
}

CoeffElem Algebra::sigma_pow(const Monomial& alpha, const CoeffElem& r) const {
    if (alpha.size() != n()) throw Error("monomial length does not match the presentation");
    CoeffElem out = r;
    for (std::size_t i = n(); i-- > 0;)
        for (std::uint32_t e = 0; e < alpha[i]; ++e) out = p_->sigma(i).apply(out);
    return out;
}

Algebra::VarCoeffSplit Algebra::decompose_var_coeff(const Monomial& alpha, const CoeffElem& r) const {
    if (r.is_zero()) throw DomainError("decompose_var_coeff: r must be nonzero");
    VarCoeffSplit out{sigma_pow(alpha, r), Poly(p_)};
    out.tail = left_mono_mul(alpha, constant(r));
    out.tail.add_term(alpha, -out.r_alpha);
    return out;
}

Algebra::MonoSplit Algebra::monomial_product(const Monomial& alpha, const Monomial& beta) const {
    const Monomial sum = mono_add(alpha, beta);
    Poly prod = left_mono_mul(alpha, monomial(beta));
    MonoSplit out{prod.coeff(sum), std::move(prod)};
    out.tail.add_term(sum, -out.c);
    if (!out.c.is_unit())
        throw Error("monomial_product: leading coefficient " + out.c.to_string() + " of " + mono_string(alpha) + " * " +
                    mono_string(beta) + " is not a unit; the presentation is inconsistent");
    return out;
}

std::optional<std::uint64_t> deg(const Poly& f) { return f.deg(); }

}  // namespace skewpbw
