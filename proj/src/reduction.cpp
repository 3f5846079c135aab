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

#include "skewpbw/reduction.hpp"

namespace skewpbw {

namespace {

constexpr std::size_t kMemoLimit = 1U << 18;

}  // namespace

Reducer::Reducer(PresentationPtr p, ReduceOptions opts) : p_(std::move(p)), opts_(opts) {
    if (!p_) throw Error("Reducer: null presentation");
}

void Reducer::check_word(const Word& w) const {
    if (w.size() > opts_.max_word_length)
        throw Error("word of length " + std::to_string(w.size()) + " exceeds the reduction cap of " +
                    std::to_string(opts_.max_word_length) + " letters");
    for (const auto& l : w) {
        if (l.is_var()) {
            if (l.var() >= p_->n()) throw Error("variable x" + std::to_string(l.var() + 1) + " out of range");
        } else if (!same_ring(l.scalar().ring(), p_->ring())) {
            throw RingMismatch("scalar letter from " + l.scalar().ring()->to_string());
        }
    }
}

FreeElem Reducer::p(const Word& w, ReductionTrace* trace) {
    check_word(w);
    if (memo_.size() > kMemoLimit) memo_.clear();
    return reduce(w, trace, 0);
}

FreeElem Reducer::p(const FreeElem& e, ReductionTrace* trace) {
    FreeElem out;
    for (const auto& [w, m] : e.terms()) out += p(w, trace).scaled(m);
    return out;
}

Poly Reducer::h(const Word& w, ReductionTrace* trace) {
    return collapse_q(p(w, trace), p_);
}

Poly Reducer::h(const FreeElem& e, ReductionTrace* trace) {
    return collapse_q(p(e, trace), p_);
}

const FreeElem& Reducer::reduce(const Word& w, ReductionTrace* trace, std::uint64_t depth) {
    if (trace && depth > trace->max_depth) trace->max_depth = depth;
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    const auto violation = rightmost_violation(w);
    if (!violation) return memo_.emplace(w, FreeElem::word(w)).first->second;

    const std::size_t pos = violation->position;
    const Complexity parent = trace ? complexity(w) : Complexity{};
    FreeElem result;

    // v1 . middle . v2 with the pair at [pos, pos + 2) replaced by `middle`
    auto emit = [&](std::initializer_list<Letter> middle) {
        for (const auto& l : middle)
            if (opts_.prune_zero_scalars && l.is_scalar() && l.scalar().is_zero()) return;
        Word child;
        child.reserve(w.size() + 1);
        child.insert(child.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        child.insert(child.end(), middle.begin(), middle.end());
        child.insert(child.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
        if (trace) {
            ++trace->steps;
            if (!(complexity(child) < parent)) trace->monotone = false;
        }
        result += reduce(child, trace, depth + 1);
    };

    const std::size_t j = w[pos].var();
    if (violation->kind == ViolationKind::ScalarSwap) {
        // x_j r -> sigma_j(r) x_j + delta_j(r)
        const CoeffElem& r = w[pos + 1].scalar();
        emit({Letter(p_->sigma(j).apply(r)), Letter(Var{j})});
        emit({Letter(p_->delta(j).apply(r))});
    } else {
        // x_j x_i -> c_ij x_i x_j + sum_k a_ij^(k) x_k + d_ij, i < j
        const std::size_t i = w[pos + 1].var();
        const Relation& rel = p_->relation(i, j);
        emit({Letter(rel.c), Letter(Var{i}), Letter(Var{j})});
        for (std::size_t k = 0; k < p_->n(); ++k) emit({Letter(rel.a[k]), Letter(Var{k})});
        emit({Letter(rel.d)});
    }
    return memo_.insert_or_assign(w, std::move(result)).first->second;
}

FreeElem reduce_p(const Word& w, const PresentationPtr& p) {
    Reducer r(p);
    return r.p(w);
}

Poly collapse_q(const FreeElem& e, const PresentationPtr& p) {
    Poly out(p);
    for (const auto& [w, m] : e.terms()) {
        if (!is_standard(w)) throw Error("collapse_q: word " + to_string(w) + " is not standard");
        CoeffElem coeff(p->ring(), static_cast<long>(m));
        Monomial mono(p->n(), 0);
        for (const auto& l : w) {
            if (l.is_scalar()) {
                coeff *= l.scalar();
            } else {
                if (l.var() >= p->n()) throw Error("variable out of range in collapse_q");
                if (++mono[l.var()] >= kExponentCap) throw Error("exponent cap exceeded in collapse_q");
            }
        }
        out.add_term(mono, coeff);
    }
    return out;
}

FreeElem section_t(const Poly& f) {
    FreeElem out;
    for (const auto& [m, c] : f.terms()) {
        Word w;
        w.reserve(1 + total_degree(m));
        w.emplace_back(c);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint32_t k = 0; k < m[i]; ++k) w.emplace_back(Var{i});
        out.add_term(w, 1);
    }
    return out;
}

Poly normalize_h(const FreeElem& e, const PresentationPtr& p) {
    Reducer r(p);
    return r.h(e);
}

Poly normalize_h(const Word& w, const PresentationPtr& p) {
    Reducer r(p);
    return r.h(w);
}

}  // namespace skewpbw
