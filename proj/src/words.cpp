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

#include "skewpbw/words.hpp"

namespace skewpbw {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("free-ring multiplicity overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("free-ring multiplicity overflow");
    return r;
}

}  // namespace

bool Letter::operator==(const Letter& o) const {
    if (is_var() != o.is_var()) return false;
    return is_var() ? var() == o.var() : scalar() == o.scalar();
}

std::strong_ordering Letter::operator<=>(const Letter& o) const {
    if (is_var() != o.is_var()) return is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (is_var()) return var() <=> o.var();
    return scalar() <=> o.scalar();
}

Complexity complexity(const Word& w) {
    Complexity c;
    // scan left to right, counting variables seen so far by index
    std::map<std::size_t, std::uint64_t> seen;
    for (const auto& l : w) {
        if (l.is_var()) {
            for (auto it = seen.upper_bound(l.var()); it != seen.end(); ++it) c.var_inversions += it->second;
            ++seen[l.var()];
            ++c.vars;
        } else {
            c.scalar_inversions += c.vars;
        }
    }
    return c;
}

bool is_standard(const Word& w) {
    bool in_vars = false;
    std::size_t last = 0;
    for (const auto& l : w) {
        if (l.is_scalar()) {
            if (in_vars) return false;
        } else {
            if (in_vars && l.var() < last) return false;
            in_vars = true;
            last = l.var();
        }
    }
    return true;
}

std::optional<Violation> rightmost_violation(const Word& w) {
    // Grow the longest standard suffix w[start..] leftwards. A standard suffix
    // contains a scalar iff its first letter is one, so only the letter at
    // `start` decides whether a variable may be prepended.
    for (std::size_t start = w.size(); start > 1; --start) {
        const Letter& l = w[start - 2];
        const Letter& next = w[start - 1];
        if (l.is_scalar()) continue;
        if (next.is_scalar()) return Violation{start - 2, ViolationKind::ScalarSwap};
        if (next.var() < l.var()) return Violation{start - 2, ViolationKind::VarSwap};
    }
    return std::nullopt;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "·";
        if (w[i].is_var())
            s += "x" + std::to_string(w[i].var() + 1);
        else if (w[i].scalar().is_compound())
            s += "(" + w[i].scalar().to_string() + ")";
        else
            s += w[i].scalar().to_string();
    }
    return s;
}

FreeElem FreeElem::word(Word w, std::int64_t multiplicity) {
    FreeElem e;
    e.add_term(w, multiplicity);
    return e;
}

void FreeElem::add_term(const Word& w, std::int64_t m) {
    if (m == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, m);
    if (!inserted) {
        it->second = checked_add(it->second, m);
        if (it->second == 0) terms_.erase(it);
    }
}

FreeElem& FreeElem::operator+=(const FreeElem& o) {
    for (const auto& [w, m] : o.terms_) add_term(w, m);
    return *this;
}

FreeElem& FreeElem::operator-=(const FreeElem& o) {
    for (const auto& [w, m] : o.terms_) add_term(w, checked_mul(m, -1));
    return *this;
}

FreeElem FreeElem::scaled(std::int64_t m) const {
    FreeElem r;
    if (m == 0) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, checked_mul(k, m));
    return r;
}

std::string FreeElem::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, m] : terms_) {
        const std::int64_t mag = m < 0 ? -m : m;
        if (first)
            s += m < 0 ? "-" : "";
        else
            s += m < 0 ? " - " : " + ";
        if (mag != 1) s += std::to_string(mag) + "·";
        s += skewpbw::to_string(w);
        first = false;
    }
    return s;
}

FreeElem free_add(const FreeElem& u, const FreeElem& v) { return u + v; }

Word concat(const Word& a, const Word& b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

FreeElem free_concat(const FreeElem& u, const FreeElem& v) {
    FreeElem r;
    for (const auto& [a, m] : u.terms())
        for (const auto& [b, k] : v.terms()) r.add_term(concat(a, b), checked_mul(m, k));
    return r;
}

}  // namespace skewpbw
