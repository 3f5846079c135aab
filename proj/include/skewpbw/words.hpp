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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewpbw/coeff.hpp"

namespace skewpbw {

/// Extension variable x_index; indices are 0-based internally and printed 1-based.
struct Var {
    std::size_t index;
    auto operator<=>(const Var&) const = default;
};

/// A letter of the free monoid over X u R.
class Letter {
public:
    Letter(Var v) : value_(v) {}
    Letter(CoeffElem r) : value_(std::move(r)) {}

    bool is_var() const { return std::holds_alternative<Var>(value_); }
    bool is_scalar() const { return !is_var(); }
    std::size_t var() const { return std::get<Var>(value_).index; }
    const CoeffElem& scalar() const { return std::get<CoeffElem>(value_); }

    bool operator==(const Letter& o) const;
    std::strong_ordering operator<=>(const Letter& o) const;

private:
    std::variant<Var, CoeffElem> value_;
};

using Word = std::vector<Letter>;

/// (number of variables, variable-variable inversions, variable-before-scalar pairs),
/// ordered lexicographically.
struct Complexity {
    std::uint64_t vars = 0;
    std::uint64_t var_inversions = 0;
    std::uint64_t scalar_inversions = 0;
    auto operator<=>(const Complexity&) const = default;
};

Complexity complexity(const Word& w);
bool is_standard(const Word& w);

enum class ViolationKind { ScalarSwap, VarSwap };

/// The adjacent pair (x_j, s) at `position`, `position + 1` whose right
/// context w[position+1..] is standard.
struct Violation {
    std::size_t position;
    ViolationKind kind;
};

std::optional<Violation> rightmost_violation(const Word& w);

std::string to_string(const Word& w);

/// Element of the free ring Z<X u R>: integer combination of distinct words.
class FreeElem {
public:
    using Terms = std::map<Word, std::int64_t>;

    FreeElem() = default;
    static FreeElem word(Word w, std::int64_t multiplicity = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& w, std::int64_t m);
    FreeElem& operator+=(const FreeElem& o);
    FreeElem& operator-=(const FreeElem& o);
    FreeElem scaled(std::int64_t m) const;
    friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
    friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }
    bool operator==(const FreeElem& o) const = default;

    std::string to_string() const;

private:
    Terms terms_;
};

FreeElem free_add(const FreeElem& u, const FreeElem& v);
/// Bilinear concatenation product.
FreeElem free_concat(const FreeElem& u, const FreeElem& v);
Word concat(const Word& a, const Word& b);

}  // namespace skewpbw
