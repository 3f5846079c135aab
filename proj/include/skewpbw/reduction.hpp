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

#include "skewpbw/poly.hpp"
#include "skewpbw/presentation.hpp"
#include "skewpbw/words.hpp"

namespace skewpbw {

struct ReduceOptions {
    /// Drop rewrite products whose new scalar letter is 0. Such words are
    /// sent to 0 by h, so normal forms are unchanged; p itself then returns
    /// fewer words. Turn off for the literal recursion.
    bool prune_zero_scalars = true;
    /// Inputs longer than this are rejected.
    std::size_t max_word_length = 16;
};

/// Instrumentation for a reduction run.
struct ReductionTrace {
    std::uint64_t steps = 0;      ///< rewrite steps actually performed (memo hits excluded)
    std::uint64_t max_depth = 0;  ///< deepest recursion reached
    bool monotone = true;         ///< every child had strictly smaller complexity than its parent
};

/// Word straightening p: W -> ZT by induction on complexity, always
/// rewriting the adjacent violation whose right context is standard.
///
/// Results are memoised per Reducer; a Reducer is not thread-safe, use one
/// per thread.
class Reducer {
public:
    explicit Reducer(PresentationPtr p, ReduceOptions opts = {});

    const PresentationPtr& presentation() const { return p_; }

    FreeElem p(const Word& w, ReductionTrace* trace = nullptr);
    FreeElem p(const FreeElem& e, ReductionTrace* trace = nullptr);
    Poly h(const Word& w, ReductionTrace* trace = nullptr);
    Poly h(const FreeElem& e, ReductionTrace* trace = nullptr);

    std::size_t memo_size() const { return memo_.size(); }
    void clear_memo() { memo_.clear(); }

private:
    const FreeElem& reduce(const Word& w, ReductionTrace* trace, std::uint64_t depth);
    void check_word(const Word& w) const;

    PresentationPtr p_;
    ReduceOptions opts_;
    std::map<Word, FreeElem> memo_;
};

FreeElem reduce_p(const Word& w, const PresentationPtr& p);
/// q: multiply out scalar prefixes of standard words; throws on a non-standard word.
Poly collapse_q(const FreeElem& e, const PresentationPtr& p);
/// t: r x^alpha -> the word r . x_1 ... x_1 x_2 ... (nondecreasing indices).
FreeElem section_t(const Poly& f);
/// h = q o p.
Poly normalize_h(const FreeElem& e, const PresentationPtr& p);
Poly normalize_h(const Word& w, const PresentationPtr& p);

}  // namespace skewpbw
