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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skewpbw/algebra.hpp"
#include "skewpbw/coeff.hpp"
#include "skewpbw/words.hpp"

namespace skewpbw {

/// Syntax or resolution error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

/// Expression tree. Products are noncommutative and keep operand order.
///
/// Grammar (precedence low to high):
///
///     sum     := signed (('+' | '-') signed)*
///     signed  := '-' signed | product
///     product := power ('*' power)*
///     power   := atom ('^' ['-'] INT)?
///     atom    := INT ['/' INT] | IDENT | '(' sum ')'
///
/// Juxtaposition is not multiplication. A negative exponent is accepted by
/// the grammar and evaluates only for units of the coefficient ring.
struct Expr {
    enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Pow };

    Kind kind = Kind::Number;
    mpq_class number;          // Number
    std::string name;          // Ident
    std::int64_t exponent = 0; // Pow
    std::vector<Expr> kids;
    std::size_t line = 1, column = 1;
};

/// Grammar only; identifiers are left unresolved.
Expr parse_syntax(std::string_view src);
/// Parse and resolve every identifier against the presentation: coefficient
/// generators, variable names, then the positional aliases x1..xn.
Expr parse(std::string_view src, const Presentation& p);
/// Parse an expression over the coefficient ring alone.
Expr parse_coeff(std::string_view src, const CoeffRing& ring);

Poly eval(const Expr& e, const Algebra& alg);
CoeffElem eval_coeff(const Expr& e, const RingPtr& ring);
/// The expression as written, expanded in the free ring Z<X u R> without any
/// rewriting: products concatenate, variable-free subterms become one
/// scalar letter.
FreeElem to_free(const Expr& e, const Presentation& p);

/// parse + eval conveniences.
Poly eval_text(std::string_view src, const Algebra& alg);
CoeffElem coeff_from_text(std::string_view src, const RingPtr& ring);

}  // namespace skewpbw
