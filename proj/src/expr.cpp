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

#include "skewpbw/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace skewpbw {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

namespace {

struct Token {
    enum class Kind { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t line, column;
};

const char* describe(Token::Kind k) {
    switch (k) {
        case Token::Kind::Int: return "number";
        case Token::Kind::Ident: return "identifier";
        case Token::Kind::Plus: return "'+'";
        case Token::Kind::Minus: return "'-'";
        case Token::Kind::Star: return "'*'";
        case Token::Kind::Caret: return "'^'";
        case Token::Kind::Slash: return "'/'";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::size_t l = line, cc = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Kind::Int, std::string(src.substr(i, j - i)), l, cc});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), l, cc});
            advance(j - i);
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '^': k = Token::Kind::Caret; break;
            case '/': k = Token::Kind::Slash; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
        }
        out.push_back({k, std::string(1, c), l, cc});
        advance(1);
    }
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Expr parse_all() {
        Expr e = sum();
        const Token& t = peek();
        if (t.kind != Token::Kind::End) {
            if (t.kind == Token::Kind::Ident || t.kind == Token::Kind::Int || t.kind == Token::Kind::LParen)
                throw ParseError(std::string("unexpected ") + describe(t.kind) +
                                     "; products need an explicit '*'",
                                 t.line, t.column);
            throw ParseError(std::string("unexpected ") + describe(t.kind), t.line, t.column);
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    const Token& expect(Token::Kind k) {
        if (peek().kind != k)
            throw ParseError(std::string("expected ") + describe(k) + ", found " + describe(peek().kind), peek().line,
                             peek().column);
        return take();
    }

    static Expr node(Expr::Kind k, const Token& at) {
        Expr e;
        e.kind = k;
        e.line = at.line;
        e.column = at.column;
        return e;
    }

    Expr sum() {
        Expr lhs = signed_term();
        for (;;) {
            const Token& t = peek();
            if (t.kind != Token::Kind::Plus && t.kind != Token::Kind::Minus) return lhs;
            take();
            Expr e = node(t.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub, t);
            e.kids.push_back(std::move(lhs));
            e.kids.push_back(signed_term());
            lhs = std::move(e);
        }
    }

    Expr signed_term() {
        if (peek().kind == Token::Kind::Minus) {
            Expr e = node(Expr::Kind::Neg, take());
            e.kids.push_back(signed_term());
            return e;
        }
        return product();
    }

    Expr product() {
        Expr lhs = power();
        while (peek().kind == Token::Kind::Star) {
            Expr e = node(Expr::Kind::Mul, take());
            e.kids.push_back(std::move(lhs));
            e.kids.push_back(power());
            lhs = std::move(e);
        }
        return lhs;
    }

    Expr power() {
        Expr base = atom();
        if (peek().kind != Token::Kind::Caret) return base;
        Expr e = node(Expr::Kind::Pow, take());
        const bool negative = accept(Token::Kind::Minus);
        const Token& num = expect(Token::Kind::Int);
        try {
            e.exponent = std::stoll(num.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", num.line, num.column);
        }
        if (negative) e.exponent = -e.exponent;
        e.kids.push_back(std::move(base));
        if (peek().kind == Token::Kind::Caret)
            throw ParseError("chained '^' is ambiguous; use parentheses", peek().line, peek().column);
        return e;
    }

    Expr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Int: {
                take();
                Expr e = node(Expr::Kind::Number, t);
                mpz_class num(t.text);
                if (accept(Token::Kind::Slash)) {
                    const Token& d = expect(Token::Kind::Int);
                    mpz_class den(d.text);
                    if (den == 0) throw ParseError("zero denominator", d.line, d.column);
                    e.number = mpq_class(num, den);
                    e.number.canonicalize();
                } else {
                    e.number = mpq_class(num);
                }
                return e;
            }
            case Token::Kind::Ident: {
                take();
                Expr e = node(Expr::Kind::Ident, t);
                e.name = t.text;
                return e;
            }
            case Token::Kind::LParen: {
                take();
                Expr e = sum();
                expect(Token::Kind::RParen);
                return e;
            }
            default:
                throw ParseError(std::string("unexpected ") + describe(t.kind), t.line, t.column);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// identifier -> what it denotes
struct Resolved {
    enum class Kind { Generator, Variable } kind;
    std::size_t index;
};

std::optional<Resolved> resolve_ident(const std::string& name, const Presentation* p, const CoeffRing& ring) {
    if (auto g = ring.gen_index(name)) return Resolved{Resolved::Kind::Generator, *g};
    if (!p) return std::nullopt;
    for (std::size_t i = 0; i < p->n(); ++i)
        if (p->var_names()[i] == name) return Resolved{Resolved::Kind::Variable, i};
    if (name.size() > 1 && name[0] == 'x') {
        const std::string digits = name.substr(1);
        if (!digits.empty() && digits[0] != '0' &&
            digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 6) {
            const auto k = static_cast<std::size_t>(std::stoul(digits));
            if (k >= 1 && k <= p->n()) return Resolved{Resolved::Kind::Variable, k - 1};
        }
    }
    return std::nullopt;
}

void check_idents(const Expr& e, const Presentation* p, const CoeffRing& ring) {
    if (e.kind == Expr::Kind::Ident && !resolve_ident(e.name, p, ring))
        throw ParseError("unknown identifier '" + e.name + "'", e.line, e.column);
    for (const auto& k : e.kids) check_idents(k, p, ring);
}

Poly eval_poly(const Expr& e, const Algebra& alg) {
    const auto& P = alg.presentation();
    switch (e.kind) {
        case Expr::Kind::Number: return alg.constant(CoeffElem(P->ring(), e.number));
        case Expr::Kind::Ident: {
            auto r = resolve_ident(e.name, P.get(), *P->ring());
            if (!r) throw ParseError("unknown identifier '" + e.name + "'", e.line, e.column);
            if (r->kind == Resolved::Kind::Generator) return alg.constant(CoeffElem::generator(P->ring(), r->index));
            return alg.var(r->index);
        }
        case Expr::Kind::Neg: return -eval_poly(e.kids[0], alg);
        case Expr::Kind::Add: return eval_poly(e.kids[0], alg) + eval_poly(e.kids[1], alg);
        case Expr::Kind::Sub: return eval_poly(e.kids[0], alg) - eval_poly(e.kids[1], alg);
        case Expr::Kind::Mul: return alg.star(eval_poly(e.kids[0], alg), eval_poly(e.kids[1], alg));
        case Expr::Kind::Pow: {
            Poly base = eval_poly(e.kids[0], alg);
            if (e.exponent >= 0) {
                if (e.exponent >= kExponentCap) throw ParseError("exponent exceeds the cap", e.line, e.column);
                return alg.pow(base, static_cast<std::uint32_t>(e.exponent));
            }
            const auto d = base.deg();
            if (!d || *d != 0) throw ParseError("negative exponent on a non-constant", e.line, e.column);
            const CoeffElem c = base.coeff(Monomial(alg.n(), 0));
            if (!c.is_unit()) throw ParseError("negative exponent on non-unit " + c.to_string(), e.line, e.column);
            return alg.constant(c.pow(e.exponent));
        }
    }
    throw Error("eval: bad expression node");
}

CoeffElem eval_ring(const Expr& e, const RingPtr& ring) {
    switch (e.kind) {
        case Expr::Kind::Number: return CoeffElem(ring, e.number);
        case Expr::Kind::Ident: {
            auto g = ring->gen_index(e.name);
            if (!g) throw ParseError("unknown coefficient generator '" + e.name + "'", e.line, e.column);
            return CoeffElem::generator(ring, *g);
        }
        case Expr::Kind::Neg: return -eval_ring(e.kids[0], ring);
        case Expr::Kind::Add: return eval_ring(e.kids[0], ring) + eval_ring(e.kids[1], ring);
        case Expr::Kind::Sub: return eval_ring(e.kids[0], ring) - eval_ring(e.kids[1], ring);
        case Expr::Kind::Mul: return eval_ring(e.kids[0], ring) * eval_ring(e.kids[1], ring);
        case Expr::Kind::Pow: {
            CoeffElem base = eval_ring(e.kids[0], ring);
            if (e.exponent < 0 && !base.is_unit())
                throw ParseError("negative exponent on non-unit " + base.to_string(), e.line, e.column);
            if (e.exponent >= kExponentCap || e.exponent <= -static_cast<std::int64_t>(kExponentCap))
                throw ParseError("exponent exceeds the cap", e.line, e.column);
            return base.pow(e.exponent);
        }
    }
    throw Error("eval_coeff: bad expression node");
}

bool mentions_variable(const Expr& e, const Presentation& p) {
    if (e.kind == Expr::Kind::Ident) {
        auto r = resolve_ident(e.name, &p, *p.ring());
        return r && r->kind == Resolved::Kind::Variable;
    }
    return std::any_of(e.kids.begin(), e.kids.end(), [&](const Expr& k) { return mentions_variable(k, p); });
}

FreeElem expand_words(const Expr& e, const Presentation& p) {
    if (!mentions_variable(e, p)) {
        const CoeffElem r = eval_ring(e, p.ring());
        return r.is_zero() ? FreeElem() : FreeElem::word(Word{Letter(r)});
    }
    switch (e.kind) {
        case Expr::Kind::Ident: return FreeElem::word(Word{Letter(Var{resolve_ident(e.name, &p, *p.ring())->index})});
        case Expr::Kind::Neg: return expand_words(e.kids[0], p).scaled(-1);
        case Expr::Kind::Add: return expand_words(e.kids[0], p) + expand_words(e.kids[1], p);
        case Expr::Kind::Sub: return expand_words(e.kids[0], p) - expand_words(e.kids[1], p);
        case Expr::Kind::Mul: return free_concat(expand_words(e.kids[0], p), expand_words(e.kids[1], p));
        case Expr::Kind::Pow: {
            if (e.exponent < 0) throw ParseError("negative exponent on a non-constant", e.line, e.column);
            if (e.exponent >= kExponentCap) throw ParseError("exponent exceeds the cap", e.line, e.column);
            const FreeElem base = expand_words(e.kids[0], p);
            FreeElem out = FreeElem::word(Word{});
            for (std::int64_t k = 0; k < e.exponent; ++k) out = free_concat(out, base);
            return out;
        }
        case Expr::Kind::Number: break;
    }
    throw Error("expand_words: bad expression node");
}

}  // namespace

Expr parse_syntax(std::string_view src) {
    Parser parser(tokenize(src));
    return parser.parse_all();
}

Expr parse(std::string_view src, const Presentation& p) {
    Expr e = parse_syntax(src);
    check_idents(e, &p, *p.ring());
    return e;
}

Expr parse_coeff(std::string_view src, const CoeffRing& ring) {
    Expr e = parse_syntax(src);
    check_idents(e, nullptr, ring);
    return e;
}

Poly eval(const Expr& e, const Algebra& alg) { return eval_poly(e, alg); }

FreeElem to_free(const Expr& e, const Presentation& p) {
    check_idents(e, &p, *p.ring());
    return expand_words(e, p);
}

CoeffElem eval_coeff(const Expr& e, const RingPtr& ring) { return eval_ring(e, ring); }

Poly eval_text(std::string_view src, const Algebra& alg) {
    return eval(parse(src, *alg.presentation()), alg);
}

CoeffElem coeff_from_text(std::string_view src, const RingPtr& ring) {
    return eval_coeff(parse_coeff(src, *ring), ring);
}

}  // namespace skewpbw
