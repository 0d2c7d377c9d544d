#pragma once

#include <cctype>

#include "qgw/rewrite.hpp"

namespace qgw {

// Recursive-descent parser for the CLI expression grammar over C[SU_q(2)]:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/'| juxtaposition) factor)*
//   factor := primary ['^' ['-'] integer]
//   primary:= 'a' | 'as' | 'g' | 'gs' | 'q' | integer | '(' expr ')'
// Division requires a scalar divisor; non-scalar bases only take nonnegative
// powers. The result is a free-algebra element; callers normalize.
class ExpressionParser {
public:
    explicit ExpressionParser(std::string text) : text_(std::move(text)) {}

    NCPoly parse() {
        NCPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool starts_factor() {
        char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    NCPoly expr() {
        bool negate = false;
        if (peek() == '-') { ++pos_; negate = true; }
        NCPoly p = term();
        if (negate) p = -p;
        while (true) {
            char c = peek();
            if (c == '+') { ++pos_; p += term(); }
            else if (c == '-') { ++pos_; p -= term(); }
            else break;
        }
        return p;
    }

    NCPoly term() {
        NCPoly p = factor();
        while (true) {
            char c = peek();
            if (c == '*') { ++pos_; p *= factor(); }
            else if (c == '/') {
                std::size_t at = pos_++;
                NCPoly d = factor();
                if (!d.is_scalar()) throw ParseError("division by a non-scalar expression", at);
                ScalarQ s = d.scalar_part();
                if (s.is_zero()) throw ParseError("division by zero", at);
                p = (ScalarQ(1) / s) * p;
            } else if (starts_factor()) {
                p *= factor(); // juxtaposition
            } else {
                break;
            }
        }
        return p;
    }

    NCPoly factor() {
        NCPoly base = primary();
        if (peek() != '^') return base;
        std::size_t at = pos_++;
        bool neg = false;
        if (peek() == '-') { ++pos_; neg = true; }
        long e = integer();
        if (neg) e = -e;
        if (base.is_scalar()) {
            ScalarQ s = base.scalar_part();
            ScalarQ r(1);
            for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= s;
            return NCPoly(e < 0 ? ScalarQ(1) / r : r);
        }
        if (e < 0) throw ParseError("negative power of a non-scalar expression", at);
        NCPoly r = NCPoly::one();
        for (long i = 0; i < e; ++i) r *= base;
        return r;
    }

    NCPoly primary() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            NCPoly p = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return NCPoly(ScalarQ(Int(integer())));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string ident;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ident += text_[pos_++];
            using namespace suq2_gen;
            if (ident == "a") return NCPoly::generator(a);
            if (ident == "as") return NCPoly::generator(as);
            if (ident == "g") return NCPoly::generator(g);
            if (ident == "gs") return NCPoly::generator(gs);
            if (ident == "q") return NCPoly(ScalarQ::q());
            throw ParseError("unknown symbol '" + ident + "'", at);
        }
        throw ParseError("expected a generator, number, or '('", at);
    }

    long integer() {
        skip_space();
        std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected an integer", at);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

inline NCPoly parse_expression(const std::string& text) { return ExpressionParser(text).parse(); }

inline ScalarQ parse_scalar(const std::string& text) {
    NCPoly p = parse_expression(text);
    if (!p.is_scalar()) throw ParseError("expected a scalar expression", 0);
    return p.scalar_part();
}

} // namespace qgw
