#include <cctype>
#include <string>

#include "geowron/polynomial.hpp"

namespace gwron {

namespace {

// Precedence-climbing parser for the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' integer)*        (right-associative)
//   atom   := integer | variable | '(' expr ')'
// '/' divides by a constant subexpression (covers a/b rational literals).
class Parser {
public:
    Parser(const std::string& text, int p) : text_(text), p_(p), pos_(0) {}

    Polynomial run() {
        Polynomial r = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return r;
    }

private:
    Polynomial parse_expr() {
        Polynomial r = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                r += parse_term();
            } else if (peek() == '-') {
                ++pos_;
                r -= parse_term();
            } else {
                return r;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial r = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                r = r * parse_factor();
            } else if (peek() == '/') {
                std::size_t at = pos_++;
                Polynomial d = parse_factor();
                if (!d.is_constant()) throw parse_error("division by a non-constant", at);
                Rational dv = d.constant_value();
                if (dv == 0) throw parse_error("division by zero", at);
                r *= Rational(1) / dv;
            } else {
                return r;
            }
        }
    }

    Polynomial parse_factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -parse_factor();
        }
        return parse_power();
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        skip_ws();
        if (peek() != '^') return base;
        std::size_t at = pos_++;
        skip_ws();
        if (!std::isdigit(peek())) throw parse_error("exponent must be a non-negative integer", at);
        unsigned long e = parse_uint();
        skip_ws();
        // Right-associative chain: z^2^3 = z^(2^3).
        while (peek() == '^') {
            std::size_t at2 = pos_++;
            skip_ws();
            if (!std::isdigit(peek()))
                throw parse_error("exponent must be a non-negative integer", at2);
            unsigned long e2 = parse_uint();
            unsigned long acc = 1;
            for (unsigned long i = 0; i < e2; ++i) {
                acc *= e;
                if (acc > 100000) throw parse_error("exponent too large", at2);
            }
            e = acc;
        }
        if (e > 100000) throw parse_error("exponent too large", at);
        return base.pow((unsigned)e);
    }

    Polynomial parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial r = parse_expr();
            skip_ws();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (std::isdigit(c)) {
            std::size_t start = pos_;
            while (std::isdigit(peek())) ++pos_;
            Integer n(text_.substr(start, pos_ - start));
            return Polynomial::constant(p_, Rational(n));
        }
        if (c == 'z') {
            std::size_t at = pos_++;
            if (!std::isdigit(peek())) throw parse_error("expected variable index after 'z'", at);
            unsigned long idx = parse_uint();
            if (idx < 1 || (long)idx > p_)
                throw parse_error("unknown variable z" + std::to_string(idx), at);
            return Polynomial::variable(p_, (int)idx - 1);
        }
        if (c == '\0') throw parse_error("unexpected end of input", pos_);
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    unsigned long parse_uint() {
        std::size_t at = pos_;
        unsigned long v = 0;
        while (std::isdigit(peek())) {
            v = v * 10 + (unsigned long)(peek() - '0');
            if (v > 1000000000UL) throw parse_error("integer literal too large", at);
            ++pos_;
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    const std::string& text_;
    int p_;
    std::size_t pos_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& expr, int p) {
    if (p < 0) throw arity_error("negative germ dimension");
    return Parser(expr, p).run();
}

}  // namespace gwron
