#pragma once

// Expression parser for exact polynomials and rational functions.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | 'X' | '(' expr ')'
//
// Rational literals carry an optional leading '-' ("-14/9").  A rational
// function is written as expr or expr '/' expr with the '/' at top level;
// literal fractions like 3/4 bind tighter because they are single tokens.

#include <cctype>
#include <string>
#include <vector>

#include "multdep/errors.hpp"
#include "multdep/polynomial.hpp"
#include "multdep/rational_function.hpp"

namespace multdep {

namespace detail {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;
    long max_degree;

    explicit PolyParser(const std::string& text, long max_deg) : s(text), max_degree(max_deg) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++i;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, i); }

    void check_size(const QPoly& p) {
        if (p.degree() > max_degree) fail("polynomial degree exceeds the size limit");
    }

    QPoly parse_expr() {
        skip_ws();
        QPoly acc;
        bool negate = false;
        // leading sign is consumed by the rational literal when one follows;
        // otherwise treat it as a sign on the first term
        if (peek('-') && !starts_rational()) {
            ++i;
            negate = true;
        }
        acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            if (s[i] == '+') {
                ++i;
                acc += parse_term();
            } else if (s[i] == '-') {
                ++i;
                acc -= parse_term();
            } else {
                break;
            }
            check_size(acc);
        }
        return acc;
    }

    QPoly parse_term() {
        QPoly acc = parse_factor();
        while (peek('*')) {
            ++i;
            acc *= parse_factor();
            check_size(acc);
        }
        return acc;
    }

    QPoly parse_factor() {
        QPoly base = parse_base();
        if (peek('^')) {
            ++i;
            skip_ws();
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) fail("expected a nonnegative integer exponent after '^'");
            const std::string digits = s.substr(start, i - start);
            if (digits.size() > 9) fail("exponent overflow");
            unsigned long e = std::stoul(digits);
            if (base.degree() >= 1 && static_cast<long>(e) * base.degree() > max_degree)
                fail("exponent overflow: resulting degree exceeds the size limit");
            base = base.pow(e);
        }
        return base;
    }

    bool starts_rational() {
        std::size_t j = i;
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j < s.size() && s[j] == '-') ++j;
        return j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]));
    }

    QPoly parse_base() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of expression");
        char c = s[i];
        if (c == 'X' || c == 'x') {
            ++i;
            return QPoly::monomial(Rational(1), 1);
        }
        if (c == '(') {
            ++i;
            QPoly inner = parse_expr();
            skip_ws();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return QPoly::constant(parse_rational_token());
        fail(std::string("unexpected character '") + c + "'");
    }

    Rational parse_rational_token() {
        std::size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        std::size_t d0 = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == d0) fail("expected digits");
        // fraction only when '/' is immediately followed by digits (a literal,
        // not the top-level quotient of a rational function)
        if (i < s.size() && s[i] == '/' && i + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
        return parse_rational(s.substr(start, i - start));
    }
};

}  // namespace detail

inline QPoly parse_polynomial(const std::string& text, long max_degree = 10000) {
    detail::PolyParser p(text, max_degree);
    QPoly out = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) throw parse_error("trailing characters after polynomial", p.i);
    return out;
}

// expr ['/' expr]; the quotient is reduced.
inline QFunc parse_rational_function(const std::string& text, long max_degree = 10000) {
    detail::PolyParser p(text, max_degree);
    QPoly numerator = p.parse_expr();
    p.skip_ws();
    if (p.i == text.size()) {
        if (numerator.is_zero_poly()) throw parse_error("zero function", 0);
        return QFunc::from_poly(numerator);
    }
    if (text[p.i] != '/') throw parse_error("trailing characters after expression", p.i);
    ++p.i;
    QPoly denominator = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) throw parse_error("trailing characters after denominator", p.i);
    if (denominator.is_zero_poly()) throw parse_error("zero denominator", p.i);
    return QFunc::reduce(numerator, denominator);
}

}  // namespace multdep
