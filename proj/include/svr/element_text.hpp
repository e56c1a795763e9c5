// Text syntax for K_d elements, used by spec files and the CLI:
//
//   element  := sum [ '/' sum ]
//   sum      := ['-'] term { ('+'|'-') term }
//   term     := factor { '*' factor }
//   factor   := rational | monomial | '(' sum ')'
//   monomial := 'x' [ '^' exponent ]          bare x is x^(1,0,...,0)
//   exponent := '(' rational {',' rational} ')' | integer
//   rational := integer [ '/' integer ]
//
// A '/' directly between two integers binds as a rational (1/2*x is half x);
// any other '/' at the top level splits numerator and denominator.
#pragma once

#include "svr/hahn.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace svr {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

namespace detail {

class ElementParser {
public:
    ElementParser(const std::string& text, int dim) : s_(text), dim_(dim) {}

    ValElt parse() {
        GenPoly num = parse_sum();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            GenPoly den = parse_sum();
            skip_ws();
            if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
            if (den.is_zero()) throw ParseError("zero denominator", pos_);
            return ValElt(num, den);
        }
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return ValElt(num, GenPoly::constant(dim_, Scalar(1)));
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    GenPoly parse_sum() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        else if (peek() == '+') { ++pos_; }
        GenPoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                GenPoly t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    GenPoly parse_term() {
        GenPoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    GenPoly parse_factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            GenPoly inner = parse_sum();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return parse_monomial_tail();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q = parse_rational();
            return GenPoly::constant(dim_, Scalar(q));
        }
        throw ParseError("expected a factor", pos_);
    }

    GenPoly parse_monomial_tail() {
        skip_ws();
        if (peek() != '^') {
            if (dim_ < 1) throw ParseError("x needs dimension >= 1", pos_);
            return GenPoly::monomial(GroupElement::axis(dim_, 0));
        }
        ++pos_;
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            std::vector<Rational> coords;
            for (;;) {
                coords.push_back(parse_signed_rational());
                skip_ws();
                if (peek() == ',') { ++pos_; continue; }
                if (peek() == ')') { ++pos_; break; }
                throw ParseError("expected ',' or ')' in exponent", pos_);
            }
            if (static_cast<int>(coords.size()) != dim_)
                throw ParseError("exponent arity does not match dimension " + std::to_string(dim_), pos_);
            return GenPoly::monomial(GroupElement(std::move(coords)));
        }
        // Bare integer exponent goes into the first coordinate.
        Rational e = parse_signed_integer();
        GroupElement g = GroupElement::axis(dim_, 0, e);
        return GenPoly::monomial(g);
    }

    Rational parse_signed_rational() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        Rational q = parse_rational();
        return neg ? -q : q;
    }

    Rational parse_signed_integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        Rational q(parse_integer());
        return neg ? -q : q;
    }

    // integer [ '/' integer ], the '/' consumed only when an integer follows.
    Rational parse_rational() {
        mpz_class num = parse_integer();
        if (peek() == '/' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            mpz_class den = parse_integer();
            if (den == 0) throw ParseError("zero denominator in rational", pos_);
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    mpz_class parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        return mpz_class(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    size_t pos_ = 0;
    int dim_;
};

} // namespace detail

inline ValElt parse_element(const std::string& text, int dim) {
    return detail::ElementParser(text, dim).parse();
}

} // namespace svr
