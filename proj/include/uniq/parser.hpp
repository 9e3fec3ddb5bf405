#pragma once

#include "classifier.hpp"
#include "poly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uniq {

struct ParseError : std::runtime_error {
    ParseError(std::size_t off, const std::string& msg, std::vector<std::string> exp)
        : std::runtime_error("offset " + std::to_string(off) + ": " + msg), offset(off), expected(std::move(exp)) {}
    std::size_t offset;
    std::vector<std::string> expected;
};

// Grammar (X or x is the variable, juxtaposition multiplies):
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/' | <implicit>) unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | 'X' | '(' expr ')'
class PolyParser {
public:
    PolyParser(std::string_view text, int degree_cap) : s_(text), cap_(degree_cap) {}

    RationalPoly parse() {
        skip();
        if (pos_ == s_.size()) fail("empty input", {"expression"});
        RationalPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'", {"operator", "end of input"});
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int cap_;

    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
        throw ParseError(pos_, msg, std::move(expected));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'X' || c == 'x' || c == '(';
    }
    void check_cap(const RationalPoly& p, std::size_t at) const {
        if (p.degree() > cap_)
            throw DegreeCapExceeded("offset " + std::to_string(at) + ": degree " + std::to_string(p.degree()) +
                                    " exceeds cap " + std::to_string(cap_));
    }

    RationalPoly expr() {
        RationalPoly acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RationalPoly term() {
        RationalPoly acc = unary();
        while (true) {
            std::size_t at = pos_;
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (peek('/')) {
                ++pos_;
                skip();
                at = pos_;
                RationalPoly d = unary();
                if (d.degree() != 0) {
                    pos_ = at;
                    fail(d.is_zero() ? "division by zero" : "division by a non-constant", {"nonzero constant"});
                }
                acc = acc * RationalPoly(Rational(1 / d.coeff(0)));
            } else if (starts_atom()) {
                acc = acc * unary();
            } else {
                return acc;
            }
            check_cap(acc, at);
        }
    }

    RationalPoly unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    RationalPoly power() {
        RationalPoly base = atom();
        if (!peek('^')) return base;
        ++pos_;
        skip();
        std::size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail(pos_ >= s_.size() ? "unexpected end of input" : "unexpected '" + std::string(1, s_[pos_]) + "'",
                 {"non-negative integer exponent"});
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string digits(s_.substr(start, pos_ - start));
        if (digits.size() > 6) {
            pos_ = at;
            fail("exponent too large", {"exponent within the degree cap"});
        }
        long e = std::stol(digits);
        if (base.degree() > 0 && static_cast<long>(base.degree()) * e > cap_)
            throw DegreeCapExceeded("offset " + std::to_string(at) + ": degree " +
                                    std::to_string(static_cast<long>(base.degree()) * e) + " exceeds cap " +
                                    std::to_string(cap_));
        if (base.degree() <= 0 && e > 4096) {
            pos_ = at;
            fail("exponent too large for a constant", {"exponent <= 4096"});
        }
        return pow(base, static_cast<unsigned>(e));
    }

    RationalPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input", {"integer", "X", "("});
        char c = s_[pos_];
        if (c == 'X' || c == 'x') {
            ++pos_;
            RationalPoly x = RationalPoly::x();
            check_cap(x, pos_ - 1);
            return x;
        }
        if (c == '(') {
            ++pos_;
            RationalPoly inner = expr();
            if (!peek(')')) {
                skip();
                fail(pos_ >= s_.size() ? "unexpected end of input" : "unexpected '" + std::string(1, s_[pos_]) + "'",
                     {")"});
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalPoly(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        fail("unexpected '" + std::string(1, c) + "'", {"integer", "X", "("});
    }
};

inline RationalPoly parse_poly(std::string_view text, int degree_cap = kDefaultDegreeCap) {
    return PolyParser(text, degree_cap).parse();
}

}  // namespace uniq
