#pragma once

#include <cctype>
#include <limits>
#include <string>
#include <string_view>

#include "blockcert/polynomial.hpp"

namespace blockcert {

namespace detail {

// poly   := [sign] term (sign term)*
// term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
// factor := 'x' '[' int ',' int ']' ['^' posint]
// coeff  := int ['/' posint]
class PolyParser {
public:
    PolyParser(std::string_view text, const IndexSet& ground) : text_(text), ground_(ground) {}

    Polynomial parse() {
        std::vector<Monomial> terms;
        skip_ws();
        bool negative = false;
        if (peek('+') || peek('-')) negative = text_[pos_++] == '-';
        terms.push_back(term(negative));
        while (skip_ws(), pos_ < text_.size()) {
            if (!peek('+') && !peek('-')) fail("expected '+' or '-'");
            negative = text_[pos_++] == '-';
            terms.push_back(term(negative));
        }
        return Polynomial(ground_, std::move(terms));
    }

private:
    Monomial term(bool negative) {
        skip_ws();
        Rational coeff = 1;
        std::vector<Power> powers;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = Rational(digits());
            skip_ws();
            if (peek('/')) {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                Integer den = digits();
                if (den == 0) fail("zero denominator", at);
                coeff /= den;
            }
            skip_ws();
            if (!peek('*')) return Monomial(negative ? Rational(-coeff) : coeff, Exponents{});
            ++pos_;
        }
        powers.push_back(factor());
        while (skip_ws(), peek('*')) {
            ++pos_;
            powers.push_back(factor());
        }
        if (negative) coeff = -coeff;
        return Monomial(coeff, Exponents(std::move(powers)));
    }

    Power factor() {
        skip_ws();
        expect('x');
        expect('[');
        const std::size_t at = (skip_ws(), pos_);
        const Label i = label();
        expect(',');
        const Label j = label();
        expect(']');
        if (i == j) fail("variable x[" + std::to_string(i) + "," + std::to_string(j) + "] has equal indices", at);
        if (!ground_.contains(i) || !ground_.contains(j))
            fail("variable x[" + std::to_string(i) + "," + std::to_string(j) + "] outside ground set " +
                     ground_.to_string(),
                 at);
        Exponent e = 1;
        if (skip_ws(), peek('^')) {
            ++pos_;
            skip_ws();
            const std::size_t eat = pos_;
            Integer v = digits();
            if (v == 0 || !v.fits_uint_p()) fail("exponent must be a positive integer", eat);
            e = static_cast<Exponent>(v.get_ui());
        }
        return {{i, j}, e};
    }

    Label label() {
        skip_ws();
        const std::size_t at = pos_;
        Integer v = digits();
        if (!v.fits_uint_p()) fail("index too large", at);
        return static_cast<Label>(v.get_ui());
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void expect(char c) {
        skip_ws();
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

    std::string_view text_;
    const IndexSet& ground_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the textual polynomial syntax, e.g. "3/2*x[1,2]^4*x[2,3] - x[3,1] + 5".
/// Every variable must be a valid pair over `ground`.
inline Polynomial parse_poly(std::string_view text, const IndexSet& ground) {
    return detail::PolyParser(text, ground).parse();
}

inline std::string format_power_product(const Exponents& e) {
    std::string s;
    for (const Power& p : e.powers()) {
        if (!s.empty()) s += '*';
        s += "x[" + std::to_string(p.var.i) + "," + std::to_string(p.var.j) + "]";
        if (p.exp != 1) s += "^" + std::to_string(p.exp);
    }
    return s;
}

/// Canonical text form, leading term first; parse_poly inverts it.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const Monomial& m : p.terms()) {
        const bool negative = sgn(m.coeff) < 0;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        const Rational mag = abs(m.coeff);
        if (m.exps.is_one()) {
            s += to_string(mag);
            continue;
        }
        if (mag != 1) s += to_string(mag) + "*";
        s += format_power_product(m.exps);
    }
    return s;
}

} // namespace blockcert
