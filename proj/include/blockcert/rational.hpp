#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "blockcert/errors.hpp"

namespace blockcert {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

/// Parses `-?digits(/digits)?`; rejects zero denominators.
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](bool& any) {
        any = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            any = true;
        }
    };
    if (pos < text.size() && text[pos] == '-') ++pos;
    bool any = false;
    digits(any);
    if (!any) throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        digits(any);
        if (!any) throw ParseError("expected denominator in rational '" + std::string(text) + "'", pos);
    }
    if (pos != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'", pos);

    Rational q;
    std::string s(text);
    if (q.set_str(s, 10) != 0) throw ParseError("invalid rational '" + s + "'", 0);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", s.find('/') + 1);
    q.canonicalize();
    return q;
}

} // namespace blockcert
