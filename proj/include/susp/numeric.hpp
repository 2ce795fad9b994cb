#pragma once

#include <gmpxx.h>

#include <string>

namespace susp {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "12", "-3", "7/4"; throws Error(InvalidArgument) on anything else.
Rational parse_rational(const std::string& text);

}  // namespace susp
