#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace zsig {

using Integer = mpz_class;
// mpq_class keeps numerator and denominator coprime with a positive
// denominator as long as every constructor path ends in canonicalize().
using Rational = mpq_class;

// Parses "p", "p/q", "-p/q" (optional surrounding whitespace). Throws
// ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Decimal digit count of |x| (0 has one digit).
std::size_t digits10(const Integer& x);

// Natural log of |x| for x != 0, accurate to double precision even when
// x has millions of digits.
double log_abs(const Integer& x);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace zsig
