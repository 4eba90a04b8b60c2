#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace jcm {

/// Exact signed rational. GMP keeps the value canonical (den > 0,
/// gcd(num, den) = 1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in canonical form; throws DomainError when den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q", an integer, or a finite decimal ("4.94", "-1.5e-3") exactly.
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);
long double to_long_double(const Rational& q);

/// -1, 0 or +1.
inline int sign(const Rational& q) { return sgn(q); }

/// True when numerator and denominator are coprime and den > 0.
bool is_canonical(const Rational& q);

}  // namespace jcm
