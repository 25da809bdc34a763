#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace leftorder {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" or "p"; the result is canonicalized. Throws StructuralError on bad text
// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }
inline int sign(const Integer& value) { return sgn(value); }

}  // namespace leftorder
