#pragma once

// Exact scalar types. Everything in the engine is computed over Z or Q;
// Q/Z values are carried as rationals reduced into [0, 1).

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace charrig {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Representative of q mod 1 in [0, 1).
Rational frac(const Rational& q);

/// Representative of q mod 1 in (-1/2, 1/2].
Rational centered_frac(const Rational& q);

/// Sign of |a| - |b|.
inline int cmpabs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

/// Floor division a / b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);

bool is_integer(const Rational& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p/q", "p" and an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

RatVector to_rational(const IntVector& v);

/// Throws MismatchError unless every entry is an integer.
IntVector to_integer(const RatVector& v);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

}  // namespace charrig
