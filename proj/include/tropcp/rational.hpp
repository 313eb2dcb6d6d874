#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropcp {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace tropcp
