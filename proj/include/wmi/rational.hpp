#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wmi {

/// Exact arbitrary-precision rational. Every number in the core is one of these.
using Rational = mpq_class;

/// Parses "p", "p/q", "-p/q" or a decimal such as "0.25" / "-1.5e-2" into a
/// canonical rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

/// num/den in canonical form (mpq_class's two-argument constructor does not
/// reduce).
Rational make_rational(long num, long den);

Rational factorial(unsigned n);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace wmi
