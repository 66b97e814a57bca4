#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace eadm {

// Exact rational scalar used throughout the library. GMP keeps values in
// canonical form, so equality and sign tests are exact; strict inequalities
// never depend on floating-point rounding.
using Rational = mpq_class;

// Parses "3", "-4/5", "0.15" or "2.5e-3" into an exact rational. Decimal
// text is scaled by powers of ten digit-by-digit and never passes through
// binary floating point. Returns nullopt on malformed input (including a
// zero denominator).
std::optional<Rational> parse_rational(std::string_view text);

// "a/b" when the denominator is not one, plain integer text otherwise.
// parse_rational(to_string(x)) == x.
std::string to_string(const Rational& x);

// Decimal rendering with the given number of significant digits. For
// output only; classification stays exact.
std::string to_decimal(const Rational& x, int significant_digits);

}  // namespace eadm
