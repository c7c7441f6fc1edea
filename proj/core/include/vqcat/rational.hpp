#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vqcat {

/// Exact rational number. All cost-quantale arithmetic goes through this type.
using Rational = mpq_class;

/// Parses "3", "-2", "0.125", "1/8" or "1e-3". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Terminating decimal when one exists ("0.125"), otherwise "p/q".
std::string format_decimal(const Rational& value);

/// Always "p/q", or "p" for integers.
std::string format_fraction(const Rational& value);

/// True if the reduced denominator only has the prime factors 2 and 5.
bool has_terminating_decimal(const Rational& value);

}  // namespace vqcat
