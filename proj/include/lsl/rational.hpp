#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lsl {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// "p/q", or "p" when q = 1. Lowest terms, sign on the numerator.
std::string to_string(const Rational& q);

// Accepts [-]digits[/digits] with a nonzero denominator; result is canonical.
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

bool is_zero(const Vector& v);

}  // namespace lsl
