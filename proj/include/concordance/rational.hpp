#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace concordance {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "7", "-7", "7/5" and finite decimals like "0.25" (exactly).
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace concordance
