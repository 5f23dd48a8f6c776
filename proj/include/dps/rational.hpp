#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace dps {

using Rational = mpq_class;

// Accepts "p", "p/q", "-p/q"; result is canonical. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// "p/q" with q > 0 and gcd 1, or "p" when q == 1.
std::string to_string(const Rational& q);

std::size_t hash_value(const Rational& q);

} // namespace dps
