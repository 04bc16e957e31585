#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace formacheck {

// Exact rational scalar. mpq_class keeps numerator/denominator canonical
// (gcd 1, positive denominator) after every arithmetic operation.
using Rat = mpq_class;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on anything
/// else, including a zero denominator.
Rat parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

} // namespace formacheck
