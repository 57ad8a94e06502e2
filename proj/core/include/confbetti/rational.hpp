// Exact rational scalars used throughout the pipeline.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace confbetti {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonicalized rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace confbetti
