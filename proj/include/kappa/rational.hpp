#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kappa {

// Exact arithmetic types. mpq_class keeps values in canonical reduced form
// (gcd(num, den) = 1, den > 0) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// "num/den", or the bare numerator when den = 1.
std::string to_string(const Rational& value);

/// Parses "num/den" or "num". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. Throws std::domain_error on den = 0.
Rational ratio(const Integer& num, const Integer& den);

Integer factorial(long n);

/// (k)!! for odd k >= -1, with (-1)!! = 1.
Integer double_factorial(long k);

/// Binomial coefficient for integer n >= 0; zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Falling-factorial binomial x(x-1)...(x-p+1)/p!, defined for any rational x.
/// Zero when p < 0.
Rational binomial(const Rational& x, long p);

}  // namespace kappa
