#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>

namespace nclab {

using Integer = mpz_class;
using Rational = mpq_class;

// Generalized binomial r(r-1)...(r-k+1)/k!; zero for k < 0. The upper
// index may be negative.
Integer binomial(std::int64_t r, std::int64_t k);

// (b_1 + ... + b_k)! / (b_1! ... b_k!), evaluated as a product of binomials.
Integer multinomial(std::span<const std::int64_t> parts);

Integer power(const Integer& base, std::uint64_t exponent);

// Returns the numerator of q, throwing InvariantError (tagged with `what`)
// when q is not an integer.
Integer require_integral(const Rational& q, const std::string& what);

// Decimal text; rationals render as "p" or "p/q".
std::string to_decimal(const Integer& z);
std::string to_decimal(const Rational& q);

// Parses "p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

} // namespace nclab
