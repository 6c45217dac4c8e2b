#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace galr {

// Arbitrary-precision integers and canonical rationals (GMP keeps mpq_class in
// lowest terms with a positive denominator once canonicalized; every factory
// below returns canonical values).
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// "num/den" in lowest terms, e.g. "5/8", "-1/2", "0/1".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "a/b", "a" and optional leading sign. Throws on malformed input or zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

bool fits_u64(const Integer& z);
std::uint64_t to_u64(const Integer& z);
Integer from_u64(std::uint64_t v);

}  // namespace galr
