#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace polylie {

using BigInt = mpz_class;
using Rational = mpq_class;

namespace fields {

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

BigInt binomial(long n, long k);

inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace fields
}  // namespace polylie
