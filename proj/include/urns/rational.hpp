#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace urns {

// Exact arbitrary-precision rational; always kept in canonical form.
using Rational = mpq_class;
using BigInt = mpz_class;

BigInt factorial(std::uint64_t n);
BigInt binomial(std::int64_t n, std::int64_t k);  // 0 outside 0 <= k <= n
BigInt power(const BigInt& base, std::uint64_t exponent);  // 0^0 == 1

Rational harmonic(std::uint64_t m);

// "num/den" (den omitted never; integers print as "k/1").
std::string to_fraction_string(const Rational& q);
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

}  // namespace urns
