#pragma once

#include <gmpxx.h>

#include <string>

namespace pluritop {

// Arbitrary-precision rational, kept canonical (positive denominator,
// coprime numerator/denominator) by construction.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned long k);
BigInt binomial(unsigned long n, unsigned long k);

// Canonical string form "numerator/denominator" ("0/1", "-3/2", "5/1").
std::string rational_str(const Rational& q);

// Accepts the canonical form and bare integers ("5" == "5/1").
// Throws ParseError on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

}  // namespace pluritop
