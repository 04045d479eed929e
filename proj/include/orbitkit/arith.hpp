#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "orbitkit/errors.hpp"

namespace orbitkit {

using BigInt = mpz_class;

// mpq_class keeps itself canonical under arithmetic; construct through
// make_rational() so that values built from a raw numerator/denominator pair
// are normalized too.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& v);
// "num/den", always with an explicit denominator ("1/1" for one).
std::string to_string(const Rational& v);

// Ascending divisors of n by trial division up to sqrt(n).
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Standard Mobius function.
int mobius(std::uint64_t n);

bool is_prime(std::uint64_t n);

// Largest a such that p^a divides n, by repeated exact division.
unsigned ord_p(const BigInt& n, unsigned long p);

/// Exact p-adic absolute value p^(-valuation) of a nonzero integer.
///
/// Only absolute values of nonzero integers are represented, so the value is
/// always in (0, 1] and products stay exact integer exponent arithmetic.
class PAdicAbs {
public:
    PAdicAbs(unsigned long prime, unsigned valuation);

    unsigned long prime() const noexcept { return prime_; }
    unsigned valuation() const noexcept { return valuation_; }

    // 1 / prime^valuation as an exact rational.
    Rational value() const;
    // prime^valuation; dividing an integer by this applies the absolute value.
    BigInt inverse() const;

    double to_double() const;

    friend PAdicAbs operator*(const PAdicAbs& a, const PAdicAbs& b);
    friend bool operator==(const PAdicAbs&, const PAdicAbs&) = default;
    // Orders by value; both operands must share a prime.
    friend std::strong_ordering operator<=>(const PAdicAbs& a, const PAdicAbs& b);

private:
    unsigned long prime_;
    unsigned valuation_;
};

PAdicAbs padic_abs(const BigInt& n, unsigned long p);

std::string to_string(const PAdicAbs& v);

} // namespace orbitkit
