#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <mpfr.h>

#include "orbitkit/arith.hpp"

namespace orbitkit {

inline constexpr long kDefaultPrecisionBits = 64;
inline constexpr long kMinPrecisionBits = 60;

// Reads ORBITKIT_PRECISION_BITS; kDefaultPrecisionBits when unset.
// Throws ValidationError for non-numeric values or values below kMinPrecisionBits.
long precision_from_env();

/// Binary floating-point value at a fixed precision, correctly rounded (MPFR).
///
/// Used only where an exact rational meets a transcendental (ln X) or for
/// rendering; every count and sum upstream stays exact.
class Real {
public:
    explicit Real(long bits = kDefaultPrecisionBits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_rational(const Rational& q, long bits = kDefaultPrecisionBits);
    static Real from_double(double v, long bits = kDefaultPrecisionBits);
    // Natural logarithm of a positive integer, correctly rounded.
    static Real log_of(std::uint64_t x, long bits = kDefaultPrecisionBits);

    long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    // Fixed-point rendering with the given number of decimal places.
    std::string to_fixed(int digits) const;

private:
    mpfr_t value_;
};

} // namespace orbitkit
