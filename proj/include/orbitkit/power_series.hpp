#pragma once

#include <cstddef>
#include <vector>

#include "orbitkit/arith.hpp"

namespace orbitkit {

/// Formal power series truncated at a fixed degree, with exact rational
/// coefficients. Binary operations require equal truncation degrees.
class PowerSeries {
public:
    // Zero series of the given degree.
    explicit PowerSeries(std::size_t degree);
    // coeffs[k] is the coefficient of z^k; must be nonempty.
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries one(std::size_t degree);
    // log(1 - c z^m) = -sum_{k >= 1} c^k z^{mk} / k, truncated at `degree`.
    static PowerSeries log_one_minus(const Rational& c, std::size_t m, std::size_t degree);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational& operator[](std::size_t k) { return coeffs_.at(k); }

    PowerSeries& operator+=(const PowerSeries& other);
    PowerSeries& operator-=(const PowerSeries& other);
    PowerSeries& operator*=(const Rational& scalar);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
    friend PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    // Multiplicative inverse; constant term must be nonzero.
    PowerSeries inverse() const;
    // exp of a series with zero constant term.
    PowerSeries exp() const;
    // log of a series with constant term 1.
    PowerSeries log() const;

private:
    void require_same_degree(const PowerSeries& other) const;

    std::vector<Rational> coeffs_;
};

} // namespace orbitkit
