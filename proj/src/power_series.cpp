#include "orbitkit/power_series.hpp"

#include <string>

namespace orbitkit {

PowerSeries::PowerSeries(std::size_t degree) : coeffs_(degree + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw ValidationError("PowerSeries: need at least a constant term");
    }
}

PowerSeries PowerSeries::one(std::size_t degree)
{
    PowerSeries s(degree);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeries PowerSeries::log_one_minus(const Rational& c, std::size_t m, std::size_t degree)
{
    if (m == 0) {
        throw ValidationError("log_one_minus: exponent must be positive");
    }
    PowerSeries s(degree);
    Rational power = 1;
    for (std::size_t k = 1; k * m <= degree; ++k) {
        power *= c;
        s.coeffs_[k * m] = -power / static_cast<unsigned long>(k);
    }
    return s;
}

void PowerSeries::require_same_degree(const PowerSeries& other) const
{
    if (degree() != other.degree()) {
        throw ValidationError("PowerSeries: truncation degrees differ (" + std::to_string(degree()) + " vs " +
                              std::to_string(other.degree()) + ")");
    }
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other)
{
    require_same_degree(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other)
{
    require_same_degree(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    a.require_same_degree(b);
    const std::size_t n = a.degree();
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j] != 0) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return out;
}

PowerSeries PowerSeries::inverse() const
{
    if (coeffs_[0] == 0) {
        throw ValidationError("PowerSeries::inverse: zero constant term");
    }
    const std::size_t n = degree();
    PowerSeries out(n);
    Rational inv0 = 1 / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (coeffs_[i] != 0) {
                acc += coeffs_[i] * out.coeffs_[k - i];
            }
        }
        out.coeffs_[k] = -acc * inv0;
    }
    return out;
}

PowerSeries PowerSeries::exp() const
{
    if (coeffs_[0] != 0) {
        throw ValidationError("PowerSeries::exp: constant term must be zero");
    }
    // c' = a' c  =>  k c_k = sum_{i=1..k} i a_i c_{k-i}
    const std::size_t n = degree();
    PowerSeries out(n);
    out.coeffs_[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (coeffs_[i] != 0) {
                acc += static_cast<unsigned long>(i) * coeffs_[i] * out.coeffs_[k - i];
            }
        }
        out.coeffs_[k] = acc / static_cast<unsigned long>(k);
    }
    return out;
}

PowerSeries PowerSeries::log() const
{
    if (coeffs_[0] != 1) {
        throw ValidationError("PowerSeries::log: constant term must be one");
    }
    // p = exp(b)  =>  k b_k = k p_k - sum_{i=1..k-1} i b_i p_{k-i}
    const std::size_t n = degree();
    PowerSeries out(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = static_cast<unsigned long>(k) * coeffs_[k];
        for (std::size_t i = 1; i < k; ++i) {
            if (coeffs_[k - i] != 0 && out.coeffs_[i] != 0) {
                acc -= static_cast<unsigned long>(i) * out.coeffs_[i] * coeffs_[k - i];
            }
        }
        out.coeffs_[k] = acc / static_cast<unsigned long>(k);
    }
    return out;
}

} // namespace orbitkit
