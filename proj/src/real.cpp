#include "orbitkit/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace orbitkit {

long precision_from_env()
{
    const char* raw = std::getenv("ORBITKIT_PRECISION_BITS");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultPrecisionBits;
    }
    char* end = nullptr;
    long bits = std::strtol(raw, &end, 10);
    if (*end != '\0' || bits < kMinPrecisionBits || bits > 1L << 20) {
        throw ValidationError("ORBITKIT_PRECISION_BITS must be an integer in [" +
                              std::to_string(kMinPrecisionBits) + ", 1048576], got '" + raw + "'");
    }
    return bits;
}

Real::Real(long bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    // leave the source as a valid zero at minimal cost
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_rational(const Rational& q, long bits)
{
    Real r(bits);
    mpfr_set_q(r.value_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::from_double(double v, long bits)
{
    Real r(bits);
    mpfr_set_d(r.value_, v, MPFR_RNDN);
    return r;
}

Real Real::log_of(std::uint64_t x, long bits)
{
    if (x == 0) {
        throw ValidationError("Real::log_of: argument must be positive");
    }
    Real r(bits);
    mpfr_set_ui(r.value_, static_cast<unsigned long>(x), MPFR_RNDN);
    mpfr_log(r.value_, r.value_, MPFR_RNDN);
    return r;
}

namespace {

long result_precision(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

} // namespace

Real operator+(const Real& a, const Real& b)
{
    Real r(result_precision(a, b));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r(result_precision(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r(result_precision(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    Real r(result_precision(a, b));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b)
{
    if (mpfr_unordered_p(a.value_, b.value_) != 0) {
        return std::partial_ordering::unordered;
    }
    int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) {
        return std::partial_ordering::less;
    }
    return c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::string Real::to_fixed(int digits) const
{
    int len = mpfr_snprintf(nullptr, 0, "%.*RNf", digits, value_);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", digits, value_);
    std::string s(buf.data(), static_cast<std::size_t>(len));
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') {
        s.erase(0, 1); // no "-0.000"
    }
    return s;
}

} // namespace orbitkit
