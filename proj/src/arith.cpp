#include "orbitkit/arith.hpp"

#include <algorithm>

namespace orbitkit {

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const Rational& v)
{
    return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0) {
        throw ValidationError("divisors: n must be positive");
    }
    std::vector<std::uint64_t> small;
    std::vector<std::uint64_t> large;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(std::uint64_t n)
{
    if (n == 0) {
        throw ValidationError("mobius: n must be positive");
    }
    int result = 1;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) {
            continue;
        }
        n /= p;
        if (n % p == 0) {
            return 0;
        }
        result = -result;
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

unsigned ord_p(const BigInt& n, unsigned long p)
{
    if (n <= 0) {
        throw ValidationError("ord_p: n must be positive");
    }
    if (!is_prime(p)) {
        throw ValidationError("ord_p: p must be prime");
    }
    BigInt rest = n;
    unsigned a = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++a;
    }
    return a;
}

PAdicAbs::PAdicAbs(unsigned long prime, unsigned valuation) : prime_(prime), valuation_(valuation)
{
    if (!is_prime(prime)) {
        throw ValidationError("PAdicAbs: " + std::to_string(prime) + " is not prime");
    }
}

Rational PAdicAbs::value() const { return make_rational(1, inverse()); }

BigInt PAdicAbs::inverse() const
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), prime_, valuation_);
    return r;
}

double PAdicAbs::to_double() const { return value().get_d(); }

PAdicAbs operator*(const PAdicAbs& a, const PAdicAbs& b)
{
    if (a.prime_ != b.prime_) {
        throw ValidationError("PAdicAbs: mixed primes in product");
    }
    return PAdicAbs(a.prime_, a.valuation_ + b.valuation_);
}

std::strong_ordering operator<=>(const PAdicAbs& a, const PAdicAbs& b)
{
    if (a.prime_ != b.prime_) {
        throw ValidationError("PAdicAbs: mixed primes in comparison");
    }
    // larger valuation means smaller value
    return b.valuation_ <=> a.valuation_;
}

PAdicAbs padic_abs(const BigInt& n, unsigned long p) { return PAdicAbs(p, ord_p(n, p)); }

std::string to_string(const PAdicAbs& v)
{
    return std::to_string(v.prime()) + "^(-" + std::to_string(v.valuation()) + ")";
}

} // namespace orbitkit
