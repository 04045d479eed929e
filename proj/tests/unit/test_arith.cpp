#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "orbitkit/arith.hpp"

using namespace orbitkit;

namespace {

// brute force: test every candidate
std::vector<std::uint64_t> divisors_oracle(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

// linear sieve, independent of trial-division mobius()
std::vector<int> mobius_sieve(std::size_t limit)
{
    std::vector<int> mu(limit + 1, 1);
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::size_t> primes;
    mu[0] = 0;
    for (std::size_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (auto p : primes) {
            if (i * p > limit) {
                break;
            }
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

} // namespace

TEST_CASE("divisors")
{
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(7) == std::vector<std::uint64_t>{1, 7});
    CHECK(divisors(36) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
    CHECK_THROWS_AS(divisors(0), ValidationError);

    for (std::uint64_t n = 1; n <= 2000; ++n) {
        REQUIRE(divisors(n) == divisors_oracle(n));
    }
}

TEST_CASE("divisor pairing involution")
{
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        auto ds = divisors(n);
        std::vector<std::uint64_t> paired;
        for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
            paired.push_back(n / *it);
        }
        REQUIRE(paired == ds);
    }
}

TEST_CASE("mobius")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), ValidationError);

    const auto sieve = mobius_sieve(10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        REQUIRE(mobius(n) == sieve[n]);
        int sum = 0;
        for (auto d : divisors(n)) {
            sum += mobius(d);
        }
        REQUIRE(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("multiplicativity on random pairs")
{
    std::mt19937_64 rng(20021);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
    for (int trial = 0; trial < 20000; ++trial) {
        auto m = pick(rng);
        auto n = pick(rng);
        if (std::gcd(m, n) == 1) {
            REQUIRE(mobius(m * n) == mobius(m) * mobius(n));
        }
        BigInt bm(static_cast<unsigned long>(m)), bn(static_cast<unsigned long>(n));
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
            REQUIRE(ord_p(bm * bn, p) == ord_p(bm, p) + ord_p(bn, p));
        }
    }
}

TEST_CASE("ord_p")
{
    CHECK(ord_p(1, 3) == 0);
    CHECK(ord_p(18, 3) == 2);
    CHECK(ord_p(63, 3) == 2);
    CHECK(ord_p(BigInt("129140163"), 3) == 17); // 3^17
    CHECK_THROWS_AS(ord_p(0, 3), ValidationError);
    CHECK_THROWS_AS(ord_p(-9, 3), ValidationError);
    CHECK_THROWS_AS(ord_p(9, 4), ValidationError);
}

TEST_CASE("padic_abs")
{
    CHECK(padic_abs(63, 3) == PAdicAbs(3, 2));
    CHECK(padic_abs(7, 3) == PAdicAbs(3, 0));
    CHECK(padic_abs(4095, 3) == PAdicAbs(3, 2));
    CHECK(padic_abs(63, 3).value() == Rational(1, 9));
    CHECK(to_string(padic_abs(63, 3)) == "3^(-2)");
    CHECK_THROWS_AS(padic_abs(0, 3), ValidationError);
    CHECK_THROWS_AS(PAdicAbs(6, 1), ValidationError);

    for (unsigned long n = 1; n <= 10000; ++n) {
        auto v = padic_abs(BigInt(n), 3).value();
        REQUIRE(v > 0);
        REQUIRE(v <= 1);
        REQUIRE(v >= Rational(1, n));
    }
}

TEST_CASE("PAdicAbs arithmetic and ordering")
{
    PAdicAbs a(3, 1), b(3, 2);
    CHECK(a * b == PAdicAbs(3, 3));
    CHECK(a > b);
    CHECK(PAdicAbs(3, 0).value() == 1);
    CHECK(b.inverse() == 9);
    CHECK_THROWS_AS(PAdicAbs(3, 1) * PAdicAbs(5, 1), ValidationError);
}

TEST_CASE("rationals stay canonical")
{
    auto q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(make_rational(4, 4)) == "1/1");
    CHECK_THROWS_AS(make_rational(1, 0), ValidationError);
}
