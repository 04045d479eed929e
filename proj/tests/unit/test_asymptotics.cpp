#include <doctest.h>

#include <cmath>

#include "orbitkit/asymptotics.hpp"

using namespace orbitkit;

namespace {

const OrbitTable& table_f()
{
    static const OrbitTable t = build_table(MapSpec::three_adic_extension(), 2000);
    return t;
}

const OrbitTable& table_g()
{
    static const OrbitTable t = build_table(MapSpec::circle_doubling(), 2000);
    return t;
}

} // namespace

TEST_CASE("pi_sum")
{
    CHECK(pi_sum(table_f(), 3) == 3);
    CHECK(pi_sum(table_g(), 3) == 4);
    CHECK(pi_sum(table_f(), 1) == 1);
    CHECK(pi_sum(table_f(), 6) == 10);
    CHECK(pi_sum(table_g(), 6) == 22);
    CHECK_THROWS_AS(pi_sum(table_f(), 0), ValidationError);
    CHECK_THROWS_AS(pi_sum(table_f(), 2001), ValidationError);
}

TEST_CASE("ratio_series")
{
    CHECK(pnt_ratio(table_f(), 6) == make_rational(60, 128));
    CHECK(pnt_ratio(table_f(), 1) == Rational(1, 4));

    auto pts = ratio_series(table_f(), 6, 1);
    REQUIRE(pts.size() == 6);
    CHECK(pts.front().ratio == Rational(1, 4));
    CHECK(pts.back().x == 6);
    CHECK(pts.back().ratio == Rational(15, 32));
    for (const auto& p : pts) {
        CHECK(p.running_min <= p.ratio);
        CHECK(p.ratio <= p.running_max);
        CHECK(p.ratio == pnt_ratio(table_f(), p.x));
    }
    CHECK(pts.back().running_min == Rational(1, 4));

    auto window = ratio_series(table_f(), 6, 4);
    CHECK(window.size() == 3);
    CHECK(window.front().running_min == window.front().ratio);

    CHECK_THROWS_AS(ratio_series(table_f(), 6, 0), ValidationError);
    CHECK_THROWS_AS(ratio_series(table_f(), 6, 7), ValidationError);
    CHECK_THROWS_AS(ratio_series(table_f(), 5000, 64), ValidationError);
}

TEST_CASE("pi domination and the ratio bands over X <= 2000")
{
    BigInt pf = 0, pg = 0;
    for (std::uint64_t x = 1; x <= 2000; ++x) {
        pf += table_f().orbits(x);
        pg += table_g().orbits(x);
        REQUIRE(pf <= pg);
    }
    for (const auto& p : ratio_series(table_f(), 2000, 64)) {
        REQUIRE(p.ratio.get_d() >= 1.0 / 3.0 - 0.02);
        REQUIRE(p.ratio.get_d() <= 1.02);
    }
    for (const auto& p : ratio_series(table_g(), 2000, 64)) {
        REQUIRE(std::fabs(p.ratio.get_d() - 1.0) < 0.02);
    }
}

TEST_CASE("ratio clusters")
{
    auto pts = ratio_series(table_f(), 2000, 64);
    auto clusters = cluster_ratios(pts);
    std::size_t total = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        total += clusters[i].count;
        CHECK(clusters[i].low <= clusters[i].high);
        if (i > 0) {
            CHECK(clusters[i].low - clusters[i - 1].high > 0.01);
        }
    }
    CHECK(total == pts.size());
    MESSAGE("ratio clusters over 64..2000: " << clusters.size());
}

TEST_CASE("delta_gap")
{
    auto d6 = delta_gap(table_f(), table_g(), 6);
    CHECK(d6.gap == 12);
    CHECK(d6.even_bound == 13);
    auto d1 = delta_gap(table_f(), table_g(), 1);
    CHECK(d1.gap == 0);
    CHECK(d1.even_bound == 0);
    auto d3 = delta_gap(table_f(), table_g(), 3);
    CHECK(d3.gap == 1);
    CHECK(d3.even_bound == 1);

    for (std::uint64_t x = 1; x <= 2000; ++x) {
        auto d = delta_gap(table_f(), table_g(), x);
        REQUIRE(d.gap >= 0);
        REQUIRE(d.gap <= d.even_bound);
        if (x % 2 == 0 && x >= 64) {
            BigInt den;
            mpz_ui_pow_ui(den.get_mpz_t(), 4, x / 2);
            double scaled = make_rational(d.even_bound * static_cast<unsigned long>(x / 2), den).get_d();
            REQUIRE(scaled >= 0.3);
            REQUIRE(scaled <= 1.5);
        }
    }
}

TEST_CASE("delta_gap rejects a table pair that breaks domination")
{
    // swapping the roles makes pi_g - pi_f negative
    CHECK_THROWS_AS(delta_gap(table_g(), table_f(), 6), InternalError);
}

TEST_CASE("merten_series")
{
    auto mf = merten_series(table_f(), 3);
    CHECK(mf[0].sum == Rational(1, 2));
    CHECK(mf[2].sum == Rational(3, 4));
    CHECK_FALSE(mf[0].normalized.has_value());
    REQUIRE(mf[1].normalized.has_value());
    CHECK(mf[1].normalized->to_double() == doctest::Approx((1.0 / 2.0) / std::log(2.0)));
    auto mg = merten_series(table_g(), 3);
    CHECK(mg[2].sum == 1);
    CHECK(mg[2].log_x.to_fixed(15) == "1.098612288668110");
    auto wide = merten_series(table_g(), 3, 128);
    CHECK(wide[2].log_x.precision() == 128);
    CHECK(wide[2].log_x.to_fixed(30) == "1.098612288668109691395245236923");

    for (const auto& p : mf) {
        CHECK(mpz_popcount(p.sum.get_den().get_mpz_t()) == 1); // power of two
    }
    CHECK_THROWS_AS(merten_series(table_f(), 2001), ValidationError);
}

TEST_CASE("Merten sandwich over 16 <= X <= 2000")
{
    auto mf = merten_series(table_f(), 2000);
    auto mg = merten_series(table_g(), 2000);
    for (std::size_t i = 15; i < 2000; ++i) {
        double l = mf[i].log_x.to_double();
        double sf = mf[i].sum.get_d();
        REQUIRE(sf >= 0.5 * l - 2.0);
        REQUIRE(sf <= l + 2.0);
        REQUIRE(std::fabs(mg[i].sum.get_d() - l) <= 2.0);
    }
    auto c = merten_constants(mf, 16);
    CHECK(c.min_minus_half_log <= c.max_minus_half_log);
    CHECK(c.max_minus_log < 0.0);
}
