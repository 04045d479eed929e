#include "orbitkit/zeta.hpp"

#include <cmath>
#include <numbers>

namespace orbitkit {

namespace {

void require_degree(const OrbitTable& table, std::size_t degree, const char* what)
{
    if (degree > table.n_max()) {
        throw ValidationError(std::string(what) + ": degree " + std::to_string(degree) +
                              " exceeds table size " + std::to_string(table.n_max()));
    }
}

BigInt pow_ui(unsigned long base, unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

PowerSeries from_integers(const std::vector<BigInt>& values)
{
    std::vector<Rational> coeffs(values.begin(), values.end());
    return PowerSeries(std::move(coeffs));
}

// log((1 - a z^m) / (1 - b z^m))
PowerSeries log_ratio(const Rational& a, const Rational& b, std::size_t m, std::size_t degree)
{
    return PowerSeries::log_one_minus(a, m, degree) - PowerSeries::log_one_minus(b, m, degree);
}

// |1 - w| for w = rho^m exp(2 pi i theta), with theta reduced exactly mod 1.
double one_minus_abs(double rho, std::uint64_t m, const AngleTurns& angle)
{
    const auto den = static_cast<__int128>(angle.den);
    __int128 turns = (static_cast<__int128>(m % angle.den) * (angle.num % static_cast<std::int64_t>(angle.den))) % den;
    if (turns < 0) {
        turns += den;
    }
    const double mag = std::pow(rho, static_cast<double>(m));
    if (turns == 0) {
        return std::fabs(1.0 - mag);
    }
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(turns) / static_cast<double>(angle.den);
    return std::abs(std::complex<double>(1.0 - mag * std::cos(phi), -mag * std::sin(phi)));
}

// Accumulates weight * log|factor|; a zero numerator factor pins the result to 0.
struct LogModulus {
    double sum = 0.0;
    bool zero = false;

    void add(double factor_abs, double weight)
    {
        if (factor_abs == 0.0) {
            if (weight > 0) {
                zero = true;
                return;
            }
            throw InternalError("modulus_product: vanishing denominator factor");
        }
        sum += weight * std::log(factor_abs);
    }
    double value() const { return zero ? 0.0 : std::exp(sum); }
};

void require_in_disc(double radius)
{
    if (!(radius >= 0.0) || radius > 0.5) {
        throw ValidationError("modulus_product: |z| must be at most 1/2");
    }
}

} // namespace

AngleTurns AngleTurns::triadic(std::int64_t num, unsigned r)
{
    if (r > 39) {
        throw ValidationError("AngleTurns: 3^r must fit in 64 bits");
    }
    std::uint64_t den = 1;
    for (unsigned i = 0; i < r; ++i) {
        den *= 3;
    }
    return {num, den};
}

double AngleTurns::radians() const
{
    return 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

std::complex<double> PolarPoint::to_complex() const { return std::polar(radius, angle.radians()); }

PowerSeries xi_series(const OrbitTable& table, std::size_t degree)
{
    require_degree(table, degree, "xi_series");
    PowerSeries s(degree);
    for (std::size_t n = 1; n <= degree; ++n) {
        s[n] = make_rational(table.fix(n), static_cast<unsigned long>(n));
    }
    return s;
}

PowerSeries zeta_series(const OrbitTable& table, std::size_t degree)
{
    require_degree(table, degree, "zeta_series");
    // n c_n = sum_{k=1..n} F_k c_{n-k}, kept in integers
    std::vector<BigInt> c(degree + 1);
    c[0] = 1;
    BigInt acc;
    for (std::size_t n = 1; n <= degree; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            mpz_addmul(acc.get_mpz_t(), table.fix(k).get_mpz_t(), c[n - k].get_mpz_t());
        }
        if (mpz_divisible_ui_p(acc.get_mpz_t(), n) == 0) {
            throw InternalError("zeta_series: coefficient " + std::to_string(n) + " of " +
                                table.spec().name() + " is not an integer");
        }
        mpz_divexact_ui(c[n].get_mpz_t(), acc.get_mpz_t(), n);
        if (c[n] < 0) {
            throw InternalError("zeta_series: negative coefficient " + std::to_string(n));
        }
    }
    return from_integers(c);
}

PowerSeries orbit_product_series(const OrbitTable& table, std::size_t degree)
{
    require_degree(table, degree, "orbit_product_series");
    std::vector<BigInt> acc(degree + 1);
    acc[0] = 1;
    std::vector<BigInt> binom;
    std::vector<BigInt> next(degree + 1);
    for (std::size_t n = 1; n <= degree; ++n) {
        const BigInt& m = table.orbits(n);
        if (m == 0) {
            continue;
        }
        // (1 - z^n)^{-m} = sum_k C(m + k - 1, k) z^{nk}
        const std::size_t kmax = degree / n;
        binom.assign(kmax + 1, BigInt(0));
        binom[0] = 1;
        for (std::size_t k = 1; k <= kmax; ++k) {
            binom[k] = binom[k - 1] * (m + static_cast<unsigned long>(k - 1));
            mpz_divexact_ui(binom[k].get_mpz_t(), binom[k].get_mpz_t(), k);
        }
        for (std::size_t i = 0; i <= degree; ++i) {
            next[i] = 0;
            for (std::size_t k = 0; k * n <= i; ++k) {
                mpz_addmul(next[i].get_mpz_t(), binom[k].get_mpz_t(), acc[i - k * n].get_mpz_t());
            }
        }
        std::swap(acc, next);
    }
    return from_integers(acc);
}

PowerSeries xi1_direct(std::size_t degree)
{
    PowerSeries s(degree);
    for (std::size_t n = 1; 2 * n <= degree; ++n) {
        const BigInt nn(static_cast<unsigned long>(n));
        const PAdicAbs abs_n = padic_abs(nn, 3);
        s[2 * n] = make_rational(pow_ui(4, n) - 1, nn * abs_n.inverse());
    }
    return s;
}

PowerSeries xi1_closed_form(std::size_t degree)
{
    // j = 0 term of the 3-adic regrouping
    PowerSeries s = log_ratio(1, 4, 2, degree);
    Rational weight = 2;
    for (std::size_t m = 6; m <= degree; m *= 3) {
        weight /= 9;
        // (2z)^m = 2^m z^m
        s += weight * log_ratio(Rational(pow_ui(2, m)), 1, m, degree);
    }
    return s;
}

PowerSeries xi_decomposition(std::size_t degree)
{
    PowerSeries one_minus_z = PowerSeries::one(degree);
    PowerSeries one_minus_2z = PowerSeries::one(degree);
    PowerSeries one_minus_z2 = PowerSeries::one(degree);
    PowerSeries one_minus_4z2 = PowerSeries::one(degree);
    if (degree >= 1) {
        one_minus_z[1] = -1;
        one_minus_2z[1] = -2;
    }
    if (degree >= 2) {
        one_minus_z2[2] = -1;
        one_minus_4z2[2] = -4;
    }
    PowerSeries odd_part = (one_minus_z * one_minus_2z.inverse()).log();
    PowerSeries even_part = (one_minus_z2 * one_minus_4z2.inverse()).log();
    return odd_part - Rational(1, 2) * even_part + Rational(1, 6) * xi1_closed_form(degree);
}

double modulus_product(const PolarPoint& z, unsigned terms_j)
{
    require_in_disc(z.radius);
    const double rho = 2.0 * z.radius;
    const AngleTurns& a = z.angle;
    if (rho == 1.0 && a.num % static_cast<std::int64_t>(a.den) == 0) {
        throw ValidationError("modulus_product: z = 1/2 is a pole");
    }
    // |(1-z)/(1-2z)| |1-(2z)^2|^{1/2-1/6} |1-z^2|^{1/6-1/2} prod_j |...|^{1/(3 9^j)}
    LogModulus acc;
    acc.add(one_minus_abs(z.radius, 1, a), 1.0);
    acc.add(one_minus_abs(rho, 1, a), -1.0);
    acc.add(one_minus_abs(rho, 2, a), 1.0 / 3.0);
    acc.add(one_minus_abs(z.radius, 2, a), -1.0 / 3.0);
    std::uint64_t m = 2;
    double weight = 1.0 / 3.0;
    for (unsigned j = 1; j <= terms_j && !acc.zero; ++j) {
        m *= 3;
        weight /= 9.0;
        acc.add(one_minus_abs(rho, m, a), weight);
        acc.add(one_minus_abs(z.radius, m, a), -weight);
    }
    return acc.value();
}

double modulus_product(std::complex<double> z, unsigned terms_j)
{
    require_in_disc(std::abs(z));
    if (z == std::complex<double>(0.5, 0.0)) {
        throw ValidationError("modulus_product: z = 1/2 is a pole");
    }
    const std::complex<double> one(1.0, 0.0);
    const std::complex<double> two_z = 2.0 * z;
    LogModulus acc;
    acc.add(std::abs(one - z), 1.0);
    acc.add(std::abs(one - two_z), -1.0);
    std::complex<double> w_big = two_z * two_z;
    std::complex<double> w_small = z * z;
    acc.add(std::abs(one - w_big), 1.0 / 3.0);
    acc.add(std::abs(one - w_small), -1.0 / 3.0);
    double weight = 1.0 / 3.0;
    for (unsigned j = 1; j <= terms_j && !acc.zero; ++j) {
        w_big = w_big * w_big * w_big;
        w_small = w_small * w_small * w_small;
        weight /= 9.0;
        acc.add(std::abs(one - w_big), weight);
        acc.add(std::abs(one - w_small), -weight);
    }
    return acc.value();
}

double series_modulus(const OrbitTable& table, std::complex<double> z, std::size_t terms_n)
{
    require_degree(table, terms_n, "series_modulus");
    if (std::abs(z) > 0.5) {
        throw ValidationError("series_modulus: |z| must be at most 1/2");
    }
    // F_n z^n / n = (F_n / 2^n) (2z)^n / n keeps every factor bounded
    const std::complex<double> two_z = 2.0 * z;
    std::complex<double> power(1.0, 0.0);
    double real_part = 0.0;
    for (std::size_t n = 1; n <= terms_n; ++n) {
        power *= two_z;
        long exp2 = 0;
        double mant = mpz_get_d_2exp(&exp2, table.fix(n).get_mpz_t());
        double scaled = std::ldexp(mant, static_cast<int>(exp2 - static_cast<long>(n)));
        real_part += scaled * power.real() / static_cast<double>(n);
    }
    return std::exp(real_part);
}

std::vector<ScanRow> radial_scan(AngleTurns angle, std::span<const double> radii, unsigned terms_j,
                                 std::size_t terms_n, const OrbitTable& table)
{
    if (angle.den == 0) {
        throw ValidationError("radial_scan: angle denominator must be positive");
    }
    std::vector<ScanRow> rows;
    rows.reserve(radii.size());
    for (double r : radii) {
        if (!(r > 0.0) || r >= 0.5) {
            throw ValidationError("radial_scan: radii must lie in (0, 1/2)");
        }
        PolarPoint p{r, angle};
        rows.push_back({r, angle.num, angle.den, modulus_product(p, terms_j),
                        series_modulus(table, p.to_complex(), terms_n), terms_j, terms_n});
    }
    return rows;
}

std::vector<ScanRow> radial_scan(std::int64_t angle_num, unsigned angle_exp_r, std::span<const double> radii,
                                 unsigned terms_j, std::size_t terms_n, const OrbitTable& table)
{
    return radial_scan(AngleTurns::triadic(angle_num, angle_exp_r), radii, terms_j, terms_n, table);
}

bool decays_toward_zero(std::span<const ScanRow> rows, std::size_t tail, double threshold)
{
    if (rows.size() < tail || tail < 2) {
        return false;
    }
    auto last = rows.subspan(rows.size() - tail);
    for (std::size_t i = 1; i < last.size(); ++i) {
        if (!(last[i].product_modulus < last[i - 1].product_modulus)) {
            return false;
        }
    }
    return last.back().product_modulus < threshold;
}

} // namespace orbitkit
