#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "orbitkit/counting.hpp"
#include "orbitkit/power_series.hpp"

namespace orbitkit {

// Angle 2 pi num / den, kept exact so that boundary zeros are detected exactly.
struct AngleTurns {
    std::int64_t num;
    std::uint64_t den;

    // den = 3^r
    static AngleTurns triadic(std::int64_t num, unsigned r);
    double radians() const;
};

// z = radius * exp(2 pi i angle)
struct PolarPoint {
    double radius;
    AngleTurns angle;

    std::complex<double> to_complex() const;
};

struct ScanRow {
    double radius;
    std::int64_t angle_num;
    std::uint64_t angle_den;
    double product_modulus;
    double series_modulus;
    unsigned terms_j; // factors j = 1..J in the product
    std::size_t terms_n; // series truncated at degree N
};

// xi(z) = sum F_n z^n / n, so zeta = exp(xi).
PowerSeries xi_series(const OrbitTable& table, std::size_t degree);

// Coefficients of zeta(z) = exp xi(z). Each must be a nonnegative integer.
PowerSeries zeta_series(const OrbitTable& table, std::size_t degree);

// prod_n (1 - z^n)^{-O_n}, truncated; independent of zeta_series.
PowerSeries orbit_product_series(const OrbitTable& table, std::size_t degree);

// xi_1(z) = sum_n (z^{2n}/n) (4^n - 1) |n|_3.
PowerSeries xi1_direct(std::size_t degree);

// xi_1 regrouped by the exact power of 3 dividing n:
// log((1-z^2)/(1-4z^2)) + 2 sum_{j>=1} 9^{-j} log((1-(2z)^{2*3^j}) / (1-z^{2*3^j})).
PowerSeries xi1_closed_form(std::size_t degree);

// log((1-z)/(1-2z)) - (1/2) log((1-z^2)/(1-4z^2)) + (1/6) xi_1(z); equals xi for f.
PowerSeries xi_decomposition(std::size_t degree);

// |zeta(z)| from the boundary product formula, keeping factors j <= terms_j.
// Requires |z| <= 1/2 and z != 1/2. Returns exactly 0 on a vanishing factor.
double modulus_product(std::complex<double> z, unsigned terms_j);
double modulus_product(const PolarPoint& z, unsigned terms_j);

// |exp(sum_{n <= N} F_n z^n / n)|; requires |z| <= 1/2.
double series_modulus(const OrbitTable& table, std::complex<double> z, std::size_t terms_n);

std::vector<ScanRow> radial_scan(AngleTurns angle, std::span<const double> radii, unsigned terms_j,
                                 std::size_t terms_n, const OrbitTable& table);
std::vector<ScanRow> radial_scan(std::int64_t angle_num, unsigned angle_exp_r, std::span<const double> radii,
                                 unsigned terms_j, std::size_t terms_n, const OrbitTable& table);

// Product modulus strictly decreasing over the last `tail` rows, ending below `threshold`.
bool decays_toward_zero(std::span<const ScanRow> rows, std::size_t tail = 5, double threshold = 1.0);

} // namespace orbitkit
