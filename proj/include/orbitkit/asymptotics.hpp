#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orbitkit/counting.hpp"
#include "orbitkit/real.hpp"

namespace orbitkit {

// Finite-window tolerances for the asymptotic checks. Reports print them.
struct AsymptoticBands {
    std::uint64_t burn_in = 64;
    // ratio X pi_f(X) / 2^{X+1} must stay in [1/3 - tol, 1 + tol]
    double ratio_tolerance = 0.02;
    // pi_g ratio must be within tol of 1
    double baseline_tolerance = 0.02;
    std::uint64_t merten_start = 16;
    // half ln X - slack <= Merten sum of f <= ln X + slack
    double merten_slack = 2.0;
    // even_bound (X/2) / 4^{X/2} window for even X >= burn_in
    double delta_low = 0.3;
    double delta_high = 1.5;
};

inline constexpr AsymptoticBands kBands{};

struct RatioPoint {
    std::uint64_t x;
    BigInt pi;
    Rational ratio; // x pi(x) / 2^{x+1}
    Rational running_min;
    Rational running_max;
};

struct DeltaGap {
    BigInt gap;        // pi_g(X) - pi_f(X)
    BigInt even_bound; // sum of O_n(g) over even n <= X
};

struct MertenPoint {
    std::uint64_t x;
    Rational sum; // sum_{n <= x} O_n / 2^n
    Real log_x;
    std::optional<Real> normalized; // sum / ln x, absent at x = 1
};

struct RatioCluster {
    double low;
    double high;
    std::size_t count;
};

// Offsets of the Merten sum from ln X and from (1/2) ln X over a window.
struct MertenConstants {
    double min_minus_log;
    double max_minus_log;
    double min_minus_half_log;
    double max_minus_half_log;
};

// pi(X) = sum_{n <= X} O_n.
BigInt pi_sum(const OrbitTable& table, std::uint64_t x);

Rational pnt_ratio(const OrbitTable& table, std::uint64_t x);

// One point per X in [burn_in, x_max]; running extrema cover that window only.
std::vector<RatioPoint> ratio_series(const OrbitTable& table, std::uint64_t x_max, std::uint64_t burn_in);

DeltaGap delta_gap(const OrbitTable& table_f, const OrbitTable& table_g, std::uint64_t x);

std::vector<MertenPoint> merten_series(const OrbitTable& table, std::uint64_t x_max,
                                       long bits = kDefaultPrecisionBits);

// Groups ratio values whose sorted neighbours lie within `gap`, ascending.
std::vector<RatioCluster> cluster_ratios(std::span<const RatioPoint> points, double gap = 0.01);

MertenConstants merten_constants(std::span<const MertenPoint> points, std::uint64_t from);

} // namespace orbitkit
