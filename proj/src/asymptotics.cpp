#include "orbitkit/asymptotics.hpp"

#include <algorithm>
#include <limits>

namespace orbitkit {

namespace {

void require_range(const OrbitTable& table, std::uint64_t x, const char* what)
{
    if (x == 0 || x > table.n_max()) {
        throw ValidationError(std::string(what) + ": X = " + std::to_string(x) + " outside 1.." +
                              std::to_string(table.n_max()));
    }
}

Rational ratio_of(const BigInt& pi, std::uint64_t x)
{
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, x + 1);
    return make_rational(BigInt(static_cast<unsigned long>(x)) * pi, den);
}

} // namespace

BigInt pi_sum(const OrbitTable& table, std::uint64_t x)
{
    require_range(table, x, "pi_sum");
    BigInt total = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        total += table.orbits(n);
    }
    return total;
}

Rational pnt_ratio(const OrbitTable& table, std::uint64_t x) { return ratio_of(pi_sum(table, x), x); }

std::vector<RatioPoint> ratio_series(const OrbitTable& table, std::uint64_t x_max, std::uint64_t burn_in)
{
    require_range(table, x_max, "ratio_series");
    if (burn_in == 0 || burn_in > x_max) {
        throw ValidationError("ratio_series: burn-in must lie in 1.." + std::to_string(x_max));
    }
    std::vector<RatioPoint> out;
    out.reserve(x_max - burn_in + 1);
    BigInt pi = burn_in > 1 ? pi_sum(table, burn_in - 1) : BigInt(0);
    for (std::uint64_t x = burn_in; x <= x_max; ++x) {
        pi += table.orbits(x);
        auto r = ratio_of(pi, x);
        if (out.empty()) {
            out.push_back({x, pi, r, r, r});
            continue;
        }
        const auto& prev = out.back();
        out.push_back({x, pi, r, std::min(prev.running_min, r), std::max(prev.running_max, r)});
    }
    return out;
}

DeltaGap delta_gap(const OrbitTable& table_f, const OrbitTable& table_g, std::uint64_t x)
{
    require_range(table_f, x, "delta_gap");
    require_range(table_g, x, "delta_gap");
    DeltaGap d{pi_sum(table_g, x) - pi_sum(table_f, x), 0};
    if (d.gap < 0) {
        throw InternalError("delta_gap: pi_g(X) < pi_f(X) at X = " + std::to_string(x));
    }
    for (std::uint64_t n = 2; n <= x; n += 2) {
        d.even_bound += table_g.orbits(n);
    }
    return d;
}

std::vector<MertenPoint> merten_series(const OrbitTable& table, std::uint64_t x_max, long bits)
{
    require_range(table, x_max, "merten_series");
    std::vector<MertenPoint> out;
    out.reserve(x_max);
    Rational sum = 0;
    BigInt pow2 = 1;
    for (std::uint64_t x = 1; x <= x_max; ++x) {
        pow2 <<= 1;
        sum += make_rational(table.orbits(x), pow2);
        auto log_x = Real::log_of(x, bits);
        std::optional<Real> normalized;
        if (x >= 2) {
            normalized = Real::from_rational(sum, bits) / log_x;
        }
        out.push_back({x, sum, std::move(log_x), std::move(normalized)});
    }
    return out;
}

std::vector<RatioCluster> cluster_ratios(std::span<const RatioPoint> points, double gap)
{
    std::vector<double> values;
    values.reserve(points.size());
    for (const auto& p : points) {
        values.push_back(p.ratio.get_d());
    }
    std::sort(values.begin(), values.end());
    std::vector<RatioCluster> out;
    for (double v : values) {
        if (!out.empty() && v - out.back().high <= gap) {
            out.back().high = v;
            ++out.back().count;
        } else {
            out.push_back({v, v, 1});
        }
    }
    return out;
}

MertenConstants merten_constants(std::span<const MertenPoint> points, std::uint64_t from)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    MertenConstants c{inf, -inf, inf, -inf};
    for (const auto& p : points) {
        if (p.x < from) {
            continue;
        }
        double s = p.sum.get_d();
        double l = p.log_x.to_double();
        c.min_minus_log = std::min(c.min_minus_log, s - l);
        c.max_minus_log = std::max(c.max_minus_log, s - l);
        c.min_minus_half_log = std::min(c.min_minus_half_log, s - 0.5 * l);
        c.max_minus_half_log = std::max(c.max_minus_half_log, s - 0.5 * l);
    }
    return c;
}

} // namespace orbitkit
