#include "orbitkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "orbitkit/asymptotics.hpp"
#include "orbitkit/zeta.hpp"

namespace orbitkit {

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass) {
            pass = false;
            detail = why;
        }
    }
};

std::string window(std::uint64_t lo, std::uint64_t hi)
{
    return std::to_string(lo) + ".." + std::to_string(hi);
}

BigInt mersenne(std::uint64_t n)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r - 1;
}

OrbitTable corrupt(const OrbitTable& t)
{
    std::vector<BigInt> fix(t.fix_counts().begin(), t.fix_counts().end());
    std::vector<BigInt> least(t.least_counts().begin(), t.least_counts().end());
    std::vector<BigInt> orbits(t.orbit_counts().begin(), t.orbit_counts().end());
    if (orbits.size() >= 2) {
        orbits[1] += 1;
        least[1] += 2;
    }
    return OrbitTable(t.spec(), std::move(fix), std::move(least), std::move(orbits));
}

class Suite {
public:
    void run(std::string name, std::string params, const std::function<void(Outcome&)>& body)
    {
        Outcome o;
        try {
            body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        results.push_back({std::move(name), std::move(params), o.pass, o.detail});
    }

    std::vector<CheckResult> results;
};

} // namespace

std::vector<CheckResult> run_invariants(const VerifyOptions& options)
{
    const std::uint64_t max = std::max<std::uint64_t>(options.max, 1);
    const auto f = MapSpec::three_adic_extension();
    const auto g = MapSpec::circle_doubling();

    // base tables cover the square identity (2n <= 2 max), the k = 3 double sum
    // window (3 * 200) and the fixed zeta windows
    const std::uint64_t base_size = std::max<std::uint64_t>(2 * max, 600);
    const OrbitTable tf = options.inject_fault ? corrupt(build_table(f, base_size)) : build_table(f, base_size);
    const OrbitTable tg = build_table(g, base_size);
    const auto n_iter = std::min<std::uint64_t>(max, 200);
    Suite s;

    // arith
    s.run("mobius_divisor_sum", "n=" + window(1, max), [&](Outcome& o) {
        for (std::uint64_t n = 1; n <= max; ++n) {
            int sum = 0;
            for (auto d : divisors(n)) {
                sum += mobius(d);
            }
            if (sum != (n == 1 ? 1 : 0)) {
                o.fail("n=" + std::to_string(n));
            }
        }
    });
    s.run("multiplicativity", "m,n=" + window(1, std::min<std::uint64_t>(max, 200)), [&](Outcome& o) {
        const auto lim = std::min<std::uint64_t>(max, 200);
        for (std::uint64_t m = 1; m <= lim; ++m) {
            for (std::uint64_t n = 1; n <= lim; ++n) {
                if (std::gcd(m, n) == 1 && mobius(m * n) != mobius(m) * mobius(n)) {
                    o.fail("mobius at " + std::to_string(m) + "," + std::to_string(n));
                }
                BigInt bm(static_cast<unsigned long>(m)), bn(static_cast<unsigned long>(n));
                if (ord_p(bm * bn, 3) != ord_p(bm, 3) + ord_p(bn, 3)) {
                    o.fail("ord_3 at " + std::to_string(m) + "," + std::to_string(n));
                }
            }
        }
    });
    s.run("divisor_pairing", "n=" + window(1, max), [&](Outcome& o) {
        for (std::uint64_t n = 1; n <= max; ++n) {
            auto ds = divisors(n);
            for (auto d : ds) {
                if (!std::binary_search(ds.begin(), ds.end(), n / d)) {
                    o.fail("n=" + std::to_string(n));
                }
            }
        }
    });
    s.run("padic_abs_bounds", "n=" + window(1, max), [&](Outcome& o) {
        for (std::uint64_t n = 1; n <= max; ++n) {
            auto v = padic_abs(BigInt(static_cast<unsigned long>(n)), 3).value();
            if (v <= 0 || v > 1 || v < Rational(1, static_cast<unsigned long>(n))) {
                o.fail("n=" + std::to_string(n));
            }
        }
    });

    // counting
    s.run("sumdiv_round_trip", "maps=f,g n=" + window(1, max), [&](Outcome& o) {
        for (const OrbitTable* t : {&tf, &tg}) {
            for (std::uint64_t n = 1; n <= max; ++n) {
                BigInt sum = 0;
                for (auto d : divisors(n)) {
                    sum += t->least(d);
                }
                if (sum != t->fix(n) || t->least(n) != BigInt(static_cast<unsigned long>(n)) * t->orbits(n)) {
                    o.fail(t->spec().name() + " n=" + std::to_string(n));
                }
            }
        }
    });
    s.run("padic_factor_vs_division", "n=" + window(1, max), [&](Outcome& o) {
        for (std::uint64_t n = 1; n <= max; ++n) {
            if (padic_factor(n).valuation() != ord_p(mersenne(n), 3)) {
                o.fail("n=" + std::to_string(n));
            }
        }
    });
    s.run("even_divisibility", "n=" + window(2, max), [&](Outcome& o) {
        for (std::uint64_t n = 2; n <= max; n += 2) {
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), 3, 1 + ord_p(BigInt(static_cast<unsigned long>(n)), 3));
            if (mpz_divisible_p(mersenne(n).get_mpz_t(), p.get_mpz_t()) == 0) {
                o.fail("n=" + std::to_string(n));
            }
        }
    });
    s.run("orbit_domination", "n=" + window(1, max), [&](Outcome& o) {
        for (std::uint64_t n = 1; n <= max; ++n) {
            if (tf.orbits(n) > tg.orbits(n)) {
                o.fail("n=" + std::to_string(n));
            }
        }
    });
    s.run("proper_divisor_sum_bound", "n=" + window(1, max), [&](Outcome& o) {
        for (std::uint64_t n = 1; n <= max; ++n) {
            BigInt lhs = 0;
            for (auto d : divisors(n)) {
                if (d < n) {
                    lhs += mersenne(d);
                }
            }
            if (3 * lhs > 2 * mersenne(n)) {
                o.fail("n=" + std::to_string(n));
            }
        }
    });
    s.run("iterate_double_sum", "k=2,3 n=" + window(1, n_iter), [&](Outcome& o) {
        for (const OrbitTable* t : {&tf, &tg}) {
            for (unsigned k : {2u, 3u}) {
                auto direct = build_table(MapSpec::iterate(t->spec(), k), n_iter);
                for (std::uint64_t n = 1; n <= n_iter; ++n) {
                    if (orbit_count_iterate(*t, k, n) != direct.orbits(n)) {
                        o.fail(t->spec().name() + " k=" + std::to_string(k) + " n=" + std::to_string(n));
                    }
                }
            }
        }
    });
    s.run("square_identity", "n=" + window(1, max), [&](Outcome& o) {
        for (const OrbitTable* t : {&tf, &tg}) {
            for (std::uint64_t n = 1; n <= max; ++n) {
                if (iterate_square_identity(*t, n) != orbit_count_iterate(*t, 2, n)) {
                    o.fail(t->spec().name() + " n=" + std::to_string(n));
                }
            }
        }
    });
    s.run("killed_orbits", "n=2,6", [&](Outcome& o) {
        if (tf.orbits(2) != 0 || tf.orbits(6) != 0) {
            o.fail("O_2(f)=" + to_string(tf.orbits(2)) + " O_6(f)=" + to_string(tf.orbits(6)));
        }
    });
    s.run("fix_vs_orbit_counterexample", "n=1..100", [&](Outcome& o) {
        auto cf = build_table(MapSpec::custom({1, 3}), 100);
        auto cg = build_table(MapSpec::custom({6, 1}), 100);
        for (std::uint64_t n = 1; n <= 100; ++n) {
            const long sign = n % 2 == 0 ? 1 : -1;
            if (cf.fix(n) != 4 + 3 * sign || cg.fix(n) != 7 + sign || !(cf.fix(n) < cg.fix(n))) {
                o.fail("n=" + std::to_string(n));
            }
        }
        if (!(cf.orbits(2) > cg.orbits(2))) {
            o.fail("O_2 domination unexpectedly holds");
        }
    });

    // asymptotics
    s.run("pi_domination", "X=" + window(1, max), [&](Outcome& o) {
        BigInt pf = 0, pg = 0;
        for (std::uint64_t x = 1; x <= max; ++x) {
            pf += tf.orbits(x);
            pg += tg.orbits(x);
            if (pf > pg) {
                o.fail("X=" + std::to_string(x));
            }
        }
    });
    const auto& b = kBands;
    s.run("pnt_ratio_band", "X=" + window(b.burn_in, max) + " tol=0.02", [&](Outcome& o) {
        if (max < b.burn_in) {
            return;
        }
        const double lo = 1.0 / 3.0 - b.ratio_tolerance, hi = 1.0 + b.ratio_tolerance;
        for (const auto& p : ratio_series(tf, max, b.burn_in)) {
            double r = p.ratio.get_d();
            if (r < lo || r > hi) {
                o.fail("X=" + std::to_string(p.x));
            }
        }
    });
    s.run("pnt_baseline_g", "X=" + window(b.burn_in, max) + " tol=0.02", [&](Outcome& o) {
        if (max < b.burn_in) {
            return;
        }
        for (const auto& p : ratio_series(tg, max, b.burn_in)) {
            if (std::fabs(p.ratio.get_d() - 1.0) >= b.baseline_tolerance) {
                o.fail("X=" + std::to_string(p.x));
            }
        }
    });
    s.run("merten_sandwich", "X=" + window(b.merten_start, max) + " slack=2", [&](Outcome& o) {
        if (max < b.merten_start) {
            return;
        }
        for (const auto& p : merten_series(tf, max)) {
            if (p.x < b.merten_start) {
                continue;
            }
            const Real slack = Real::from_double(b.merten_slack);
            const Real half = Real::from_double(0.5);
            const Real sum = Real::from_rational(p.sum);
            if (sum < half * p.log_x - slack || sum > p.log_x + slack) {
                o.fail("X=" + std::to_string(p.x));
            }
        }
    });
    s.run("merten_baseline_g", "X=" + window(b.merten_start, max) + " slack=2", [&](Outcome& o) {
        if (max < b.merten_start) {
            return;
        }
        for (const auto& p : merten_series(tg, max)) {
            if (p.x >= b.merten_start && std::fabs((Real::from_rational(p.sum) - p.log_x).to_double()) > b.merten_slack) {
                o.fail("X=" + std::to_string(p.x));
            }
        }
    });
    s.run("delta_gap_bound", "X=" + window(1, max) + " window=[0.3,1.5]", [&](Outcome& o) {
        for (std::uint64_t x = 1; x <= max; ++x) {
            auto d = delta_gap(tf, tg, x);
            if (d.gap > d.even_bound) {
                o.fail("X=" + std::to_string(x));
            }
            if (x % 2 == 0 && x >= b.burn_in) {
                BigInt den;
                mpz_ui_pow_ui(den.get_mpz_t(), 4, x / 2);
                double scaled = make_rational(d.even_bound * static_cast<unsigned long>(x / 2), den).get_d();
                if (scaled < b.delta_low || scaled > b.delta_high) {
                    o.fail("window at X=" + std::to_string(x));
                }
            }
        }
    });

    // zeta
    const auto n_zeta = std::min<std::uint64_t>(max, 400);
    s.run("zeta_vs_orbit_product", "N=" + std::to_string(n_zeta), [&](Outcome& o) {
        if (zeta_series(tf, n_zeta) != orbit_product_series(tf, n_zeta)) {
            o.fail("series differ");
        }
    });
    s.run("zeta_g_closed_form", "N=" + std::to_string(n_zeta), [&](Outcome& o) {
        auto z = zeta_series(tg, n_zeta);
        for (std::uint64_t n = 1; n <= n_zeta; ++n) {
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, n - 1);
            if (z[n] != Rational(p)) {
                o.fail("n=" + std::to_string(n));
            }
        }
    });
    const auto n_xi1 = std::max<std::uint64_t>(max, 2);
    s.run("xi1_identity", "N=" + std::to_string(n_xi1), [&](Outcome& o) {
        if (xi1_direct(n_xi1) != xi1_closed_form(n_xi1)) {
            o.fail("series differ");
        }
    });
    s.run("xi_decomposition", "N=" + std::to_string(n_zeta), [&](Outcome& o) {
        if (xi_series(tf, n_zeta) != xi_decomposition(n_zeta)) {
            o.fail("series differ");
        }
    });
    s.run("coefficient_growth", "n=200..400 tol=0.05", [&](Outcome& o) {
        auto z = zeta_series(tf, 400);
        for (std::uint64_t n = 200; n <= 400; ++n) {
            long e = 0;
            double m = mpz_get_d_2exp(&e, z[n].get_num_mpz_t());
            double rate = (std::log2(m) + static_cast<double>(e)) / static_cast<double>(n);
            if (std::fabs(rate - 1.0) > 0.05) {
                o.fail("n=" + std::to_string(n));
            }
        }
    });
    s.run("fix_ratio_non_convergence", "n=1..200 witnesses >2.2 and <1.0", [&](Outcome& o) {
        bool above = false, below = false;
        for (std::uint64_t n = 1; n < 200; ++n) {
            Rational q = make_rational(tf.fix(n + 1), tf.fix(n));
            above = above || q > Rational(11, 5);
            below = below || q < 1;
        }
        if (!above || !below) {
            o.fail("missing witness");
        }
    });
    s.run("boundary_zeros", "(j,r)=(1,1),(1,2),(2,2) J=10", [&](Outcome& o) {
        for (auto [j, r] : {std::pair{1, 1u}, {1, 2u}, {2, 2u}}) {
            if (modulus_product(PolarPoint{0.5, AngleTurns::triadic(j, r)}, 10) != 0.0) {
                o.fail("j=" + std::to_string(j) + " r=" + std::to_string(r));
            }
        }
    });
    s.run("boundary_ray_decay", "angle=1/3 J=10", [&](Outcome& o) {
        const std::vector<double> radii{0.49, 0.495, 0.499, 0.4995, 0.4999};
        if (!decays_toward_zero(radial_scan(1, 1, radii, 10, 1, tf))) {
            o.fail("not strictly decreasing");
        }
    });
    s.run("interior_product_vs_series", "z=0.4 J=8 N=4000 tol=1e-6", [&](Outcome& o) {
        auto big = build_table(f, 4000);
        double prod = modulus_product(std::complex<double>(0.4, 0.0), 8);
        double series = series_modulus(big, std::complex<double>(0.4, 0.0), 4000);
        if (std::fabs(prod - series) > 1e-6) {
            std::ostringstream msg;
            msg << "product=" << prod << " series=" << series;
            o.fail(msg.str());
        }
    });
    return s.results;
}

} // namespace orbitkit
