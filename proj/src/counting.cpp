#include "orbitkit/counting.hpp"

#include <cmath>
#include <istream>

namespace orbitkit {

namespace {

BigInt mersenne(std::uint64_t n)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r - 1;
}

void require_positive(std::uint64_t n, const char* what)
{
    if (n == 0) {
        throw ValidationError(std::string(what) + ": n must be positive");
    }
}

struct FixCounter {
    std::uint64_t n;

    BigInt operator()(const MapSpec::CircleDoubling&) const { return mersenne(n); }

    BigInt operator()(const MapSpec::ThreeAdicExtension&) const
    {
        BigInt b = mersenne(n);
        BigInt scale = padic_factor(n).inverse();
        if (mpz_divisible_p(b.get_mpz_t(), scale.get_mpz_t()) == 0) {
            throw InternalError("fix_count: 3-power " + to_string(scale) + " does not divide 2^" +
                                std::to_string(n) + " - 1");
        }
        BigInt r;
        mpz_divexact(r.get_mpz_t(), b.get_mpz_t(), scale.get_mpz_t());
        return r;
    }

    BigInt operator()(const MapSpec::Iterate& it) const { return fix_count(*it.base, n * it.k); }

    BigInt operator()(const MapSpec::Custom& c) const
    {
        BigInt sum = 0;
        for (auto d : divisors(n)) {
            if (d <= c.orbit_counts.size()) {
                sum += BigInt(static_cast<unsigned long>(d)) * c.orbit_counts[d - 1];
            }
        }
        return sum;
    }
};

} // namespace

double Entropy::value() const { return std::log(exp_h.get_d()); }

std::string Entropy::to_string() const
{
    if (exp_h == 1) {
        return "0";
    }
    return "log " + orbitkit::to_string(exp_h);
}

MapSpec MapSpec::circle_doubling() { return MapSpec(CircleDoubling{}); }

MapSpec MapSpec::three_adic_extension() { return MapSpec(ThreeAdicExtension{}); }

MapSpec MapSpec::iterate(const MapSpec& base, unsigned k)
{
    if (k == 0) {
        throw ValidationError("iterate: k must be at least 1");
    }
    return MapSpec(Iterate{std::make_shared<const MapSpec>(base), k});
}

MapSpec MapSpec::custom(std::vector<BigInt> orbit_counts)
{
    for (const auto& o : orbit_counts) {
        if (o < 0) {
            throw ValidationError("custom map: orbit counts must be nonnegative");
        }
    }
    return MapSpec(Custom{std::move(orbit_counts)});
}

Entropy MapSpec::entropy() const
{
    struct Visitor {
        Entropy operator()(const CircleDoubling&) const { return {2}; }
        Entropy operator()(const ThreeAdicExtension&) const { return {2}; }
        Entropy operator()(const Iterate& it) const
        {
            BigInt e;
            mpz_pow_ui(e.get_mpz_t(), it.base->entropy().exp_h.get_mpz_t(), it.k);
            return {e};
        }
        // finitely many orbits, so F_n is bounded
        Entropy operator()(const Custom&) const { return {1}; }
    };
    return std::visit(Visitor{}, variant_);
}

std::string MapSpec::name() const
{
    struct Visitor {
        std::string operator()(const CircleDoubling&) const { return "g"; }
        std::string operator()(const ThreeAdicExtension&) const { return "f"; }
        std::string operator()(const Iterate& it) const
        {
            auto base = it.base->name();
            if (std::holds_alternative<Iterate>(it.base->variant())) {
                base = "(" + base + ")";
            }
            return base + "^" + std::to_string(it.k);
        }
        std::string operator()(const Custom&) const { return "custom"; }
    };
    return std::visit(Visitor{}, variant_);
}

std::vector<BigInt> read_custom_orbits(std::istream& in)
{
    std::vector<BigInt> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        auto token = line.substr(first, last - first + 1);
        BigInt v;
        if (token.find_first_not_of("0123456789") != std::string::npos || v.set_str(token, 10) != 0) {
            throw ValidationError("custom orbit file line " + std::to_string(lineno) +
                                  ": expected a nonnegative integer, got '" + token + "'");
        }
        out.push_back(v);
    }
    return out;
}

PAdicAbs padic_factor(std::uint64_t n)
{
    require_positive(n, "padic_factor");
    if (n % 2 == 1) {
        return PAdicAbs(3, 0);
    }
    return PAdicAbs(3, 1 + ord_p(BigInt(static_cast<unsigned long>(n)), 3));
}

BigInt fix_count(const MapSpec& spec, std::uint64_t n)
{
    require_positive(n, "fix_count");
    return std::visit(FixCounter{n}, spec.variant());
}

OrbitTable::OrbitTable(MapSpec spec, std::vector<BigInt> fix, std::vector<BigInt> least,
                       std::vector<BigInt> orbits)
    : spec_(std::move(spec)), fix_(std::move(fix)), least_(std::move(least)), orbits_(std::move(orbits))
{
    if (fix_.size() != least_.size() || fix_.size() != orbits_.size()) {
        throw ValidationError("OrbitTable: F, L and O must have equal length");
    }
}

std::size_t OrbitTable::index(std::uint64_t n) const
{
    if (n == 0 || n > fix_.size()) {
        throw ValidationError("OrbitTable: index " + std::to_string(n) + " outside 1.." +
                              std::to_string(fix_.size()) + " for map " + spec_.name());
    }
    return n - 1;
}

void OrbitTable::extend_to(std::uint64_t n_max)
{
    fix_.reserve(n_max);
    least_.reserve(n_max);
    orbits_.reserve(n_max);
    for (std::uint64_t n = fix_.size() + 1; n <= n_max; ++n) {
        fix_.push_back(fix_count(spec_, n));
        BigInt l = 0;
        for (auto d : divisors(n)) {
            switch (mobius(n / d)) {
            case 1: l += fix_[d - 1]; break;
            case -1: l -= fix_[d - 1]; break;
            default: break;
            }
        }
        if (l < 0) {
            throw InternalError("build_table: negative L_" + std::to_string(n) + " for " + spec_.name());
        }
        BigInt nn(static_cast<unsigned long>(n));
        if (mpz_divisible_p(l.get_mpz_t(), nn.get_mpz_t()) == 0) {
            throw InternalError("build_table: " + std::to_string(n) + " does not divide L_" +
                                std::to_string(n) + " for " + spec_.name());
        }
        BigInt o;
        mpz_divexact(o.get_mpz_t(), l.get_mpz_t(), nn.get_mpz_t());
        least_.push_back(std::move(l));
        orbits_.push_back(std::move(o));
    }
}

void OrbitTable::check() const
{
    for (std::uint64_t n = 1; n <= n_max(); ++n) {
        const auto tag = std::to_string(n) + " for " + spec_.name();
        if (fix(n) < 0 || least(n) < 0 || orbits(n) < 0) {
            throw InternalError("OrbitTable: negative entry at n = " + tag);
        }
        if (least(n) != BigInt(static_cast<unsigned long>(n)) * orbits(n)) {
            throw InternalError("OrbitTable: L_n != n O_n at n = " + tag);
        }
        BigInt sum = 0;
        for (auto d : divisors(n)) {
            sum += least(d);
        }
        if (sum != fix(n)) {
            throw InternalError("OrbitTable: F_n != sum of L_d at n = " + tag);
        }
    }
}

OrbitTable build_table(const MapSpec& spec, std::uint64_t n_max)
{
    if (n_max == 0) {
        throw ValidationError("build_table: n_max must be positive");
    }
    OrbitTable t(spec, {}, {}, {});
    t.extend_to(n_max);
    return t;
}

BigInt orbit_count_iterate(const OrbitTable& base, unsigned k, std::uint64_t n)
{
    require_positive(n, "orbit_count_iterate");
    if (k == 0) {
        throw ValidationError("orbit_count_iterate: k must be at least 1");
    }
    if (n * k > base.n_max()) {
        throw ValidationError("orbit_count_iterate: table covers n <= " + std::to_string(base.n_max()) +
                              ", need " + std::to_string(n * k));
    }
    BigInt total = 0;
    for (auto d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0) {
            continue;
        }
        BigInt inner = 0;
        for (auto dd : divisors(d * k)) {
            inner += BigInt(static_cast<unsigned long>(dd)) * base.orbits(dd);
        }
        if (mu > 0) {
            total += inner;
        } else {
            total -= inner;
        }
    }
    BigInt nn(static_cast<unsigned long>(n));
    if (mpz_divisible_p(total.get_mpz_t(), nn.get_mpz_t()) == 0) {
        throw InternalError("orbit_count_iterate: inexact division by n = " + std::to_string(n));
    }
    BigInt r;
    mpz_divexact(r.get_mpz_t(), total.get_mpz_t(), nn.get_mpz_t());
    return r;
}

BigInt iterate_square_identity(const OrbitTable& base, std::uint64_t n)
{
    require_positive(n, "iterate_square_identity");
    if (2 * n > base.n_max()) {
        throw ValidationError("iterate_square_identity: table covers n <= " +
                              std::to_string(base.n_max()) + ", need " + std::to_string(2 * n));
    }
    BigInt r = 2 * base.orbits(2 * n);
    if (n % 2 == 1) {
        r += base.orbits(n);
    }
    return r;
}

} // namespace orbitkit
