#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "orbitkit/arith.hpp"

namespace orbitkit {

// Topological entropy carried exactly as e^h, so h = log(exp_h).
struct Entropy {
    BigInt exp_h;

    double value() const;
    std::string to_string() const;
    friend bool operator==(const Entropy&, const Entropy&) = default;
};

/// Which dynamical system a computation refers to.
///
/// CircleDoubling is g: x -> 2x mod 1 with F_n = 2^n - 1. ThreeAdicExtension is
/// f, the extension of g by a Z_3-valued cocycle, with
/// F_n = (2^n - 1) |2^n - 1|_3. Iterate(base, k) is base^k. Custom carries an
/// explicit list of orbit counts O_1, O_2, ..., zero-extended past its end.
class MapSpec {
public:
    struct CircleDoubling {};
    struct ThreeAdicExtension {};
    struct Iterate {
        std::shared_ptr<const MapSpec> base;
        unsigned k;
    };
    struct Custom {
        std::vector<BigInt> orbit_counts;
    };
    using Variant = std::variant<CircleDoubling, ThreeAdicExtension, Iterate, Custom>;

    static MapSpec circle_doubling();
    static MapSpec three_adic_extension();
    static MapSpec iterate(const MapSpec& base, unsigned k);
    static MapSpec custom(std::vector<BigInt> orbit_counts);

    const Variant& variant() const noexcept { return variant_; }
    Entropy entropy() const;
    // Short label: "g", "f", "g^2", "f^3", "custom".
    std::string name() const;

private:
    explicit MapSpec(Variant v) : variant_(std::move(v)) {}
    Variant variant_;
};

// One nonnegative integer per line, line n holding O_n. Blank lines and lines
// starting with '#' are skipped.
std::vector<BigInt> read_custom_orbits(std::istream& in);

// |2^n - 1|_3 in closed form: 1 for odd n, (1/3)|n|_3 for even n.
PAdicAbs padic_factor(std::uint64_t n);

// F_n for the given system.
BigInt fix_count(const MapSpec& spec, std::uint64_t n);

/// F_n, L_n and O_n for n = 1..n_max, stored as exact integers.
///
/// Invariants: F_n = sum_{d|n} L_d, L_n = n O_n, all entries nonnegative.
class OrbitTable {
public:
    // Takes externally supplied rows as-is; call check() to validate them.
    OrbitTable(MapSpec spec, std::vector<BigInt> fix, std::vector<BigInt> least,
               std::vector<BigInt> orbits);

    const MapSpec& spec() const noexcept { return spec_; }
    std::uint64_t n_max() const noexcept { return fix_.size(); }

    const BigInt& fix(std::uint64_t n) const { return fix_[index(n)]; }
    const BigInt& least(std::uint64_t n) const { return least_[index(n)]; }
    const BigInt& orbits(std::uint64_t n) const { return orbits_[index(n)]; }

    // Element i holds the value for n = i + 1.
    std::span<const BigInt> fix_counts() const noexcept { return fix_; }
    std::span<const BigInt> least_counts() const noexcept { return least_; }
    std::span<const BigInt> orbit_counts() const noexcept { return orbits_; }

    // Grows the table, reusing rows already computed.
    void extend_to(std::uint64_t n_max);

    // Throws InternalError naming the first n that breaks an invariant.
    void check() const;

private:
    std::size_t index(std::uint64_t n) const;

    MapSpec spec_;
    std::vector<BigInt> fix_;
    std::vector<BigInt> least_;
    std::vector<BigInt> orbits_;
};

OrbitTable build_table(const MapSpec& spec, std::uint64_t n_max);

// O_n(T^k) from the orbit counts of T via the Mobius double sum
// (1/n) sum_{d|n} mu(n/d) sum_{d'|dk} d' O_{d'}(T). Needs base.n_max() >= n k.
BigInt orbit_count_iterate(const OrbitTable& base, unsigned k, std::uint64_t n);

// O_n(T^2) as 2 O_{2n}(T) + O_n(T) for odd n and 2 O_{2n}(T) for even n.
BigInt iterate_square_identity(const OrbitTable& base, std::uint64_t n);

} // namespace orbitkit
