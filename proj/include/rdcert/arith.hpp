#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rdcert/errors.hpp"

namespace rdcert {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

namespace arith {

/// Largest n accepted by factor() by default.
inline constexpr std::uint64_t kDefaultFactorCap = std::uint64_t(1) << 63;

/// Largest modulus accepted by unit_group() and character enumeration by default.
inline constexpr std::uint64_t kDefaultModulusCap = 1'000'000;

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

/// A positive integer carried together with its complete prime factorization.
/// Primes are strictly increasing and certified prime; the empty factor list is 1.
class FactoredInt {
public:
    FactoredInt() : value_(1) {}

    /// Builds from an explicit factor list; validates primality, ordering, exponents.
    static FactoredInt from_factors(std::vector<PrimePower> factors);

    const BigInt& value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    std::uint32_t exponent_of(std::uint64_t p) const;

    FactoredInt operator*(const FactoredInt& other) const;
    FactoredInt pow(std::uint64_t e) const;

    /// Exact quotient; throws std::domain_error when `d` does not divide this value.
    FactoredInt over(const FactoredInt& d) const;

    bool divisible_by(const FactoredInt& d) const;

    /// Natural log, accumulated from the factorization (safe far beyond double range).
    double log_value() const;

    bool operator==(const FactoredInt&) const = default;

private:
    BigInt value_;
    std::vector<PrimePower> factors_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Trial division below 10^6, Pollard rho above. n = 0 is a domain error,
/// n > cap a SizeError. The factoring domain is 64-bit by design.
FactoredInt factor(std::uint64_t n, std::uint64_t cap = kDefaultFactorCap);
FactoredInt factor(const BigInt& n, std::uint64_t cap = kDefaultFactorCap);

std::uint64_t euler_phi(std::uint64_t n);

/// Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t limit);

/// Moebius function for 0..limit.
std::vector<std::int8_t> moebius_sieve(std::uint32_t limit);

/// One cyclic factor of (Z/nZ)*, tagged with the CRT component it comes from.
struct CyclicFactor {
    std::uint64_t generator = 1; // residue mod the ambient modulus
    std::uint64_t order = 1;
    std::uint64_t prime = 0;
    std::uint32_t prime_exponent = 0;
    bool operator==(const CyclicFactor&) const = default;
};

/// (Z/nZ)* as an explicit product of cyclic groups, with discrete-log tables
/// so every unit has a unique exponent vector. Factors are ordered by the prime
/// of their CRT component; for 2^k (k >= 3) the {-1, 5} pair in that order.
/// Immutable after construction.
class UnitGroupStructure {
public:
    std::uint64_t modulus() const { return modulus_; }
    const std::vector<CyclicFactor>& cyclic_factors() const { return factors_; }

    /// Euler phi of the modulus (the product of the cyclic orders).
    std::uint64_t order() const { return order_; }

    bool is_unit(std::uint64_t a) const;

    /// Exponents of `a` against the cyclic generators; throws std::domain_error
    /// when gcd(a, n) > 1.
    std::vector<std::uint64_t> exponent_vector(std::uint64_t a) const;

    /// Inverse of exponent_vector.
    std::uint64_t from_exponents(const std::vector<std::uint64_t>& exps) const;

    /// Multiplicative order of the unit `a`.
    std::uint64_t unit_order(std::uint64_t a) const;

    /// All units in [0, n), ascending.
    std::vector<std::uint64_t> units() const;

private:
    friend UnitGroupStructure unit_group(std::uint64_t, std::uint64_t);

    struct Component {
        std::uint64_t prime = 0;
        std::uint32_t exponent = 0;
        std::uint64_t prime_power = 1;
        int factor_count = 0;      // cyclic factors contributed (0, 1 or 2)
        int first_factor = 0;      // index into factors_
        std::vector<std::uint32_t> dlog_a; // residue mod prime_power -> exponent
        std::vector<std::uint32_t> dlog_b; // second exponent for 2^k, k >= 3
    };

    std::uint64_t modulus_ = 1;
    std::uint64_t order_ = 1;
    std::vector<CyclicFactor> factors_;
    std::vector<Component> components_;
};

UnitGroupStructure unit_group(std::uint64_t n, std::uint64_t cap = kDefaultModulusCap);

/// Smallest e >= 1 with a^e = 1 mod n; throws std::domain_error for non-units.
std::uint64_t multiplicative_order(std::uint64_t a, const UnitGroupStructure& group);

} // namespace arith
} // namespace rdcert
