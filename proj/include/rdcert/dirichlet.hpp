#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "rdcert/arith.hpp"

namespace rdcert::dirichlet {

/// exp(2*pi*i * num/den) in lowest terms with 0 <= num < den, plus a
/// distinguished zero value (den == 0) for characters at non-units.
class RootOfUnity {
public:
    static RootOfUnity zero() { return RootOfUnity(0, 0); }
    static RootOfUnity one() { return RootOfUnity(0, 1); }
    /// Reduces num/den mod 1 to lowest terms; den must be positive.
    static RootOfUnity fraction(std::int64_t num, std::int64_t den);

    bool is_zero() const { return den_ == 0; }
    bool is_one() const { return den_ == 1; }
    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity conjugate() const;
    RootOfUnity pow(std::int64_t e) const;

    std::complex<double> to_complex() const;

    bool operator==(const RootOfUnity&) const = default;

private:
    RootOfUnity(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
    std::int64_t num_;
    std::int64_t den_;
};

/// A Dirichlet character mod n, stored as an exponent vector against the
/// canonical cyclic decomposition of (Z/nZ)*. Order, conductor and parity are
/// computed on construction; values are exact roots of unity, never floats.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const arith::UnitGroupStructure> group,
                       std::vector<std::uint64_t> exponents);

    std::uint64_t modulus() const { return group_->modulus(); }
    const arith::UnitGroupStructure& group() const { return *group_; }
    std::shared_ptr<const arith::UnitGroupStructure> group_ptr() const { return group_; }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }

    std::uint64_t order() const { return order_; }
    const arith::FactoredInt& conductor() const { return conductor_; }
    bool is_even() const { return even_; }
    bool is_trivial() const { return order_ == 1; }
    bool is_primitive() const { return conductor_.value() == modulus(); }

    /// chi(a); zero when gcd(a, n) > 1. Negative arguments reduce mod n.
    RootOfUnity operator()(std::int64_t a) const;

    bool operator==(const DirichletCharacter& o) const {
        return modulus() == o.modulus() && exponents_ == o.exponents_;
    }

private:
    std::shared_ptr<const arith::UnitGroupStructure> group_;
    std::vector<std::uint64_t> exponents_;
    std::uint64_t order_;
    arith::FactoredInt conductor_;
    bool even_;
};

RootOfUnity evaluate(const DirichletCharacter& chi, std::int64_t a);

const arith::FactoredInt& conductor(const DirichletCharacter& chi);

/// All phi(n) characters mod n, trivial character first, in mixed-radix
/// exponent order against the canonical unit-group decomposition.
std::vector<DirichletCharacter> enumerate_characters(
    std::uint64_t n, std::uint64_t cap = arith::kDefaultModulusCap);

/// Number of primitive characters of conductor f, summed over f <= M.
/// Always <= M^2.
std::uint64_t count_primitive_conductor_at_most(std::uint64_t M,
                                                std::uint64_t cap = arith::kDefaultModulusCap);

/// The primitive character of modulus conductor(chi) inducing chi.
DirichletCharacter primitivize(const DirichletCharacter& chi);

/// Pointwise product of two characters of the same modulus.
DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b);

} // namespace rdcert::dirichlet
