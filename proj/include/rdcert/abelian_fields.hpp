#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rdcert/arith.hpp"
#include "rdcert/dirichlet.hpp"

namespace rdcert::fields {

/// Largest canonical conductor accepted by enumerate_abelian_fields by default.
inline constexpr std::uint64_t kDefaultConductorCap = 10'000;

/// Largest Dirichlet-series length accepted by the zeta-coefficient routines.
inline constexpr std::uint64_t kDefaultCoeffCap = 1'000'000;

/// An abelian extension of Q, represented by its canonical conductor n and the
/// subgroup H of (Z/nZ)* it is cut out by (Kronecker-Weber). The character
/// group is stored primitivized; the discriminant is the exact product of the
/// character conductors. Values are immutable after construction.
class AbelianField {
public:
    std::uint64_t conductor() const { return conductor_; }
    /// Sorted residues mod conductor forming H (the identity is 1 % n).
    const std::vector<std::uint64_t>& subgroup() const { return subgroup_; }
    std::uint64_t degree() const { return degree_; }
    std::uint64_t r1() const { return r1_; }
    std::uint64_t r2() const { return r2_; }
    bool is_totally_real() const { return r2_ == 0; }
    /// Characters trivial on H, primitivized, trivial character first.
    const std::vector<dirichlet::DirichletCharacter>& characters() const { return characters_; }
    const arith::FactoredInt& discriminant_abs() const { return disc_; }
    double root_discriminant() const { return rd_; }
    const arith::UnitGroupStructure& unit_group() const { return *group_; }

    bool operator==(const AbelianField& o) const {
        return conductor_ == o.conductor_ && subgroup_ == o.subgroup_;
    }

private:
    friend class FieldBuilder;
    std::uint64_t conductor_ = 1;
    std::vector<std::uint64_t> subgroup_;
    std::shared_ptr<const arith::UnitGroupStructure> group_;
    std::vector<dirichlet::DirichletCharacter> characters_;
    std::uint64_t degree_ = 1;
    std::uint64_t r1_ = 1, r2_ = 0;
    arith::FactoredInt disc_;
    double rd_ = 1.0;
};

/// The field cut out by the subgroup of (Z/nZ)* generated by `generators`.
/// The conductor is canonicalized down to the lcm of the character conductors.
AbelianField field_from_subgroup(std::uint64_t n, const std::vector<std::uint64_t>& generators,
                                 std::uint64_t cap = arith::kDefaultModulusCap);

/// Same, from an explicit set of subgroup elements (closed under the group law
/// or not; the closure is taken).
AbelianField field_from_subgroup_set(std::uint64_t n, std::vector<std::uint64_t> elements,
                                     std::uint64_t cap = arith::kDefaultModulusCap);

/// Q(zeta_n). Conductors n = 2 mod 4 are rejected (same field as n/2).
AbelianField cyclotomic_field(std::uint64_t n, std::uint64_t cap = arith::kDefaultModulusCap);

/// The quadratic field of fundamental discriminant D (either sign).
AbelianField quadratic_field(std::int64_t D, std::uint64_t cap = arith::kDefaultModulusCap);

const arith::FactoredInt& discriminant(const AbelianField& field);
double root_discriminant(const AbelianField& field);

/// Dedekind zeta Dirichlet-series coefficients: a[m] = number of integral
/// ideals of norm m, 1 <= m <= N (a[0] unused).
struct ZetaCoefficients {
    AbelianField field;
    std::uint64_t N = 0;
    std::vector<BigInt> a;
};

/// Coefficients from the product of the character Euler factors, expanded with
/// exact cyclotomic arithmetic.
ZetaCoefficients zeta_coefficients_euler(const AbelianField& field, std::uint64_t N,
                                         std::uint64_t cap = kDefaultCoeffCap);

/// Independent route: splitting data read off the quotient group (Z/nZ)*/H,
/// ramified primes through the subgroup image prime to p.
ZetaCoefficients zeta_coefficients_splitting(const AbelianField& field, std::uint64_t N,
                                             std::uint64_t cap = kDefaultCoeffCap);

/// Number of integral ideals of norm < Y. Checked against the
/// e*Y*(1+log Y)^degree bound before returning.
BigInt count_ideals(const AbelianField& field, double Y, std::uint64_t cap = kDefaultCoeffCap);

bool is_fundamental_discriminant(std::int64_t D);

/// Class number of Q(sqrt(D)) for fundamental D < 0, by counting reduced
/// binary quadratic forms of discriminant D.
std::uint64_t class_number_imag_quadratic(std::int64_t D);

/// A subgroup of (Z/nZ)* as a sorted element list plus a generating set.
struct UnitSubgroup {
    std::vector<std::uint64_t> elements;
    std::vector<std::uint64_t> generators;
};

/// Every subgroup of (Z/nZ)*, deterministically ordered by (order, elements).
std::vector<UnitSubgroup> enumerate_unit_subgroups(const arith::UnitGroupStructure& group);

/// One field per (canonical conductor n <= max_conductor, subgroup of (Z/nZ)*),
/// deduplicated across imprimitive presentations; ordered by (conductor,
/// degree, subgroup).
std::vector<AbelianField> enumerate_abelian_fields(std::uint64_t max_conductor,
                                                   std::uint64_t cap = kDefaultConductorCap);

} // namespace rdcert::fields
