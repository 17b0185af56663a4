#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rdcert/errors.hpp"

namespace rdcert::cyclo {

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
/// Results are memoized; safe to call concurrently.
const std::vector<long long>& cyclotomic_polynomial(std::uint32_t m);

/// An element of Z[zeta_m], stored on the power basis 1, zeta, ..., zeta^{phi(m)-1}
/// (canonically reduced mod the m-th cyclotomic polynomial). Arithmetic is exact;
/// coefficients are plain 64-bit, which is ample at desk scale.
class Cyclotomic {
public:
    explicit Cyclotomic(std::uint32_t order = 1);

    static Cyclotomic integer(std::uint32_t order, long long v);
    /// zeta_m^k
    static Cyclotomic root_power(std::uint32_t order, std::uint64_t k);
    /// sum_k power[k] * zeta_m^k
    static Cyclotomic from_power_basis(std::uint32_t order, std::vector<long long> power);

    std::uint32_t order() const { return order_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_integer() const;
    /// The value as a rational integer; throws std::domain_error when not one.
    long long to_integer() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(long long s) const;
    Cyclotomic operator-() const;

    /// Complex conjugation (zeta -> zeta^{-1}).
    Cyclotomic conjugate() const;

    /// The same value viewed in Z[zeta_M]; requires order() | M.
    Cyclotomic to_order(std::uint32_t M) const;

    bool divisible_by(long long q) const;
    /// Exact division by a rational integer; throws std::domain_error otherwise.
    Cyclotomic divided_by(long long q) const;

    std::complex<double> to_complex() const;

    bool operator==(const Cyclotomic&) const = default;

private:
    // reduce a power-basis vector of length order_ in place and store it
    void reduce_from_power_basis(std::vector<long long> power);

    std::uint32_t order_;
    std::vector<long long> coeffs_; // length phi(order_)
};

} // namespace rdcert::cyclo
