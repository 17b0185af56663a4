#include "rdcert/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace rdcert::dirichlet {

using arith::FactoredInt;
using arith::PrimePower;
using arith::UnitGroupStructure;

RootOfUnity RootOfUnity::fraction(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::domain_error("RootOfUnity: denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    if (num == 0) return one();
    return RootOfUnity(num / g, den / g);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::int64_t den = std::lcm(den_, o.den_);
    return fraction(num_ * (den / den_) + o.num_ * (den / o.den_), den);
}

RootOfUnity RootOfUnity::conjugate() const {
    if (is_zero()) return zero();
    return fraction(-num_, den_);
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
    if (is_zero()) return zero();
    std::int64_t r = (num_ * (e % den_)) % den_;
    return fraction(r, den_);
}

std::complex<double> RootOfUnity::to_complex() const {
    if (is_zero()) return 0;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(angle), std::sin(angle)};
}

namespace {

// Conductor of the restriction of chi to one CRT component, from the order of
// that restriction. For odd p the component is cyclic of order p^{k-1}(p-1);
// a character of order d on it requires modulus p^{v_p(d)+1}. At p = 2 the
// component is <-1> x <5>; a character of order 2^t >= 2 on the 5-part needs
// modulus 2^{t+2}, the bare sign character needs 4.
FactoredInt local_conductor(const UnitGroupStructure& g, const std::vector<std::uint64_t>& exps,
                            std::size_t comp_first, int comp_count, std::uint64_t prime) {
    const auto& factors = g.cyclic_factors();
    if (prime != 2) {
        std::uint64_t o = factors[comp_first].order;
        std::uint64_t e = exps[comp_first];
        std::uint64_t d = o / std::gcd(o, e);
        if (d == 1) return FactoredInt{};
        std::uint32_t vp = 0;
        while (d % prime == 0) {
            d /= prime;
            ++vp;
        }
        return FactoredInt::from_factors({{prime, vp + 1}});
    }
    if (comp_count == 0) return FactoredInt{};
    if (comp_count == 1) {
        // modulus 4: single sign factor
        return exps[comp_first] % 2 == 0 ? FactoredInt{}
                                         : FactoredInt::from_factors({{2, 2}});
    }
    std::uint64_t sign_exp = exps[comp_first] % 2;
    std::uint64_t o5 = factors[comp_first + 1].order;
    std::uint64_t e5 = exps[comp_first + 1] % o5;
    if (e5 == 0) return sign_exp == 0 ? FactoredInt{} : FactoredInt::from_factors({{2, 2}});
    std::uint64_t d5 = o5 / std::gcd(o5, e5); // a power of two >= 2
    std::uint32_t t = 0;
    while (d5 > 1) {
        d5 >>= 1;
        ++t;
    }
    return FactoredInt::from_factors({{2, t + 2}});
}

FactoredInt conductor_of(const UnitGroupStructure& g, const std::vector<std::uint64_t>& exps) {
    FactoredInt cond;
    const auto& factors = g.cyclic_factors();
    std::size_t i = 0;
    while (i < factors.size()) {
        std::uint64_t p = factors[i].prime;
        std::size_t j = i;
        while (j < factors.size() && factors[j].prime == p) ++j;
        cond = cond * local_conductor(g, exps, i, static_cast<int>(j - i), p);
        i = j;
    }
    // a modulus 2 mod 4 contributes no cyclic factors and conductor 1
    return cond;
}

} // namespace

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& factors = group_->cyclic_factors();
    if (exponents_.size() != factors.size())
        throw std::domain_error("DirichletCharacter: exponent vector length mismatch");
    order_ = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        exponents_[i] %= factors[i].order;
        order_ = std::lcm(order_, factors[i].order / std::gcd(factors[i].order, exponents_[i]));
    }
    conductor_ = conductor_of(*group_, exponents_);
    std::uint64_t n = group_->modulus();
    even_ = n <= 2 || (*this)(static_cast<std::int64_t>(n) - 1).is_one();
}

RootOfUnity DirichletCharacter::operator()(std::int64_t a) const {
    std::int64_t n = static_cast<std::int64_t>(modulus());
    std::int64_t r = a % n;
    if (r < 0) r += n;
    if (!group_->is_unit(static_cast<std::uint64_t>(r))) return RootOfUnity::zero();
    auto xs = group_->exponent_vector(static_cast<std::uint64_t>(r));
    RootOfUnity v = RootOfUnity::one();
    const auto& factors = group_->cyclic_factors();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::int64_t o = static_cast<std::int64_t>(factors[i].order);
        std::int64_t e = static_cast<std::int64_t>((exponents_[i] % factors[i].order));
        std::int64_t x = static_cast<std::int64_t>(xs[i] % factors[i].order);
        v = v * RootOfUnity::fraction((e % o) * (x % o) % o, o);
    }
    return v;
}

RootOfUnity evaluate(const DirichletCharacter& chi, std::int64_t a) {
    return chi(a);
}

const FactoredInt& conductor(const DirichletCharacter& chi) {
    return chi.conductor();
}

std::vector<DirichletCharacter> enumerate_characters(std::uint64_t n, std::uint64_t cap) {
    if (n > cap) throw SizeError("enumerate_characters: modulus exceeds cap");
    auto group = std::make_shared<const UnitGroupStructure>(arith::unit_group(n, cap));
    const auto& factors = group->cyclic_factors();
    std::vector<DirichletCharacter> chars;
    chars.reserve(group->order());
    std::vector<std::uint64_t> exps(factors.size(), 0);
    while (true) {
        chars.emplace_back(group, exps);
        std::size_t i = 0;
        while (i < exps.size()) {
            if (++exps[i] < factors[i].order) break;
            exps[i] = 0;
            ++i;
        }
        if (i == exps.size()) break;
    }
    return chars;
}

std::uint64_t count_primitive_conductor_at_most(std::uint64_t M, std::uint64_t cap) {
    if (M == 0) return 0;
    if (M > cap) throw SizeError("count_primitive_conductor_at_most: bound exceeds cap");
    auto limit = static_cast<std::uint32_t>(M);
    auto mu = arith::moebius_sieve(limit);
    // phi sieve
    std::vector<std::uint64_t> phi(limit + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (phi[p] == p) { // p prime
            for (std::uint64_t j = p; j <= limit; j += p) phi[j] -= phi[j] / p;
        }
    }
    // primitive count mod f is sum_{d | f} mu(f/d) phi(d)
    std::uint64_t total = 0;
    for (std::uint32_t f = 1; f <= limit; ++f) {
        std::int64_t prim = 0;
        for (std::uint32_t d = 1; d * d <= f; ++d) {
            if (f % d != 0) continue;
            prim += static_cast<std::int64_t>(mu[f / d]) * static_cast<std::int64_t>(phi[d]);
            std::uint32_t d2 = f / d;
            if (d2 != d) prim += static_cast<std::int64_t>(mu[d]) * static_cast<std::int64_t>(phi[d2]);
        }
        total += static_cast<std::uint64_t>(prim);
    }
    return total;
}

DirichletCharacter primitivize(const DirichletCharacter& chi) {
    std::uint64_t f = static_cast<std::uint64_t>(chi.conductor().value());
    std::uint64_t n = chi.modulus();
    if (f == n) return chi;
    auto group = std::make_shared<const UnitGroupStructure>(arith::unit_group(f));
    const auto& factors = group->cyclic_factors();
    std::vector<std::uint64_t> exps(factors.size(), 0);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        // lift the generator to a residue coprime to n and read off the value
        std::uint64_t lift = factors[i].generator;
        while (std::gcd(lift, n) != 1) lift += f;
        RootOfUnity v = chi(static_cast<std::int64_t>(lift));
        if (v.is_zero()) throw std::logic_error("primitivize: lift is not a unit");
        std::uint64_t o = factors[i].order;
        if (o % static_cast<std::uint64_t>(v.denominator()) != 0)
            throw std::logic_error("primitivize: value order does not divide generator order");
        exps[i] = static_cast<std::uint64_t>(v.numerator()) * (o / static_cast<std::uint64_t>(v.denominator()));
    }
    DirichletCharacter prim(group, std::move(exps));
    if (prim.conductor().value() != f)
        throw std::logic_error("primitivize: conductor changed");
    return prim;
}

DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.modulus() != b.modulus())
        throw std::domain_error("multiply: characters must share a modulus");
    std::vector<std::uint64_t> exps(a.exponents().size());
    const auto& factors = a.group().cyclic_factors();
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = (a.exponents()[i] + b.exponents()[i]) % factors[i].order;
    return DirichletCharacter(a.group_ptr(), std::move(exps));
}

} // namespace rdcert::dirichlet
