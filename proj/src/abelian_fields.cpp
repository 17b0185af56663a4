#include "rdcert/abelian_fields.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "rdcert/cyclotomic.hpp"

namespace rdcert::fields {

using arith::FactoredInt;
using arith::UnitGroupStructure;
using dirichlet::DirichletCharacter;
using dirichlet::RootOfUnity;

namespace {

// closure of a set of units under multiplication mod n, sorted
std::vector<std::uint64_t> unit_closure(const UnitGroupStructure& g,
                                        const std::vector<std::uint64_t>& gens) {
    std::uint64_t n = g.modulus();
    std::set<std::uint64_t> elems{1 % n};
    std::vector<std::uint64_t> frontier{1 % n};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t x : frontier) {
            for (std::uint64_t h : gens) {
                std::uint64_t y = arith::mul_mod(x, h % n, n);
                if (elems.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

} // namespace

class FieldBuilder {
public:
    static AbelianField build(std::shared_ptr<const UnitGroupStructure> group,
                              const std::vector<DirichletCharacter>& all_chars,
                              const std::vector<std::uint64_t>& subgroup_gens,
                              std::uint64_t cap);
};

AbelianField FieldBuilder::build(std::shared_ptr<const UnitGroupStructure> group,
                                 const std::vector<DirichletCharacter>& all_chars,
                                 const std::vector<std::uint64_t>& subgroup_gens,
                                 std::uint64_t cap) {
    std::uint64_t n = group->modulus();
    for (std::uint64_t h : subgroup_gens) {
        if (!group->is_unit(h)) throw std::domain_error("field_from_subgroup: generator is not a unit");
    }
    auto H = unit_closure(*group, subgroup_gens);

    std::vector<DirichletCharacter> X;
    for (const auto& chi : all_chars) {
        bool trivial_on_H = true;
        for (std::uint64_t h : subgroup_gens) {
            if (!chi(static_cast<std::int64_t>(h)).is_one()) {
                trivial_on_H = false;
                break;
            }
        }
        if (trivial_on_H) X.push_back(dirichlet::primitivize(chi));
    }
    if (X.size() * H.size() != group->order())
        throw std::logic_error("field_from_subgroup: character count mismatch");

    std::uint64_t n0 = 1;
    for (const auto& chi : X) n0 = std::lcm(n0, static_cast<std::uint64_t>(chi.conductor().value()));

    AbelianField f;
    f.degree_ = X.size();
    if (n0 == n) {
        f.conductor_ = n;
        f.group_ = std::move(group);
        f.subgroup_ = std::move(H);
    } else {
        // imprimitive presentation: drop to the canonical conductor
        auto group0 = std::make_shared<const UnitGroupStructure>(arith::unit_group(n0, cap));
        std::vector<std::uint64_t> H0;
        for (std::uint64_t a : group0->units()) {
            bool in_kernel = true;
            for (const auto& chi : X) {
                if (!chi(static_cast<std::int64_t>(a)).is_one()) {
                    in_kernel = false;
                    break;
                }
            }
            if (in_kernel) H0.push_back(a);
        }
        if (X.size() * H0.size() != group0->order())
            throw std::logic_error("field_from_subgroup: canonicalization lost characters");
        f.conductor_ = n0;
        f.group_ = std::move(group0);
        f.subgroup_ = std::move(H0);
    }

    f.characters_ = std::move(X);
    for (const auto& chi : f.characters_) f.disc_ = f.disc_ * chi.conductor();
    std::uint64_t minus_one = (f.conductor_ + f.conductor_ - 1) % f.conductor_; // n-1, or 0 for n=1
    bool totally_real = std::binary_search(f.subgroup_.begin(), f.subgroup_.end(), minus_one);
    if (totally_real) {
        f.r1_ = f.degree_;
        f.r2_ = 0;
    } else {
        if (f.degree_ % 2 != 0) throw std::logic_error("field_from_subgroup: odd totally complex degree");
        f.r1_ = 0;
        f.r2_ = f.degree_ / 2;
    }
    f.rd_ = std::exp(f.disc_.log_value() / static_cast<double>(f.degree_));
    return f;
}

AbelianField field_from_subgroup(std::uint64_t n, const std::vector<std::uint64_t>& generators,
                                 std::uint64_t cap) {
    auto chars = dirichlet::enumerate_characters(n, cap);
    auto group = chars.front().group_ptr();
    return FieldBuilder::build(group, chars, generators, cap);
}

AbelianField field_from_subgroup_set(std::uint64_t n, std::vector<std::uint64_t> elements,
                                     std::uint64_t cap) {
    return field_from_subgroup(n, elements, cap);
}

AbelianField cyclotomic_field(std::uint64_t n, std::uint64_t cap) {
    if (n == 0) throw std::domain_error("cyclotomic_field: n must be positive");
    if (n % 4 == 2)
        throw std::domain_error("cyclotomic_field: n = 2 mod 4 is not a canonical conductor; use n/2");
    return field_from_subgroup(n, {}, cap);
}

bool is_fundamental_discriminant(std::int64_t D) {
    if (D == 1) return true;
    if (D == 0) return false;
    auto squarefree = [](std::uint64_t m) {
        const auto fm = arith::factor(m);
        for (const auto& pp : fm.factors())
            if (pp.exponent > 1) return false;
        return true;
    };
    std::int64_t r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(static_cast<std::uint64_t>(D < 0 ? -D : D));
    if (r != 0) return false;
    std::int64_t m = D / 4;
    std::int64_t rm = ((m % 4) + 4) % 4;
    if (rm != 2 && rm != 3) return false;
    return squarefree(static_cast<std::uint64_t>(m < 0 ? -m : m));
}

AbelianField quadratic_field(std::int64_t D, std::uint64_t cap) {
    if (D == 1 || !is_fundamental_discriminant(D))
        throw std::domain_error("quadratic_field: D must be a fundamental discriminant != 1");
    std::uint64_t absD = static_cast<std::uint64_t>(D < 0 ? -D : D);
    bool want_even = D > 0;
    auto chars = dirichlet::enumerate_characters(absD, cap);
    const DirichletCharacter* quadratic = nullptr;
    for (const auto& chi : chars) {
        if (chi.order() == 2 && chi.is_primitive() && chi.is_even() == want_even) {
            if (quadratic) throw std::logic_error("quadratic_field: quadratic character not unique");
            quadratic = &chi;
        }
    }
    if (!quadratic) throw std::logic_error("quadratic_field: quadratic character not found");
    std::vector<std::uint64_t> kernel;
    for (std::uint64_t a : quadratic->group().units())
        if ((*quadratic)(static_cast<std::int64_t>(a)).is_one()) kernel.push_back(a);
    return field_from_subgroup_set(absD, std::move(kernel), cap);
}

const FactoredInt& discriminant(const AbelianField& field) {
    return field.discriminant_abs();
}

double root_discriminant(const AbelianField& field) {
    return field.root_discriminant();
}

namespace {

// fill composite coefficients multiplicatively from the prime-power entries
void multiplicative_fill(std::vector<BigInt>& a, std::uint64_t N) {
    if (N >= 1) a[1] = 1;
    auto spf = arith::smallest_prime_factor_sieve(static_cast<std::uint32_t>(N));
    for (std::uint64_t m = 2; m <= N; ++m) {
        std::uint64_t p = spf[m];
        std::uint64_t pk = 1, rest = m;
        while (rest % p == 0) {
            pk *= p;
            rest /= p;
        }
        if (rest != 1) a[m] = a[pk] * a[rest];
    }
}

BigInt binomial(std::uint64_t top, std::uint64_t k) {
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= BigInt(top - k + i);
        r /= BigInt(i);
    }
    return r;
}

} // namespace

ZetaCoefficients zeta_coefficients_euler(const AbelianField& field, std::uint64_t N,
                                         std::uint64_t cap) {
    if (N > cap) throw SizeError("zeta_coefficients_euler: N exceeds cap");
    ZetaCoefficients z{field, N, std::vector<BigInt>(N + 1, BigInt(0))};
    if (N == 0) return z;
    auto spf = arith::smallest_prime_factor_sieve(static_cast<std::uint32_t>(N));
    for (std::uint64_t p = 2; p <= N; ++p) {
        if (spf[p] != p) continue;
        // exact local factor prod_chi (1 - chi(p) X) over Z[zeta]
        std::vector<RootOfUnity> values;
        for (const auto& chi : field.characters()) {
            RootOfUnity v = chi(static_cast<std::int64_t>(p));
            if (!v.is_zero()) values.push_back(v);
        }
        std::uint32_t D = 1;
        for (const auto& v : values) D = static_cast<std::uint32_t>(std::lcm<std::uint64_t>(D, v.denominator()));
        std::vector<cyclo::Cyclotomic> poly{cyclo::Cyclotomic::integer(D, 1)};
        for (const auto& v : values) {
            std::uint64_t k = static_cast<std::uint64_t>(v.numerator()) * (D / static_cast<std::uint64_t>(v.denominator()));
            auto zeta = cyclo::Cyclotomic::root_power(D, k);
            poly.push_back(cyclo::Cyclotomic(D));
            for (std::size_t j = poly.size() - 1; j >= 1; --j) poly[j] -= zeta * poly[j - 1];
        }
        std::vector<long long> b(poly.size());
        for (std::size_t j = 0; j < poly.size(); ++j) b[j] = poly[j].to_integer();
        // invert as a power series at p
        std::vector<BigInt> c{BigInt(1)};
        for (std::uint64_t pk = p; pk <= N; pk *= p) {
            std::size_t k = c.size();
            BigInt s = 0;
            for (std::size_t j = 1; j < b.size() && j <= k; ++j) s += BigInt(b[j]) * c[k - j];
            c.push_back(-s);
            z.a[pk] = c.back();
            if (pk > N / p) break;
        }
    }
    multiplicative_fill(z.a, N);
    return z;
}

ZetaCoefficients zeta_coefficients_splitting(const AbelianField& field, std::uint64_t N,
                                             std::uint64_t cap) {
    if (N > cap) throw SizeError("zeta_coefficients_splitting: N exceeds cap");
    ZetaCoefficients z{field, N, std::vector<BigInt>(N + 1, BigInt(0))};
    if (N == 0) return z;
    std::uint64_t n0 = field.conductor();
    const auto& H = field.subgroup();
    auto spf = arith::smallest_prime_factor_sieve(static_cast<std::uint32_t>(N));
    for (std::uint64_t p = 2; p <= N; ++p) {
        if (spf[p] != p) continue;
        std::uint64_t m = n0;
        while (m % p == 0) m /= p;
        // image of H in (Z/m)*
        std::vector<std::uint64_t> Hm;
        for (std::uint64_t h : H) Hm.push_back(h % m);
        std::sort(Hm.begin(), Hm.end());
        Hm.erase(std::unique(Hm.begin(), Hm.end()), Hm.end());
        std::uint64_t phi_m = arith::euler_phi(m);
        if (phi_m % Hm.size() != 0) throw std::logic_error("splitting: image subgroup size");
        std::uint64_t dp = phi_m / Hm.size(); // unramified character count
        // residue degree: order of p in (Z/m)* / image(H)
        std::uint64_t e = 1;
        std::uint64_t pe = p % m;
        while (!std::binary_search(Hm.begin(), Hm.end(), pe)) {
            pe = arith::mul_mod(pe, p % m, m);
            ++e;
        }
        if (dp % e != 0) throw std::logic_error("splitting: residue degree does not divide");
        std::uint64_t g = dp / e;
        for (std::uint64_t pk = p, k = 1; pk <= N; pk *= p, ++k) {
            z.a[pk] = (k % e == 0) ? binomial(g - 1 + k / e, g - 1) : BigInt(0);
            if (pk > N / p) break;
        }
    }
    multiplicative_fill(z.a, N);
    return z;
}

BigInt count_ideals(const AbelianField& field, double Y, std::uint64_t cap) {
    if (Y < 1.0) throw std::domain_error("count_ideals: Y must be >= 1");
    std::uint64_t last = static_cast<std::uint64_t>(std::ceil(Y)) - 1; // norms < Y
    if (last > cap) throw SizeError("count_ideals: Y exceeds coefficient cap");
    auto z = zeta_coefficients_splitting(field, last, cap);
    BigInt total = 0;
    for (std::uint64_t m = 1; m <= last; ++m) total += z.a[m];
    double bound = std::exp(1.0) * Y * std::pow(1.0 + std::log(Y), static_cast<double>(field.degree()));
    if (BigRat(total) > BigRat(bound))
        throw std::logic_error("count_ideals: ideal-count bound violated");
    return total;
}

std::uint64_t class_number_imag_quadratic(std::int64_t D) {
    if (D >= 0) throw std::domain_error("class_number_imag_quadratic: D must be negative");
    if (!is_fundamental_discriminant(D))
        throw std::domain_error("class_number_imag_quadratic: D is not fundamental");
    std::int64_t absD = -D;
    std::uint64_t count = 0;
    for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            ++count;
        }
    }
    return count;
}

std::vector<UnitSubgroup> enumerate_unit_subgroups(const UnitGroupStructure& group) {
    std::uint64_t n = group.modulus();
    auto units = group.units();
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<UnitSubgroup> out;
    std::vector<UnitSubgroup> queue;
    UnitSubgroup trivial{{1 % n}, {}};
    seen.insert(trivial.elements);
    queue.push_back(trivial);
    out.push_back(trivial);
    while (!queue.empty()) {
        UnitSubgroup H = std::move(queue.back());
        queue.pop_back();
        for (std::uint64_t u : units) {
            if (std::binary_search(H.elements.begin(), H.elements.end(), u)) continue;
            // <H, u> = union of u^j H, j up to the order of u in the quotient
            std::set<std::uint64_t> elems(H.elements.begin(), H.elements.end());
            std::uint64_t t = u;
            while (!std::binary_search(H.elements.begin(), H.elements.end(), t)) {
                for (std::uint64_t h : H.elements) elems.insert(n == 1 ? 0 : arith::mul_mod(t, h, n));
                t = n == 1 ? 0 : arith::mul_mod(t, u, n);
            }
            std::vector<std::uint64_t> ext(elems.begin(), elems.end());
            if (seen.insert(ext).second) {
                UnitSubgroup next{std::move(ext), H.generators};
                next.generators.push_back(u);
                out.push_back(next);
                queue.push_back(std::move(next));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const UnitSubgroup& x, const UnitSubgroup& y) {
        if (x.elements.size() != y.elements.size()) return x.elements.size() < y.elements.size();
        return x.elements < y.elements;
    });
    return out;
}

std::vector<AbelianField> enumerate_abelian_fields(std::uint64_t max_conductor, std::uint64_t cap) {
    if (max_conductor > cap) throw SizeError("enumerate_abelian_fields: conductor exceeds cap");
    std::vector<AbelianField> fields;
    for (std::uint64_t n = 1; n <= max_conductor; ++n) {
        if (n % 4 == 2) continue;
        auto chars = dirichlet::enumerate_characters(n, std::max(cap, arith::kDefaultModulusCap));
        auto group = chars.front().group_ptr();
        for (const auto& sub : enumerate_unit_subgroups(*group)) {
            AbelianField f = FieldBuilder::build(group, chars, sub.generators, cap);
            if (f.conductor() == n) fields.push_back(std::move(f));
        }
    }
    std::sort(fields.begin(), fields.end(), [](const AbelianField& x, const AbelianField& y) {
        if (x.conductor() != y.conductor()) return x.conductor() < y.conductor();
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.subgroup() < y.subgroup();
    });
    return fields;
}

} // namespace rdcert::fields
