#include "rdcert/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rdcert::arith {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for the full 64-bit range
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    std::uint64_t c = 1;
    while (true) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    for (std::uint64_t p = 2; p < 1'000'000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
        if (n == 1) return;
        if (is_prime(n)) {
            primes.push_back(n);
            return;
        }
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

} // namespace

FactoredInt FactoredInt::from_factors(std::vector<PrimePower> factors) {
    FactoredInt r;
    std::uint64_t last = 0;
    for (const auto& pp : factors) {
        if (pp.prime <= last) throw std::domain_error("factor primes must be strictly increasing");
        if (pp.exponent == 0) throw std::domain_error("factor exponents must be >= 1");
        if (!is_prime(pp.prime)) throw std::domain_error("factor base is not prime");
        last = pp.prime;
        BigInt q = pp.prime;
        for (std::uint32_t i = 0; i < pp.exponent; ++i) r.value_ *= q;
    }
    r.factors_ = std::move(factors);
    return r;
}

std::uint32_t FactoredInt::exponent_of(std::uint64_t p) const {
    for (const auto& pp : factors_)
        if (pp.prime == p) return pp.exponent;
    return 0;
}

FactoredInt FactoredInt::operator*(const FactoredInt& other) const {
    FactoredInt r;
    r.value_ = value_ * other.value_;
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->prime < a->prime) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.push_back({a->prime, a->exponent + b->exponent});
            ++a;
            ++b;
        }
    }
    return r;
}

FactoredInt FactoredInt::pow(std::uint64_t e) const {
    if (e == 0) return FactoredInt{};
    FactoredInt r;
    r.factors_ = factors_;
    for (auto& pp : r.factors_) pp.exponent = static_cast<std::uint32_t>(pp.exponent * e);
    r.value_ = 1;
    for (const auto& pp : r.factors_) {
        BigInt q = pp.prime;
        for (std::uint32_t i = 0; i < pp.exponent; ++i) r.value_ *= q;
    }
    return r;
}

bool FactoredInt::divisible_by(const FactoredInt& d) const {
    for (const auto& pp : d.factors_)
        if (exponent_of(pp.prime) < pp.exponent) return false;
    return true;
}

FactoredInt FactoredInt::over(const FactoredInt& d) const {
    if (!divisible_by(d)) throw std::domain_error("FactoredInt::over: not divisible");
    std::vector<PrimePower> out;
    for (const auto& pp : factors_) {
        std::uint32_t e = pp.exponent - d.exponent_of(pp.prime);
        if (e > 0) out.push_back({pp.prime, e});
    }
    return from_factors(std::move(out));
}

double FactoredInt::log_value() const {
    long double s = 0;
    for (const auto& pp : factors_) s += static_cast<long double>(pp.exponent) * std::log(static_cast<long double>(pp.prime));
    return static_cast<double>(s);
}

FactoredInt factor(std::uint64_t n, std::uint64_t cap) {
    if (n == 0) throw std::domain_error("factor: n must be positive");
    if (n > cap) throw SizeError("factor: input exceeds cap");
    std::vector<std::uint64_t> primes;
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> fs;
    for (std::uint64_t p : primes) {
        if (!fs.empty() && fs.back().prime == p)
            ++fs.back().exponent;
        else
            fs.push_back({p, 1});
    }
    return FactoredInt::from_factors(std::move(fs));
}

FactoredInt factor(const BigInt& n, std::uint64_t cap) {
    if (n <= 0) throw std::domain_error("factor: n must be positive");
    if (n > BigInt(cap)) throw SizeError("factor: input exceeds cap");
    return factor(static_cast<std::uint64_t>(n), cap);
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = 1;
    const auto fn = factor(n);
    for (const auto& pp : fn.factors()) {
        std::uint64_t q = pp.prime;
        std::uint64_t t = q - 1;
        for (std::uint32_t i = 1; i < pp.exponent; ++i) t *= q;
        phi *= t;
    }
    return phi;
}

std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i)
                if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

std::vector<std::int8_t> moebius_sieve(std::uint32_t limit) {
    auto spf = smallest_prime_factor_sieve(limit);
    std::vector<std::int8_t> mu(limit + 1, 0);
    if (limit >= 1) mu[1] = 1;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        std::uint32_t p = spf[i];
        std::uint32_t m = i / p;
        mu[i] = (m % p == 0) ? 0 : -mu[m];
    }
    return mu;
}

namespace {

// smallest primitive root of (Z/p^k)*, p odd
std::uint64_t smallest_primitive_root(std::uint64_t pk, std::uint64_t phi) {
    auto phi_factors = factor(phi).factors();
    for (std::uint64_t g = 2;; ++g) {
        if (std::gcd(g, pk) != 1) continue;
        bool ok = true;
        for (const auto& q : phi_factors) {
            if (pow_mod(g, phi / q.prime, pk) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
}

// x = r mod m, x = 1 mod (n/m); n = m * (n/m) with coprime parts
std::uint64_t crt_lift(std::uint64_t r, std::uint64_t m, std::uint64_t n) {
    std::uint64_t m2 = n / m;
    if (m2 == 1) return r % n;
    // inverse of m mod m2
    std::uint64_t inv = pow_mod(m % m2, euler_phi(m2) - 1, m2);
    // x = r + m * t with t = (1 - r) * inv mod m2
    std::uint64_t rr = r % m2;
    std::uint64_t diff = (1 + m2 - rr) % m2;
    std::uint64_t t = mul_mod(diff, inv, m2);
    return (r + static_cast<std::uint64_t>((static_cast<unsigned __int128>(m) * t) % n)) % n;
}

} // namespace

UnitGroupStructure unit_group(std::uint64_t n, std::uint64_t cap) {
    if (n == 0) throw std::domain_error("unit_group: modulus must be positive");
    if (n > cap) throw SizeError("unit_group: modulus exceeds cap");
    UnitGroupStructure g;
    g.modulus_ = n;
    g.order_ = 1;
    const auto fn = factor(n);
    for (const auto& pp : fn.factors()) {
        UnitGroupStructure::Component comp;
        comp.prime = pp.prime;
        comp.exponent = pp.exponent;
        comp.prime_power = 1;
        for (std::uint32_t i = 0; i < pp.exponent; ++i) comp.prime_power *= pp.prime;
        comp.first_factor = static_cast<int>(g.factors_.size());
        std::uint64_t pk = comp.prime_power;

        if (pp.prime == 2) {
            if (pp.exponent == 1) {
                comp.factor_count = 0;
            } else if (pp.exponent == 2) {
                comp.factor_count = 1;
                comp.dlog_a.assign(pk, 0);
                comp.dlog_a[3] = 1;
                g.factors_.push_back({crt_lift(3, pk, n), 2, 2, 2});
            } else {
                // (Z/2^k)* = <-1> x <5>
                comp.factor_count = 2;
                std::uint64_t half = pk >> 2; // order of 5
                comp.dlog_a.assign(pk, 0);
                comp.dlog_b.assign(pk, 0);
                std::uint64_t pow5 = 1;
                for (std::uint64_t t = 0; t < half; ++t) {
                    comp.dlog_a[pow5] = 0;
                    comp.dlog_b[pow5] = static_cast<std::uint32_t>(t);
                    comp.dlog_a[pk - pow5] = 1;
                    comp.dlog_b[pk - pow5] = static_cast<std::uint32_t>(t);
                    pow5 = mul_mod(pow5, 5, pk);
                }
                g.factors_.push_back({crt_lift(pk - 1, pk, n), 2, 2, pp.exponent});
                g.factors_.push_back({crt_lift(5, pk, n), half, 2, pp.exponent});
            }
        } else {
            comp.factor_count = 1;
            std::uint64_t phi = pk / pp.prime * (pp.prime - 1);
            std::uint64_t root = smallest_primitive_root(pk, phi);
            comp.dlog_a.assign(pk, 0);
            std::uint64_t pw = 1;
            for (std::uint64_t t = 0; t < phi; ++t) {
                comp.dlog_a[pw] = static_cast<std::uint32_t>(t);
                pw = mul_mod(pw, root, pk);
            }
            g.factors_.push_back({crt_lift(root, pk, n), phi, pp.prime, pp.exponent});
        }
        for (int i = 0; i < comp.factor_count; ++i)
            g.order_ *= g.factors_[comp.first_factor + i].order;
        g.components_.push_back(std::move(comp));
    }
    return g;
}

bool UnitGroupStructure::is_unit(std::uint64_t a) const {
    return std::gcd(a % modulus_, modulus_) == 1 || modulus_ == 1;
}

std::vector<std::uint64_t> UnitGroupStructure::exponent_vector(std::uint64_t a) const {
    a %= modulus_;
    if (!is_unit(a)) throw std::domain_error("exponent_vector: not a unit");
    std::vector<std::uint64_t> exps(factors_.size(), 0);
    for (const auto& comp : components_) {
        std::uint64_t r = a % comp.prime_power;
        if (comp.factor_count >= 1) exps[comp.first_factor] = comp.dlog_a[r];
        if (comp.factor_count == 2) exps[comp.first_factor + 1] = comp.dlog_b[r];
    }
    return exps;
}

std::uint64_t UnitGroupStructure::from_exponents(const std::vector<std::uint64_t>& exps) const {
    if (exps.size() != factors_.size()) throw std::domain_error("from_exponents: wrong length");
    std::uint64_t r = 1 % modulus_;
    for (std::size_t i = 0; i < exps.size(); ++i)
        r = mul_mod(r, pow_mod(factors_[i].generator, exps[i] % factors_[i].order, modulus_), modulus_);
    return r;
}

std::uint64_t UnitGroupStructure::unit_order(std::uint64_t a) const {
    auto exps = exponent_vector(a);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        std::uint64_t o = factors_[i].order / std::gcd(factors_[i].order, exps[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

std::vector<std::uint64_t> UnitGroupStructure::units() const {
    std::vector<std::uint64_t> us;
    us.reserve(order_);
    if (modulus_ == 1) {
        us.push_back(0);
        return us;
    }
    for (std::uint64_t a = 1; a < modulus_; ++a)
        if (std::gcd(a, modulus_) == 1) us.push_back(a);
    return us;
}

std::uint64_t multiplicative_order(std::uint64_t a, const UnitGroupStructure& group) {
    return group.unit_order(a);
}

} // namespace rdcert::arith
