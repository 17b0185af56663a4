#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "rdcert/cyclotomic.hpp"
#include "rdcert/dirichlet.hpp"

using namespace rdcert;
using namespace rdcert::dirichlet;

namespace {

// oracle: smallest divisor d of n with chi trivial on the kernel of
// (Z/n)* -> (Z/d)*, by direct scan
std::uint64_t brute_force_conductor(const DirichletCharacter& chi) {
    std::uint64_t n = chi.modulus();
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool trivial_on_kernel = true;
        for (std::uint64_t a = 1; a <= n; ++a) {
            if (std::gcd(a, n) != 1 || a % d != 1 % d) continue;
            if (!chi(static_cast<std::int64_t>(a)).is_one()) {
                trivial_on_kernel = false;
                break;
            }
        }
        if (trivial_on_kernel) return d;
    }
    return n;
}

// oracle for the primitive-character count: enumerate and filter
std::uint64_t brute_force_primitive_count(std::uint64_t M) {
    std::uint64_t total = 0;
    for (std::uint64_t f = 1; f <= M; ++f)
        for (const auto& chi : enumerate_characters(f))
            if (chi.is_primitive()) ++total;
    return total;
}

// exact zero test for a sum of roots of unity
bool sums_to_zero(const std::vector<RootOfUnity>& roots) {
    std::uint64_t D = 1;
    for (const auto& r : roots)
        if (!r.is_zero()) D = std::lcm<std::uint64_t>(D, r.denominator());
    cyclo::Cyclotomic s(static_cast<std::uint32_t>(D));
    for (const auto& r : roots) {
        if (r.is_zero()) continue;
        s += cyclo::Cyclotomic::root_power(
            static_cast<std::uint32_t>(D),
            static_cast<std::uint64_t>(r.numerator()) * (D / static_cast<std::uint64_t>(r.denominator())));
    }
    return s.is_zero();
}

} // namespace

TEST_CASE("RootOfUnity basics") {
    auto r = RootOfUnity::fraction(3, 6);
    CHECK(r.numerator() == 1);
    CHECK(r.denominator() == 2);
    CHECK((r * r).is_one());
    CHECK(r.conjugate() == r);
    CHECK(RootOfUnity::fraction(1, 8).pow(4) == RootOfUnity::fraction(1, 2));
    CHECK(RootOfUnity::zero().is_zero());
    CHECK((RootOfUnity::zero() * r).is_zero());
    CHECK(std::abs(RootOfUnity::fraction(1, 4).to_complex() - std::complex<double>(0, 1)) < 1e-15);
}

TEST_CASE("evaluate: examples") {
    auto triv = enumerate_characters(1).front();
    CHECK(triv(7).is_one());

    auto chars5 = enumerate_characters(5);
    // generator 2 of order 4; exponents are [e] against it
    const DirichletCharacter* quad = nullptr;
    for (const auto& chi : chars5)
        if (chi.exponents() == std::vector<std::uint64_t>{2}) quad = &chi;
    REQUIRE(quad != nullptr);
    CHECK((*quad)(2) == RootOfUnity::fraction(1, 2)); // -1

    for (const auto& chi : enumerate_characters(10)) CHECK(chi(5).is_zero());
}

TEST_CASE("evaluate: values on units are roots of unity (modulus one)") {
    for (std::uint64_t n : {5ull, 8ull, 12ull, 15ull, 16ull, 21ull}) {
        for (const auto& chi : enumerate_characters(n)) {
            for (std::uint64_t a = 0; a < n; ++a) {
                auto v = chi(static_cast<std::int64_t>(a));
                if (std::gcd(a, n) != 1) {
                    CHECK(v.is_zero());
                } else {
                    CHECK(!v.is_zero());
                    CHECK(std::abs(std::abs(v.to_complex()) - 1.0) < 1e-15);
                }
            }
        }
    }
}

TEST_CASE("conductor: examples and brute-force oracle") {
    auto chars12 = enumerate_characters(12);
    CHECK(chars12.front().is_trivial());
    CHECK(chars12.front().conductor().value() == 1);

    for (const auto& chi : enumerate_characters(5))
        if (chi.order() == 2) CHECK(chi.conductor().value() == 5);

    // the mod-8 lift of the mod-4 character: chi(5) = 1, chi(7) = -1
    for (const auto& chi : enumerate_characters(8)) {
        if (chi(5).is_one() && chi(7) == RootOfUnity::fraction(1, 2))
            CHECK(chi.conductor().value() == 4);
    }

    for (std::uint64_t n : {2ull, 3ull, 4ull, 8ull, 9ull, 12ull, 16ull, 24ull, 45ull, 56ull, 100ull}) {
        for (const auto& chi : enumerate_characters(n))
            CHECK(chi.conductor().value() == brute_force_conductor(chi));
    }
}

TEST_CASE("enumerate_characters: examples") {
    CHECK(enumerate_characters(1).size() == 1);
    CHECK(enumerate_characters(1).front().is_trivial());

    auto chars5 = enumerate_characters(5);
    REQUIRE(chars5.size() == 4);
    std::multiset<std::uint64_t> orders;
    for (const auto& chi : chars5) orders.insert(chi.order());
    CHECK(orders == std::multiset<std::uint64_t>{1, 2, 4, 4});

    auto chars8 = enumerate_characters(8);
    REQUIRE(chars8.size() == 4);
    std::multiset<std::uint64_t> conds;
    for (const auto& chi : chars8) conds.insert(static_cast<std::uint64_t>(chi.conductor().value()));
    CHECK(conds == std::multiset<std::uint64_t>{1, 4, 8, 8});

    CHECK_THROWS_AS(enumerate_characters(100, 10), SizeError);

    // distinct exponent vectors, trivial first
    for (std::uint64_t n : {16ull, 21ull, 40ull}) {
        auto chars = enumerate_characters(n);
        CHECK(chars.front().is_trivial());
        std::set<std::vector<std::uint64_t>> seen;
        for (const auto& chi : chars) CHECK(seen.insert(chi.exponents()).second);
        CHECK(chars.size() == chars.front().group().order());
    }
}

TEST_CASE("count_primitive_conductor_at_most") {
    CHECK(count_primitive_conductor_at_most(1) == 1);
    CHECK(count_primitive_conductor_at_most(3) == 2);
    CHECK(count_primitive_conductor_at_most(10) == 17);
    for (std::uint64_t M : {1ull, 2ull, 5ull, 10ull, 23ull, 48ull, 100ull}) {
        CHECK(count_primitive_conductor_at_most(M) == brute_force_primitive_count(M));
        CHECK(count_primitive_conductor_at_most(M) <= M * M);
    }
    CHECK_THROWS_AS(count_primitive_conductor_at_most(100, 10), SizeError);
}

TEST_CASE("primitivize") {
    for (std::uint64_t n : {8ull, 12ull, 24ull, 45ull, 60ull}) {
        for (const auto& chi : enumerate_characters(n)) {
            auto prim = primitivize(chi);
            CHECK(prim.conductor().value() == chi.conductor().value());
            CHECK(prim.modulus() == chi.conductor().value());
            CHECK(prim.is_primitive());
            CHECK(prim.order() == chi.order());
            // induces chi: equal on units of n
            for (std::uint64_t a = 0; a < n; ++a) {
                if (std::gcd(a, n) != 1) continue;
                CHECK(prim(static_cast<std::int64_t>(a)) == chi(static_cast<std::int64_t>(a)));
            }
            // idempotent
            auto prim2 = primitivize(prim);
            CHECK(prim2 == prim);
        }
    }
    auto triv12 = enumerate_characters(12).front();
    CHECK(primitivize(triv12).modulus() == 1);
}

TEST_CASE("multiplicativity on random pairs") {
    std::mt19937_64 rng(17);
    for (std::uint64_t n : {7ull, 8ull, 15ull, 16ull, 36ull}) {
        for (const auto& chi : enumerate_characters(n)) {
            for (int t = 0; t < 500; ++t) {
                std::int64_t a = static_cast<std::int64_t>(rng() % (4 * n)) - static_cast<std::int64_t>(2 * n);
                std::int64_t b = static_cast<std::int64_t>(rng() % (4 * n));
                CHECK(chi(a * b) == chi(a) * chi(b));
            }
        }
    }
}

TEST_CASE("orthogonality: nontrivial characters sum to zero, exactly") {
    for (std::uint64_t n : {3ull, 4ull, 5ull, 8ull, 12ull, 15ull, 16ull, 24ull, 40ull}) {
        for (const auto& chi : enumerate_characters(n)) {
            std::vector<RootOfUnity> values;
            for (std::uint64_t a = 0; a < n; ++a) values.push_back(chi(static_cast<std::int64_t>(a)));
            if (chi.is_trivial()) {
                CHECK(!sums_to_zero(values));
            } else {
                CHECK(sums_to_zero(values));
            }
        }
    }
}

TEST_CASE("parity") {
    // mod 3: the nontrivial character is odd; mod 8 example field characters
    auto chars3 = enumerate_characters(3);
    for (const auto& chi : chars3)
        if (!chi.is_trivial()) CHECK(!chi.is_even());
    for (const auto& chi : enumerate_characters(8)) {
        auto v = chi(-1);
        CHECK(v.is_one() == chi.is_even());
    }
}

TEST_CASE("character multiplication") {
    auto chars15 = enumerate_characters(15);
    for (const auto& a : chars15)
        for (const auto& b : chars15) {
            auto ab = multiply(a, b);
            for (std::uint64_t x = 1; x < 15; ++x) {
                if (std::gcd(x, 15ull) != 1) continue;
                CHECK(ab(static_cast<std::int64_t>(x)) ==
                      a(static_cast<std::int64_t>(x)) * b(static_cast<std::int64_t>(x)));
            }
        }
}
