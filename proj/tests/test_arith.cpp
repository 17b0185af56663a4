#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "rdcert/arith.hpp"

using namespace rdcert;
using namespace rdcert::arith;

namespace {

// independent order oracle: plain repeated multiplication
std::uint64_t brute_order(std::uint64_t a, std::uint64_t n) {
    std::uint64_t x = a % n, e = 1;
    while (x != 1 % n) {
        x = mul_mod(x, a, n);
        ++e;
    }
    return e;
}

} // namespace

TEST_CASE("factor: examples") {
    CHECK(factor(1).factors().empty());
    CHECK(factor(1).value() == 1);

    auto f360 = factor(360);
    CHECK(f360.factors() == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});

    auto f1009 = factor(1009);
    CHECK(f1009.factors() == std::vector<PrimePower>{{1009, 1}});
}

TEST_CASE("factor: errors") {
    CHECK_THROWS_AS(factor(std::uint64_t(0)), std::domain_error);
    CHECK_THROWS_AS(factor(100, 10), SizeError);
    CHECK_THROWS_AS(factor(BigInt("18446744073709551617")), SizeError); // 2^64 + 1 > cap
}

TEST_CASE("factor: re-multiplication oracle") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t n = rng() % 1'000'000 + 1;
        auto f = factor(n);
        BigInt prod = 1;
        std::uint64_t last = 0;
        for (const auto& pp : f.factors()) {
            CHECK(pp.prime > last);
            CHECK(is_prime(pp.prime));
            last = pp.prime;
            for (std::uint32_t j = 0; j < pp.exponent; ++j) prod *= pp.prime;
        }
        CHECK(prod == n);
    }
    // a few above the trial-division range (Pollard rho path)
    for (std::uint64_t n : {1000003ull * 1000033ull, 2147483647ull * 65537ull, 1000000007ull}) {
        auto f = factor(n);
        BigInt prod = 1;
        for (const auto& pp : f.factors())
            for (std::uint32_t j = 0; j < pp.exponent; ++j) prod *= pp.prime;
        CHECK(prod == n);
    }
}

TEST_CASE("FactoredInt arithmetic") {
    auto a = factor(12), b = factor(18);
    CHECK((a * b).value() == 216);
    CHECK((a * b).factors() == std::vector<PrimePower>{{2, 3}, {3, 3}});
    CHECK(a.pow(3).value() == 1728);
    CHECK((a * b).over(a).value() == 18);
    CHECK_THROWS_AS(a.over(b), std::domain_error);
    CHECK(factor(1).log_value() == doctest::Approx(0.0));
    CHECK(factor(1024).log_value() == doctest::Approx(10 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("unit_group: examples") {
    auto g1 = unit_group(1);
    CHECK(g1.cyclic_factors().empty());
    CHECK(g1.order() == 1);

    auto g8 = unit_group(8);
    REQUIRE(g8.cyclic_factors().size() == 2);
    CHECK(g8.cyclic_factors()[0].generator == 7);
    CHECK(g8.cyclic_factors()[0].order == 2);
    CHECK(g8.cyclic_factors()[1].generator == 5);
    CHECK(g8.cyclic_factors()[1].order == 2);

    auto g5 = unit_group(5);
    REQUIRE(g5.cyclic_factors().size() == 1);
    CHECK(g5.cyclic_factors()[0].generator == 2);
    CHECK(g5.cyclic_factors()[0].order == 4);
}

TEST_CASE("unit_group: orders multiply to phi") {
    for (std::uint64_t n : {2ull, 4ull, 12ull, 16ull, 24ull, 45ull, 100ull, 360ull, 1009ull}) {
        auto g = unit_group(n);
        std::uint64_t prod = 1;
        for (const auto& f : g.cyclic_factors()) prod *= f.order;
        CHECK(prod == euler_phi(n));
        CHECK(g.order() == euler_phi(n));
    }
}

TEST_CASE("multiplicative_order: examples mod 7") {
    auto g = unit_group(7);
    CHECK(multiplicative_order(1, g) == 1);
    CHECK(multiplicative_order(2, g) == 3);
    CHECK(multiplicative_order(3, g) == 6);
    CHECK_THROWS_AS(multiplicative_order(7, g), std::domain_error);
}

TEST_CASE("multiplicative_order: divides phi and matches brute force") {
    std::mt19937_64 rng(11);
    for (std::uint64_t n : {9ull, 15ull, 16ull, 32ull, 35ull, 97ull, 720ull}) {
        auto g = unit_group(n);
        for (int i = 0; i < 50; ++i) {
            std::uint64_t a = rng() % n;
            if (std::gcd(a, n) != 1) continue;
            std::uint64_t ord = multiplicative_order(a, g);
            CHECK(euler_phi(n) % ord == 0);
            CHECK(ord == brute_order(a, n));
        }
    }
}

TEST_CASE("exponent vector is a bijection") {
    std::mt19937_64 rng(13);
    for (std::uint64_t n : {8ull, 24ull, 123ull, 1000ull, 4096ull, 9999ull}) {
        auto g = unit_group(n);
        for (int i = 0; i < 1000; ++i) {
            std::uint64_t a = rng() % n;
            if (n > 1 && std::gcd(a, n) != 1) continue;
            auto v = g.exponent_vector(a);
            REQUIRE(v.size() == g.cyclic_factors().size());
            for (std::size_t j = 0; j < v.size(); ++j) CHECK(v[j] < g.cyclic_factors()[j].order);
            CHECK(g.from_exponents(v) == a % n);
        }
    }
}

TEST_CASE("sieves") {
    auto mu = moebius_sieve(30);
    CHECK(mu[1] == 1);
    CHECK(mu[2] == -1);
    CHECK(mu[4] == 0);
    CHECK(mu[6] == 1);
    CHECK(mu[30] == -1);
    auto spf = smallest_prime_factor_sieve(100);
    CHECK(spf[2] == 2);
    CHECK(spf[91] == 7);
    CHECK(spf[97] == 97);
}
