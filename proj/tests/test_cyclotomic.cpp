#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>

#include "rdcert/cyclotomic.hpp"

using namespace rdcert::cyclo;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    // first index with a coefficient of magnitude 2
    CHECK(cyclotomic_polynomial(105)[7] == -2);
    CHECK(cyclotomic_polynomial(105).size() == 49); // degree phi(105) = 48
}

TEST_CASE("root-of-unity sums") {
    // 1 + zeta_5 + ... + zeta_5^4 = 0
    Cyclotomic s(5);
    for (int k = 0; k < 5; ++k) s += Cyclotomic::root_power(5, k);
    CHECK(s.is_zero());

    CHECK((Cyclotomic::root_power(8, 1) * Cyclotomic::root_power(8, 7)).to_integer() == 1);

    // (1 + zeta_3)(1 + zeta_3^2) = 1
    auto a = Cyclotomic::integer(3, 1) + Cyclotomic::root_power(3, 1);
    auto b = Cyclotomic::integer(3, 1) + Cyclotomic::root_power(3, 2);
    CHECK((a * b).to_integer() == 1);
    CHECK(a.conjugate() == b);
}

TEST_CASE("integer detection and exact division") {
    auto x = Cyclotomic::integer(12, 6);
    CHECK(x.is_integer());
    CHECK(x.divided_by(3).to_integer() == 2);
    CHECK_THROWS_AS(x.divided_by(4), std::domain_error);
    auto y = Cyclotomic::root_power(12, 1);
    CHECK(!y.is_integer());
    CHECK_THROWS_AS(y.to_integer(), std::domain_error);
}

TEST_CASE("order rescaling") {
    auto z3 = Cyclotomic::root_power(3, 1);
    auto z6 = z3.to_order(6);
    CHECK(z6 == Cyclotomic::root_power(6, 2));
    CHECK_THROWS_AS(z3.to_order(4), std::domain_error);
}

TEST_CASE("exact arithmetic tracks the complex embedding") {
    std::mt19937_64 rng(3);
    for (std::uint32_t m : {1u, 2u, 3u, 8u, 12u, 30u, 36u}) {
        for (int trial = 0; trial < 20; ++trial) {
            Cyclotomic a(m), b(m);
            std::complex<double> ca = 0, cb = 0;
            for (int t = 0; t < 4; ++t) {
                long long ka = static_cast<long long>(rng() % m);
                long long kb = static_cast<long long>(rng() % m);
                long long sa = static_cast<long long>(rng() % 7) - 3;
                long long sb = static_cast<long long>(rng() % 7) - 3;
                a += Cyclotomic::root_power(m, ka) * sa;
                b += Cyclotomic::root_power(m, kb) * sb;
                ca += static_cast<double>(sa) * Cyclotomic::root_power(m, ka).to_complex();
                cb += static_cast<double>(sb) * Cyclotomic::root_power(m, kb).to_complex();
            }
            CHECK(std::abs((a * b).to_complex() - ca * cb) < 1e-9);
            CHECK(std::abs((a + b).to_complex() - (ca + cb)) < 1e-9);
            CHECK(std::abs(a.conjugate().to_complex() - std::conj(ca)) < 1e-9);
        }
    }
}
