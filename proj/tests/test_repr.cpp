#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "group_fixtures.hpp"
#include "rdcert/repr.hpp"

using namespace rdcert;
using namespace rdcert::repr;

namespace {

std::multiset<std::uint64_t> degree_multiset(const CharacterTablePtr& t) {
    return {t->degrees().begin(), t->degrees().end()};
}

RamificationFiltration random_filtration(const PermGroupPtr& G, std::mt19937_64& rng) {
    std::vector<Subgroup> chain;
    std::vector<int> pool;
    for (std::uint64_t i = 0; i < G->order(); ++i) pool.push_back(static_cast<int>(i));
    Subgroup cur = subgroup_closure(
        G, {pool[rng() % pool.size()], pool[rng() % pool.size()]});
    chain.push_back(cur);
    int depth = 1 + static_cast<int>(rng() % 3);
    for (int d = 0; d < depth && !cur.is_trivial(); ++d) {
        std::vector<int> gens;
        for (int t = 0; t < 2; ++t) gens.push_back(cur.elements[rng() % cur.elements.size()]);
        cur = subgroup_closure(G, gens);
        // keep the chain decreasing: generators came from the previous member
        chain.push_back(cur);
    }
    return make_filtration(std::move(chain));
}

} // namespace

TEST_CASE("Perm basics and cycle parsing") {
    int pts = 1;
    auto gens = parse_generators("(1 2)(3 4), (1 2 3)", pts);
    CHECK(pts == 4);
    REQUIRE(gens.size() == 2);
    CHECK(cycles_string(gens[0]) == "(1 2)(3 4)");
    CHECK(cycles_string(gens[1]) == "(1 2 3)");
    CHECK(gens[0].order() == 2);
    CHECK(gens[1].order() == 3);
    CHECK(gens[0].then(gens[0]).is_identity());
    CHECK(gens[1].inverse().then(gens[1]).is_identity());
    CHECK(cycles_string(Perm(4)) == "()");
    CHECK_THROWS_AS(parse_generators("(1 2", pts), ParseError);
    CHECK_THROWS_AS(parse_generators("(0 1)", pts), ParseError);
    CHECK_THROWS_AS(parse_generators("(1 1)", pts), ParseError);
}

TEST_CASE("group_from_generators: examples") {
    auto trivial = group_from_generators(1, {});
    CHECK(trivial->order() == 1);
    CHECK(trivial->classes().size() == 1);

    auto s4 = fixtures::symmetric(4);
    CHECK(s4->order() == 24);
    CHECK(s4->classes().size() == 5);

    auto a5 = fixtures::alternating(5);
    CHECK(a5->order() == 60);
    CHECK(a5->classes().size() == 5);

    CHECK_THROWS_AS(group_from_generators(5, fixtures::symmetric(5)->generators(), 100), SizeError);
}

TEST_CASE("class data is canonical") {
    auto s4 = fixtures::symmetric(4);
    // identity first; sizes ascending with order tie-break
    CHECK(s4->classes()[0].size == 1);
    CHECK(s4->classes()[0].element_order == 1);
    std::uint64_t total = 0;
    for (const auto& c : s4->classes()) total += c.size;
    CHECK(total == 24);
    CHECK(s4->exponent() == 12);
    // S4 class sizes: 1, 6, 3, 8, 6
    std::multiset<std::uint64_t> sizes;
    for (const auto& c : s4->classes()) sizes.insert(c.size);
    CHECK(sizes == std::multiset<std::uint64_t>{1, 3, 6, 6, 8});
}

TEST_CASE("character tables: example degrees") {
    CHECK(degree_multiset(character_table(fixtures::cyclic(3))) ==
          std::multiset<std::uint64_t>{1, 1, 1});
    CHECK(degree_multiset(character_table(fixtures::symmetric(4))) ==
          std::multiset<std::uint64_t>{1, 1, 2, 3, 3});
    CHECK(degree_multiset(character_table(fixtures::quaternion())) ==
          std::multiset<std::uint64_t>{1, 1, 1, 1, 2});
    CHECK(degree_multiset(character_table(fixtures::symmetric(5))) ==
          std::multiset<std::uint64_t>{1, 1, 4, 4, 5, 5, 6});
    CHECK(degree_multiset(character_table(fixtures::alternating(5))) ==
          std::multiset<std::uint64_t>{1, 3, 3, 4, 5});
}

TEST_CASE("S3 table matches the hand-computed values") {
    auto G = fixtures::symmetric(3);
    auto t = character_table(G);
    // canonical class order: identity, the 3-cycles (size 2), the transpositions (size 3)
    REQUIRE(G->classes().size() == 3);
    CHECK(G->classes()[1].size == 2);
    CHECK(G->classes()[1].element_order == 3);
    CHECK(G->classes()[2].size == 3);
    auto val = [&](int r, int c) { return t->value(r, c).to_integer(); };
    std::set<std::vector<long long>> rows;
    for (int r = 0; r < 3; ++r) rows.insert({val(r, 0), val(r, 1), val(r, 2)});
    CHECK(rows == std::set<std::vector<long long>>{{1, 1, 1}, {1, 1, -1}, {2, -1, 0}});
}

TEST_CASE("Q8 degree-2 row matches the hand-computed values") {
    auto G = fixtures::quaternion();
    auto t = character_table(G);
    int deg2 = -1;
    for (int r = 0; r < t->row_count(); ++r)
        if (t->degree(r) == 2) deg2 = r;
    REQUIRE(deg2 >= 0);
    for (std::size_t c = 0; c < G->classes().size(); ++c) {
        long long v = t->value(deg2, static_cast<int>(c)).to_integer();
        if (G->classes()[c].element_order == 1) CHECK(v == 2);  // identity
        if (G->classes()[c].element_order == 2) CHECK(v == -2); // the central -1
        if (G->classes()[c].element_order == 4) CHECK(v == 0);  // {+-i}, {+-j}, {+-k}
    }
}

TEST_CASE("cube roots of unity appear in the C3 table") {
    auto t = character_table(fixtures::cyclic(3));
    CHECK(t->value_order() == 3);
    bool found_primitive = false;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (t->value(r, c) == cyclo::Cyclotomic::root_power(3, 1)) found_primitive = true;
    CHECK(found_primitive);
}

TEST_CASE("abelian tables are exactly the dual groups") {
    // every row of an abelian table is multiplicative on classes
    for (int n : {2, 3, 4, 5, 6, 8, 12}) {
        auto G = fixtures::cyclic(n);
        auto t = character_table(G);
        for (int r = 0; r < t->row_count(); ++r) {
            CHECK(t->degree(r) == 1);
            for (std::uint64_t x = 0; x < G->order(); ++x)
                for (std::uint64_t y = 0; y < G->order(); ++y) {
                    int xy = G->multiply(static_cast<int>(x), static_cast<int>(y));
                    auto lhs = t->value(r, G->class_of(xy));
                    auto rhs = t->value(r, G->class_of(static_cast<int>(x))) *
                               t->value(r, G->class_of(static_cast<int>(y)));
                    CHECK(lhs == rhs);
                }
        }
        // and the rows are pairwise distinct, so they exhaust the dual group
        std::set<std::vector<std::vector<long long>>> distinct;
        for (int r = 0; r < t->row_count(); ++r) {
            std::vector<std::vector<long long>> key;
            for (std::size_t c = 0; c < G->classes().size(); ++c)
                key.push_back(t->value(r, static_cast<int>(c)).coeffs());
            distinct.insert(key);
        }
        CHECK(distinct.size() == G->order());
    }
}

TEST_CASE("larger tables match the known degree sets") {
    CHECK(degree_multiset(character_table(fixtures::symmetric(6))) ==
          std::multiset<std::uint64_t>{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16});
    // PSL(2,7) on the projective line over F_7: x -> x+1 and x -> -1/x
    auto psl27 = fixtures::group_from_text("(1 2 3 4 5 6 7),(1 8)(2 7)(3 4)(5 6)");
    CHECK(psl27->order() == 168);
    CHECK(psl27->classes().size() == 6);
    CHECK(degree_multiset(character_table(psl27)) ==
          std::multiset<std::uint64_t>{1, 3, 3, 6, 7, 8});
}

TEST_CASE("max_irr_degree") {
    CHECK(max_irr_degree(fixtures::cyclic(7)) == 1);
    CHECK(max_irr_degree(fixtures::symmetric(5)) == 6);
    CHECK(max_irr_degree(fixtures::alternating(5)) == 5);
}

TEST_CASE("min_abelian_subgroup_index") {
    CHECK(min_abelian_subgroup_index(fixtures::cyclic(12)) == 1);
    CHECK(min_abelian_subgroup_index(fixtures::dihedral(2)) == 1);
    CHECK(min_abelian_subgroup_index(fixtures::symmetric(3)) == 2);
    CHECK(min_abelian_subgroup_index(fixtures::symmetric(4)) == 6);
    CHECK(min_abelian_subgroup_index(fixtures::quaternion()) == 2);
    auto big = group_from_generators(8, fixtures::quaternion()->generators(), 10000);
    CHECK_THROWS_AS(min_abelian_subgroup_index(big, 4), SizeError);
}

TEST_CASE("tensor_trivial_multiplicity is the Kronecker delta") {
    for (const auto& G : {fixtures::symmetric(3), fixtures::symmetric(4), fixtures::quaternion()}) {
        auto t = character_table(G);
        for (int i = 0; i < t->row_count(); ++i)
            for (int j = 0; j < t->row_count(); ++j)
                CHECK(tensor_trivial_multiplicity({t, i}, {t, j}) == (i == j ? 1 : 0));
    }
    auto s3 = character_table(fixtures::symmetric(3));
    auto c3 = character_table(fixtures::cyclic(3));
    CHECK_THROWS_AS(tensor_trivial_multiplicity({s3, 0}, {c3, 0}), std::domain_error);
}

TEST_CASE("fixed_space_dim: examples") {
    auto s3g = fixtures::symmetric(3);
    auto t = character_table(s3g);
    int deg2 = -1;
    for (int r = 0; r < t->row_count(); ++r)
        if (t->degree(r) == 2) deg2 = r;
    REQUIRE(deg2 >= 0);

    CHECK(fixed_space_dim({t, deg2}, trivial_subgroup(s3g)) == 2);

    // full group: multiplicity of the trivial character
    std::vector<int> all_gens;
    for (std::uint64_t i = 0; i < s3g->order(); ++i) all_gens.push_back(static_cast<int>(i));
    auto full = subgroup_closure(s3g, all_gens);
    CHECK(fixed_space_dim({t, deg2}, full) == 0);

    // A3 inside S3: the 2-dimensional character restricted to A3 has no fixed vector
    int three_cycle = -1;
    for (std::uint64_t i = 0; i < s3g->order(); ++i)
        if (s3g->elements()[i].order() == 3) three_cycle = static_cast<int>(i);
    auto a3 = subgroup_closure(s3g, {three_cycle});
    CHECK(a3.order() == 3);
    CHECK(fixed_space_dim({t, deg2}, a3) == 0);
}

TEST_CASE("artin_conductor_exponent: examples") {
    // trivial filtration: zero for every row
    auto c2 = fixtures::cyclic(2);
    auto t2 = character_table(c2);
    auto triv_filt = make_filtration({trivial_subgroup(c2)});
    for (int r = 0; r < t2->row_count(); ++r)
        CHECK(artin_conductor_exponent({t2, r}, triv_filt) == 0);

    // tame C2: G_0 = C2, G_1 = 1; the nontrivial character has exponent 1
    auto full2 = subgroup_closure(c2, {1});
    auto tame = make_filtration({full2});
    int nontriv = t2->degree(0) == 1 && t2->value(0, 1).to_integer() == -1 ? 0 : 1;
    CHECK(artin_conductor_exponent({t2, nontriv}, tame) == 1);
    CHECK(artin_conductor_exponent({t2, 1 - nontriv}, tame) == 0);

    // wild C4 with G_0 = G_1 = C4: a faithful character has exponent 2
    auto c4 = fixtures::cyclic(4);
    auto t4 = character_table(c4);
    auto full4 = subgroup_closure(c4, {1, 2, 3});
    auto wild = make_filtration({full4, full4});
    int gen_class = -1;
    for (std::size_t c = 0; c < c4->classes().size(); ++c)
        if (c4->classes()[c].element_order == 4) gen_class = static_cast<int>(c);
    REQUIRE(gen_class >= 0);
    int faithful = -1;
    for (int r = 0; r < t4->row_count(); ++r)
        if (!t4->value(r, gen_class).is_integer()) faithful = r; // value is +-i
    REQUIRE(faithful >= 0);
    CHECK(artin_conductor_exponent({t4, faithful}, wild) == 2);
}

TEST_CASE("degree-1 rows form a group under pointwise product") {
    for (const auto& G : {fixtures::symmetric(3), fixtures::symmetric(4), fixtures::alternating(4),
                          fixtures::quaternion(), fixtures::dihedral(6)}) {
        auto t = character_table(G);
        std::vector<int> linear;
        for (int r = 0; r < t->row_count(); ++r)
            if (t->degree(r) == 1) linear.push_back(r);
        std::size_t k = G->classes().size();
        auto row_values = [&](int r) {
            std::vector<cyclo::Cyclotomic> v;
            for (std::size_t c = 0; c < k; ++c) v.push_back(t->value(r, static_cast<int>(c)));
            return v;
        };
        std::set<std::vector<std::vector<long long>>> linear_set;
        for (int r : linear) {
            std::vector<std::vector<long long>> key;
            for (const auto& v : row_values(r)) key.push_back(v.coeffs());
            linear_set.insert(key);
        }
        for (int a : linear)
            for (int b : linear) {
                std::vector<std::vector<long long>> key;
                for (std::size_t c = 0; c < k; ++c)
                    key.push_back((t->value(a, static_cast<int>(c)) * t->value(b, static_cast<int>(c))).coeffs());
                CHECK(linear_set.count(key) == 1);
            }
    }
}

TEST_CASE("tensor conductor inequality: degree-1 brute force over C6") {
    // for characters, f(chi psi-bar) <= f(chi) + f(psi) under every chain
    auto c6 = fixtures::cyclic(6);
    auto t = character_table(c6);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        auto filt = random_filtration(c6, rng);
        for (int a = 0; a < t->row_count(); ++a)
            for (int b = 0; b < t->row_count(); ++b) {
                auto chk = tensor_conductor_check({t, a}, {t, b}, filt);
                CHECK(chk.holds);
                CHECK(chk.lhs <= artin_conductor_exponent({t, a}, filt) +
                                     artin_conductor_exponent({t, b}, filt));
            }
    }
}

TEST_CASE("tensor conductor inequality: randomized trials") {
    std::mt19937_64 rng(29);
    for (const auto& G : {fixtures::symmetric(3), fixtures::symmetric(4), fixtures::quaternion(),
                          fixtures::alternating(4)}) {
        auto t = character_table(G);
        for (int trial = 0; trial < 300; ++trial) {
            auto filt = random_filtration(G, rng);
            int a = static_cast<int>(rng() % t->row_count());
            int b = static_cast<int>(rng() % t->row_count());
            auto chk = tensor_conductor_check({t, a}, {t, b}, filt);
            CHECK(chk.holds);
        }
    }
    // the worked example shape: the S3 degree-2 row squared
    auto s3 = fixtures::symmetric(3);
    auto t3 = character_table(s3);
    int deg2 = 0;
    for (int r = 0; r < t3->row_count(); ++r)
        if (t3->degree(r) == 2) deg2 = r;
    for (int trial = 0; trial < 100; ++trial) {
        auto filt = random_filtration(s3, rng);
        CHECK(tensor_conductor_check({t3, deg2}, {t3, deg2}, filt).holds);
    }
}

TEST_CASE("make_filtration validates") {
    auto s3 = fixtures::symmetric(3);
    auto full = subgroup_closure(s3, {1, 2, 3, 4, 5});
    int three_cycle = -1;
    for (std::uint64_t i = 0; i < s3->order(); ++i)
        if (s3->elements()[i].order() == 3) three_cycle = static_cast<int>(i);
    auto a3 = subgroup_closure(s3, {three_cycle});
    CHECK_NOTHROW(make_filtration({full, a3}));
    // appends the trivial terminator
    CHECK(make_filtration({full, a3}).chain.back().is_trivial());
    int transposition = -1;
    for (std::uint64_t i = 1; i < s3->order(); ++i)
        if (s3->elements()[i].order() == 2) transposition = static_cast<int>(i);
    auto c2 = subgroup_closure(s3, {transposition});
    CHECK_THROWS_AS(make_filtration({a3, c2}), std::domain_error); // not decreasing
    CHECK_THROWS_AS(make_filtration({}), std::domain_error);
}

TEST_CASE("table determinism across instances") {
    auto g1 = fixtures::symmetric(4);
    auto g2 = fixtures::symmetric(4);
    auto t1 = character_table(g1);
    auto t2 = character_table(g2);
    REQUIRE(t1->row_count() == t2->row_count());
    CHECK(g1->canonical_key() == g2->canonical_key());
    for (int r = 0; r < t1->row_count(); ++r) {
        CHECK(t1->degree(r) == t2->degree(r));
        for (std::size_t c = 0; c < g1->classes().size(); ++c)
            CHECK(t1->value(r, static_cast<int>(c)) == t2->value(r, static_cast<int>(c)));
    }
}
