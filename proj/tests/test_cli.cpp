#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "rdcert/cache.hpp"
#include "rdcert/commands.hpp"
#include "rdcert/json_io.hpp"

using namespace rdcert;
using namespace rdcert::cli;
using nlohmann::json;

namespace {

struct TempCache {
    std::string path;
    TempCache() {
        path = (std::filesystem::temp_directory_path() /
                ("rdcert_test_cache_" + std::to_string(::getpid()) + ".jsonl"))
                   .string();
        std::filesystem::remove(path);
    }
    ~TempCache() { std::filesystem::remove(path); }
};

GlobalOptions with_cache(const TempCache& tc) {
    GlobalOptions g;
    g.cache_path = tc.path;
    return g;
}

bool roundtrips(const json& j) {
    return json::parse(j.dump()) == j && json::parse(json::parse(j.dump()).dump()) == j;
}

} // namespace

TEST_CASE("cmd_field: examples and round-trip") {
    GlobalOptions g;
    auto r = cmd_field("cyclotomic:5", 50, g);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.output["schema_version"] == 1);
    CHECK(r.output["field"]["disc"]["value"] == "125");
    CHECK(r.output["abelian_rd_bound"]["satisfied"] == true);
    CHECK(r.output["zeta"]["euler_equals_splitting"] == true);
    CHECK(roundtrips(r.output));

    auto q = cmd_field("quadratic:-23", std::nullopt, g);
    CHECK(q.output["class_number"]["h"] == 3);
    CHECK(q.output["class_number"]["satisfied"] == true);
    CHECK(roundtrips(q.output));

    auto s = cmd_field("subgroup:8:7", std::nullopt, g);
    CHECK(s.output["field"]["degree"] == 2);
    CHECK(s.output["field"]["disc"]["value"] == "8");
    CHECK(roundtrips(s.output));

    CHECK_THROWS_AS(cmd_field("cyclotomic:abc", std::nullopt, g), ParseError);
    CHECK_THROWS_AS(cmd_field("septic:3", std::nullopt, g), ParseError);
    CHECK_THROWS_AS(cmd_field("subgroup:8:2", std::nullopt, g), std::domain_error);
    GlobalOptions small = g;
    small.modulus_cap = 4;
    CHECK_THROWS_AS(cmd_field("cyclotomic:8", std::nullopt, small), SizeError);
}

TEST_CASE("cmd_group: S4 example, cache round-trip") {
    TempCache tc;
    auto g = with_cache(tc);
    auto r = cmd_group("(1 2),(1 2 3 4)", g);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.output["degrees"] == json::array({1, 1, 2, 3, 3}));
    CHECK(r.output["max_irr_degree"] == 3);
    CHECK(r.output["min_abelian_index"] == 6);
    CHECK(r.output["isaacs"]["holds"] == true);
    CHECK(roundtrips(r.output));

    // a second run hits the cache and must be byte-identical
    auto r2 = cmd_group("(1 2),(1 2 3 4)", g);
    CHECK(r.output.dump() == r2.output.dump());
    TableCache cache(tc.path);
    CHECK(cache.stats()["entries"] == 1);

    auto c3 = cmd_group("(1 2 3)", g);
    CHECK(c3.output["max_irr_degree"] == 1);
    CHECK(c3.output["min_abelian_index"] == 1);

    auto a5 = cmd_group("(1 2 3),(3 4 5)", g);
    CHECK(a5.output["max_irr_degree"] == 5);

    CHECK_THROWS_AS(cmd_group("(1 2", g), ParseError);
    GlobalOptions capped = g;
    capped.group_order_cap = 10;
    CHECK_THROWS_AS(cmd_group("(1 2),(1 2 3 4)", capped), SizeError);
}

TEST_CASE("cache: sampled byte-for-byte equality against fresh computation") {
    TempCache tc;
    TableCache cache(tc.path);
    std::vector<std::string> samples{
        "(1 2)",         "(1 2 3)",           "(1 2 3 4)",     "(1 2),(3 4)",
        "(1 2),(1 2 3)", "(1 2),(1 2 3 4)",   "(1 2 3),(1 2)(3 4)",
        "(1 2 3 4 5)",   "(1 2 3 4 5 6),(2 6)(3 5)", "(1 3 2 4)(5 7 6 8),(1 5 2 6)(3 8 4 7)"};
    for (const auto& text : samples) {
        int pts = 1;
        auto gens = repr::parse_generators(text, pts);
        auto G = repr::group_from_generators(pts, gens);
        auto fresh = jsonio::to_json(*repr::character_table(G));
        cache.append(G->canonical_key(), fresh);
        auto cached = cache.lookup(G->canonical_key());
        REQUIRE(cached.has_value());
        CHECK(cached->dump() == fresh.dump());
        // recompute from scratch: identical bytes again (determinism)
        auto G2 = repr::group_from_generators(pts, repr::parse_generators(text, pts));
        CHECK(jsonio::to_json(*repr::character_table(G2)).dump() == fresh.dump());
    }
    CHECK(cache.stats()["entries"] == samples.size());
    cache.clear();
    CHECK(cache.stats()["entries"] == 0);
}

TEST_CASE("cmd_survey") {
    GlobalOptions g;
    auto r = cmd_survey(5, g);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.output["summary"]["fields"] == 5);
    CHECK(r.output["summary"]["violations"] == 0);
    CHECK(roundtrips(r.output));
    for (const auto& row : r.output["rows"]) {
        if (row["degree"].get<std::uint64_t>() > 2) CHECK(row["abelian_rd_bound"]["satisfied"] == true);
        CHECK(row["ideal_count_spot"]["ok"] == true);
    }

    auto r1 = cmd_survey(1, g);
    CHECK(r1.output["summary"]["fields"] == 1);
    CHECK(r1.output["rows"][0]["abelian_rd_bound"]["applicable"] == false);

    // parallel row evaluation agrees with serial
    GlobalOptions par = g;
    par.jobs = 4;
    CHECK(cmd_survey(30, par).output.dump() == cmd_survey(30, g).output.dump());

    GlobalOptions capped = g;
    capped.conductor_cap = 3;
    CHECK_THROWS_AS(cmd_survey(10, capped), SizeError);
}

TEST_CASE("cmd_bounds") {
    GlobalOptions g;
    BoundsArgs a;
    a.degL_loglog = 9.0;
    a.rdL_log = 1.0;
    auto r = cmd_bounds(a, g);
    CHECK(roundtrips(r.output));
    bool found = false;
    for (const auto& e : r.output["report"]["entries"]) {
        if (e["name"] == "degree_bound_unconditional") {
            found = true;
            CHECK(e["value"].get<double>() == doctest::Approx(0.25600).epsilon(1e-4));
            CHECK(e["applicable"] == true);
        }
    }
    CHECK(found);

    BoundsArgs two;
    two.degL_log = 32.0;
    two.rdL_log = 1.0;
    auto r2 = cmd_bounds(two, g);
    for (const auto& e : r2.output["report"]["entries"])
        if (e["name"] == "degree_bound_grh") CHECK(e["value"].get<double>() == doctest::Approx(2.0));

    BoundsArgs four;
    four.degL = 4;
    auto r3 = cmd_bounds(four, g);
    for (const auto& e : r3.output["report"]["entries"])
        if (e["name"] == "abelian_rd_bound") CHECK(e["value"].get<double>() == doctest::Approx(1.18921).epsilon(1e-5));

    BoundsArgs none;
    CHECK_THROWS_AS(cmd_bounds(none, g), ParseError);
    BoundsArgs both;
    both.degL = 4;
    both.degL_log = 2.0;
    CHECK_THROWS_AS(cmd_bounds(both, g), ParseError);
}

TEST_CASE("constants file") {
    GlobalOptions g;
    auto path = std::filesystem::temp_directory_path() / "rdcert_constants_test.json";
    {
        std::ofstream out(path);
        out << R"({"C2": 0.5, "C3": 2.0})";
    }
    BoundsArgs a;
    a.degL_log = 32.0;
    a.rdL_log = 1.0;
    a.constants_file = path.string();
    auto r = cmd_bounds(a, g);
    for (const auto& e : r.output["report"]["entries"])
        if (e["name"] == "degree_bound_grh") CHECK(e["value"].get<double>() == doctest::Approx(1.0));
    CHECK(r.output["report"]["constants"]["C2"] == 0.5);

    {
        std::ofstream out(path);
        out << R"({"C99": 1.0})";
    }
    CHECK_THROWS_AS(cmd_bounds(a, g), ParseError);
    std::filesystem::remove(path);
}

TEST_CASE("cmd_verify: per-suite runs") {
    GlobalOptions g;
    verify::SuiteOptions fast;
    fast.count_primitive_M = 50;
    fast.brute_primitive_M = 30;
    fast.oracle_conductor = 12;
    fast.oracle_N = 200;
    fast.certify_conductor = 30;
    fast.class_number_D_min = -500;
    fast.ideal_Y = 300.0;
    fast.tensor_trials = 5;

    for (const std::string suite : {"arith", "dirichlet", "bounds"}) {
        auto r = cmd_verify(suite, fast, g);
        CHECK(r.exit_code == kExitOk);
        CHECK(r.output["summary"]["failed"] == 0);
        CHECK(roundtrips(r.output));
    }
    CHECK_THROWS_AS(cmd_verify("nope", fast, g), ParseError);
}

TEST_CASE("cache stats and clear commands") {
    TempCache tc;
    auto g = with_cache(tc);
    auto before = cmd_cache_stats(g);
    CHECK(before.output["cache"]["entries"] == 0);
    cmd_group("(1 2 3)", g);
    auto after = cmd_cache_stats(g);
    CHECK(after.output["cache"]["entries"] == 1);
    CHECK(roundtrips(after.output));
    auto cleared = cmd_cache_clear(g);
    CHECK(cleared.output["cache"]["cleared"] == true);
    CHECK(cmd_cache_stats(g).output["cache"]["entries"] == 0);
}

TEST_CASE("stale cache versions are ignored") {
    TempCache tc;
    {
        std::ofstream out(tc.path);
        out << json{{"cache_version", TableCache::kVersion}}.dump() << "\n";
        out << json{{"key", "k"}, {"version", TableCache::kVersion + 1}, {"table", {{"x", 1}}}}.dump()
            << "\n";
    }
    TableCache cache(tc.path);
    CHECK(!cache.lookup("k").has_value());
    CHECK(cache.stats()["stale_entries"] == 1);
    cache.append("k", json{{"x", 2}});
    auto hit = cache.lookup("k");
    REQUIRE(hit.has_value());
    CHECK((*hit)["x"] == 2);
}
