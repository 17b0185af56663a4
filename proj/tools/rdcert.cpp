#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rdcert/commands.hpp"

using namespace rdcert;
using cli::CommandResult;
using cli::GlobalOptions;

namespace {

int emit(const CommandResult& result, bool pretty) {
    std::cout << (pretty ? result.output.dump(2) : result.output.dump()) << "\n";
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"character, conductor and discriminant-bound toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // let global flags appear after the subcommand name

    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    GlobalOptions g;
    app.add_option("--max-modulus", g.modulus_cap, "modulus cap for unit groups and characters");
    app.add_option("--max-conductor-cap", g.conductor_cap, "cap for field enumeration sweeps");
    app.add_option("--max-coeff", g.coeff_cap, "cap on Dirichlet-series length");
    app.add_option("--max-order", g.group_order_cap, "cap on permutation-group order");
    app.add_option("--max-table-order", g.table_order_cap, "cap on character-table group order");
    app.add_option("--max-table-classes", g.table_class_cap, "cap on character-table class count");
    app.add_option("--max-subgroup-order", g.subgroup_cap, "cap for abelian-subgroup enumeration");
    app.add_option("--cache-path", g.cache_path, "character-table cache file (default: RDCERT_CACHE)");
    app.add_option("--jobs", g.jobs, "worker threads for survey rows")->check(CLI::PositiveNumber);

    // field
    auto* field = app.add_subcommand("field", "analyze an abelian field spec");
    std::string field_spec;
    std::optional<std::uint64_t> zeta_N;
    field->add_option("spec", field_spec, "cyclotomic:n | subgroup:n:g1,g2,... | quadratic:D")
        ->required();
    field->add_option("--zeta", zeta_N, "cross-check zeta coefficients up to N");

    // group
    auto* group = app.add_subcommand("group", "character table of a permutation group");
    std::string generators;
    group->add_option("generators", generators, "e.g. \"(1 2),(1 2 3 4)\"")->required();

    // survey
    auto* survey = app.add_subcommand("survey", "sweep all abelian fields up to a conductor");
    std::uint64_t max_conductor = 0;
    survey->add_option("max_conductor", max_conductor, "largest canonical conductor")->required();

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the bound formulas for a datum");
    cli::BoundsArgs bargs;
    bounds_cmd->add_option("--degL", bargs.degL, "[L:Q], exact");
    bounds_cmd->add_option("--degL-log", bargs.degL_log, "log [L:Q]");
    bounds_cmd->add_option("--degL-loglog", bargs.degL_loglog, "log log [L:Q]");
    bounds_cmd->add_option("--degK", bargs.degK, "[K:Q] (default 1)");
    bounds_cmd->add_option("--rdL", bargs.rdL, "root discriminant of L");
    bounds_cmd->add_option("--rdL-log", bargs.rdL_log, "log rd_L");
    bounds_cmd->add_option("--discL", bargs.discL, "|Disc(L)|, exact");
    bounds_cmd->add_option("--discK", bargs.discK, "|Disc(K)|, exact");
    bounds_cmd->add_option("--r", bargs.r_actual, "known max irreducible degree");
    bounds_cmd->add_option("--r1", bargs.r1, "real places");
    bounds_cmd->add_option("--r2", bargs.r2, "complex places");
    bounds_cmd->add_option("--constants", bargs.constants_file, "JSON file with bound constants");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a module invariant suite");
    std::string suite;
    verify::SuiteOptions sopt;
    verify_cmd->add_option("suite", suite, "arith|dirichlet|fields|repr|bounds|all")->required();
    verify_cmd->add_option("--count-M", sopt.count_primitive_M, "primitive-count sweep bound");
    verify_cmd->add_option("--brute-M", sopt.brute_primitive_M, "brute-force comparison bound");
    verify_cmd->add_option("--oracle-conductor", sopt.oracle_conductor, "zeta-oracle conductor bound");
    verify_cmd->add_option("--oracle-N", sopt.oracle_N, "zeta-oracle series length");
    verify_cmd->add_option("--certify-conductor", sopt.certify_conductor, "abelian certification sweep");
    verify_cmd->add_option("--class-D-min", sopt.class_number_D_min, "most negative discriminant");
    verify_cmd->add_option("--ideal-Y", sopt.ideal_Y, "ideal-count sweep bound");
    verify_cmd->add_option("--tensor-trials", sopt.tensor_trials, "random filtration trials per group");
    verify_cmd->add_option("--seed", sopt.seed, "RNG seed for randomized trials");

    // cache
    auto* cache_cmd = app.add_subcommand("cache", "character-table cache maintenance");
    auto* cache_stats = cache_cmd->add_subcommand("stats", "entry count and file size");
    auto* cache_clear = cache_cmd->add_subcommand("clear", "remove the cache file");
    cache_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*field) return emit(cli::cmd_field(field_spec, zeta_N, g), pretty);
        if (*group) return emit(cli::cmd_group(generators, g), pretty);
        if (*survey) return emit(cli::cmd_survey(max_conductor, g), pretty);
        if (*bounds_cmd) return emit(cli::cmd_bounds(bargs, g), pretty);
        if (*verify_cmd) {
            auto result = cli::cmd_verify(suite, sopt, g);
            for (const auto& check : result.output["checks"])
                std::cerr << (check["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
                          << check["name"].get<std::string>() << ": "
                          << check["detail"].get<std::string>() << "\n";
            return emit(result, pretty);
        }
        if (*cache_stats) return emit(cli::cmd_cache_stats(g), pretty);
        if (*cache_clear) return emit(cli::cmd_cache_clear(g), pretty);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return cli::kExitInputError;
    } catch (const SizeError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return cli::kExitCapExceeded;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return cli::kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitVerifyFailure;
    }
    return cli::kExitInputError;
}
