#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rdcert/verify.hpp"

namespace rdcert::cli {

/// Stable exit-code contract: 0 success, 1 verification failure, 2 input
/// error, 3 resource cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;

struct GlobalOptions {
    std::uint64_t modulus_cap = arith::kDefaultModulusCap;
    std::uint64_t conductor_cap = fields::kDefaultConductorCap;
    std::uint64_t coeff_cap = fields::kDefaultCoeffCap;
    std::uint64_t group_order_cap = repr::kDefaultGroupOrderCap;
    std::uint64_t table_order_cap = repr::kDefaultTableOrderCap;
    std::uint64_t table_class_cap = repr::kDefaultTableClassCap;
    std::uint64_t subgroup_cap = repr::kDefaultSubgroupEnumCap;
    std::string cache_path; // empty: TableCache::default_path()
    int jobs = 1;
};

struct CommandResult {
    nlohmann::json output;
    int exit_code = kExitOk;
};

/// "cyclotomic:n" | "subgroup:n:g1,g2,..." | "quadratic:D"
fields::AbelianField parse_field_spec(const std::string& spec, const GlobalOptions& g);

CommandResult cmd_field(const std::string& spec, std::optional<std::uint64_t> zeta_N,
                        const GlobalOptions& g);

CommandResult cmd_group(const std::string& generators, const GlobalOptions& g);

CommandResult cmd_survey(std::uint64_t max_conductor, const GlobalOptions& g);

struct BoundsArgs {
    std::optional<std::uint64_t> degL;
    std::optional<double> degL_log;
    std::optional<double> degL_loglog;
    std::uint64_t degK = 1;
    std::optional<double> rdL;
    std::optional<double> rdL_log;
    std::optional<std::uint64_t> discL;
    std::optional<std::uint64_t> discK;
    std::optional<std::uint64_t> r_actual;
    std::optional<std::uint64_t> r1;
    std::optional<std::uint64_t> r2;
    std::string constants_file;
};

CommandResult cmd_bounds(const BoundsArgs& args, const GlobalOptions& g);

CommandResult cmd_verify(const std::string& suite, const verify::SuiteOptions& opt,
                         const GlobalOptions& g);

CommandResult cmd_cache_stats(const GlobalOptions& g);
CommandResult cmd_cache_clear(const GlobalOptions& g);

} // namespace rdcert::cli
