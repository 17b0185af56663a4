#pragma once

#include <random>
#include <string>
#include <vector>

#include "rdcert/abelian_fields.hpp"
#include "rdcert/dirichlet.hpp"
#include "rdcert/repr.hpp"

namespace rdcert::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Scales for the invariant suites; the defaults are the documented corpus
/// sizes (conductor 40/200, M = 500, |D| <= 10^4, 1000 filtration trials).
struct SuiteOptions {
    std::uint64_t count_primitive_M = 500;
    std::uint64_t brute_primitive_M = 100;
    std::uint64_t oracle_conductor = 40;
    std::uint64_t oracle_N = 2000;
    std::uint64_t certify_conductor = 200;
    std::int64_t class_number_D_min = -10'000;
    double ideal_Y = 10'000.0;
    std::uint64_t tensor_trials = 1000;
    std::uint64_t seed = 0x5eed;
};

/// Runs one of {arith, dirichlet, fields, repr, bounds, all}.
/// Unknown names throw ParseError.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt = {});

// --- oracles, independent of the implementation paths they check ---

/// Conductor by direct scan over divisors and kernel elements.
std::uint64_t brute_force_conductor(const dirichlet::DirichletCharacter& chi);

/// Primitive-character count by enumerating and filtering every modulus <= M.
std::uint64_t brute_force_primitive_count(std::uint64_t M);

/// Ideal counts of the class-number-one imaginary quadratic fields by counting
/// norm-form representations (D in {-3, -4, -7, -8, -11}).
std::vector<BigInt> norm_form_ideal_counts(std::int64_t D, std::uint64_t N);

// --- the standard group suite ---

repr::PermGroupPtr cyclic_group(int n);
repr::PermGroupPtr dihedral_group(int n); // order 2n
repr::PermGroupPtr symmetric_group(int n);
repr::PermGroupPtr alternating_group(int n); // n in {3, 4, 5}
repr::PermGroupPtr quaternion_group();       // degree-8 regular

struct SuiteGroup {
    std::string name;
    repr::PermGroupPtr group;
    std::uint64_t expected_max_degree;
};

/// C_n and D_n for n <= 12, S3, S4, S5, A4, A5, Q8, with known max degrees.
const std::vector<SuiteGroup>& suite_groups();

/// A random decreasing subgroup chain of the group (for conductor trials).
repr::RamificationFiltration random_filtration(const repr::PermGroupPtr& group,
                                               std::mt19937_64& rng);

} // namespace rdcert::verify
