#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdcert/abelian_fields.hpp"
#include "rdcert/arith.hpp"

namespace rdcert::bounds {

/// Poitou's discriminant-bound constants (main terms; the O([K:Q]^{-2/3})
/// correction is out of scope).
inline constexpr double kPoitouReal = 60.8395;
inline constexpr double kPoitouComplex = 22.3816;
inline constexpr double kPoitouRealGRH = 215.3325;
inline constexpr double kPoitouComplexGRH = 44.7632;

/// The bound-formula constants. C1 and the shape of C16 have pinned values;
/// C2, C3, C17 (and C19 inside C16) are only known to exist, so their
/// defaults are placeholders flagged as unspecified in reports.
struct BoundConstants {
    double C1 = 1.0 / 16.0;
    double C2 = 1.0;
    double C3 = 1.0;
    double C19 = 1.0;
    double C16 = 16384.0; // max(2^14, 100 * C19^2)
    double C17 = 2.718281828459045;
    /// log of the degree floor below which C1 = 1/16 is not justified (e^8,
    /// i.e. [L:Q] >= e^{e^8}).
    double log_min_degree_unconditional = 2980.9579870417283;

    /// Names of the constants with placeholder defaults.
    static const std::vector<std::string>& unspecified_names();
};

/// The field/group datum a report is evaluated against. [L:Q] may be exact or
/// given on a log scale (the unconditional bound's regime exceeds any integer
/// range); log_degL is always maintained.
struct ExtensionDatum {
    double log_degL = 0.0;
    std::optional<BigInt> degL_exact;
    std::uint64_t degK = 1;
    bool has_rd = false;
    double log_rdL = 0.0;
    std::optional<arith::FactoredInt> discL; // exact |Disc(L)|
    std::optional<arith::FactoredInt> discK;
    std::optional<std::uint64_t> r_actual;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> signature; // (r1, r2)
};

ExtensionDatum datum_from_exact_degree(const BigInt& degL, std::uint64_t degK = 1);
ExtensionDatum datum_from_field(const fields::AbelianField& field);

/// Consistency checks: rd vs exact discriminant (1e-9 relative on logs),
/// r1 + 2 r2 = [L:Q], degK | degL. Throws std::domain_error.
void validate(const ExtensionDatum& datum);

/// Unconditional lower bound on the max irreducible degree:
/// r >= (1/log rd_L)(C1 loglog[L:Q]/logloglog[L:Q] - log[K:Q]).
/// Needs [L:Q] > e^e so the iterated logs are positive.
double degree_bound_unconditional(const ExtensionDatum& datum, const BoundConstants& c);

/// GRH-conditional bound: r >= C2 (log[L:Q])^{1/5} / ((log rd_L)^{2/5} [K:Q]^{3/5}).
double degree_bound_grh(const ExtensionDatum& datum, const BoundConstants& c);

/// The abelian warm-up bound: rd_L > ([L:Q]/2)^{1/4}, degree > 2 required.
double abelian_bound(std::uint64_t degL);

/// Exact integer certification of the abelian bound, |Disc|^4 * 2^d > d^d.
/// nullopt when the degree is <= 2 (the bound's hypothesis fails).
std::optional<bool> certify_abelian(const fields::AbelianField& field);
std::optional<bool> certify_abelian_exact(const arith::FactoredInt& disc_abs, std::uint64_t degL);

double poitou_bound(std::uint64_t r1, std::uint64_t r2, bool grh);

struct IdealClassBounds {
    double ideal_bound = 0.0;          // e Y (1 + log Y)^f on ideals of norm < Y
    std::optional<double> class_bound; // e sqrt(D) (1 + log(D)/2)^f on h
};

IdealClassBounds ideal_and_class_bounds(double Y, std::uint64_t f, std::optional<double> disc_abs);

/// Upper bound on the number of characters of conductor norm <= Y over a base
/// field F: e^2 Y^2 sqrt|Disc F| (2 + log(Y^2 |Disc F|))^{2 [F:Q]}.
double character_count_bound(double Y, const arith::FactoredInt& discF_abs, std::uint64_t degF);

/// The unique Y > e^{-1}|Disc F|^{-1/2} at which the character-count bound
/// equals degL/(2 degF), by bisection (the bound is strictly increasing there).
double solve_conductor_threshold(double degL, std::uint64_t degF,
                                 const arith::FactoredInt& discF_abs);

struct SeparationThresholds {
    double X_min = 0.0;           // C16 r^2 log^2 q: prime range that separates L-series
    double count_bound_log = 0.0; // r^3 log^2(q) [K:Q] log C17
};

/// Thresholds behind the count of degree-<= r representations of conductor
/// <= q. Requires the hypothesis log q > r [K:Q].
SeparationThresholds representation_count_thresholds(std::uint64_t r, double logq,
                                                     std::uint64_t degK, const BoundConstants& c);

/// Bound on log N for N linearly disjoint unramified extensions with a common
/// irreducible degree r: C3 r^5 log^2|Disc K| [K:Q].
/// Requires |Disc K| >= e (log^2 degenerates below).
double unramified_count_bound(std::uint64_t r, double discK_abs, std::uint64_t degK,
                              const BoundConstants& c);

struct CirclePackingCheck {
    std::uint64_t greedy_count = 0;
    double bound = 0.0; // 2 pi Y
    bool holds = false;
};

/// Greedily places points on the unit circle at pairwise chord distance
/// >= 1/Y and checks the count against 2 pi Y.
CirclePackingCheck circle_packing_check(double Y);

struct BoundEntry {
    std::string name;
    std::string formula; // what was evaluated, self-describing
    std::map<std::string, double> inputs;
    double value = 0.0;
    bool applicable = false;
    bool vacuous = false;
    std::optional<bool> satisfied;
    bool constant_unspecified = false;
    std::string note;
};

struct BoundReport {
    ExtensionDatum datum;
    BoundConstants constants;
    std::vector<BoundEntry> entries;
};

/// Evaluates every bound the datum supports; per-entry failures become
/// inapplicable entries, never exceptions.
BoundReport make_report(const ExtensionDatum& datum, const BoundConstants& c);

} // namespace rdcert::bounds
