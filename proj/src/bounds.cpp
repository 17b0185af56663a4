#include "rdcert/bounds.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace rdcert::bounds {

using arith::FactoredInt;

const std::vector<std::string>& BoundConstants::unspecified_names() {
    static const std::vector<std::string> names{"C2", "C3", "C17", "C19"};
    return names;
}

namespace {

double log_big(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log of a nonpositive integer");
    unsigned bits = boost::multiprecision::msb(x);
    if (bits <= 900) return std::log(x.convert_to<double>());
    BigInt shifted = x >> (bits - 52);
    return std::log(shifted.convert_to<double>()) + static_cast<double>(bits - 52) * std::numbers::ln2;
}

} // namespace

ExtensionDatum datum_from_exact_degree(const BigInt& degL, std::uint64_t degK) {
    if (degL < 1) throw std::domain_error("datum: [L:Q] must be positive");
    ExtensionDatum d;
    d.degL_exact = degL;
    d.log_degL = log_big(degL);
    d.degK = degK;
    return d;
}

ExtensionDatum datum_from_field(const fields::AbelianField& field) {
    ExtensionDatum d = datum_from_exact_degree(BigInt(field.degree()), 1);
    d.discL = field.discriminant_abs();
    d.has_rd = true;
    d.log_rdL = field.discriminant_abs().log_value() / static_cast<double>(field.degree());
    d.r_actual = 1; // abelian: every irreducible is one-dimensional
    d.signature = {field.r1(), field.r2()};
    return d;
}

void validate(const ExtensionDatum& d) {
    if (d.degK < 1) throw std::domain_error("datum: [K:Q] must be positive");
    if (d.degL_exact && *d.degL_exact < 1) throw std::domain_error("datum: [L:Q] must be positive");
    if (d.degL_exact && *d.degL_exact % BigInt(d.degK) != 0)
        throw std::domain_error("datum: [K:Q] must divide [L:Q]");
    if (d.discL && d.has_rd) {
        double deg = std::exp(d.log_degL);
        if (std::isfinite(deg)) {
            double log_disc = d.discL->log_value();
            double implied = d.log_rdL * deg;
            double scale = std::max(1.0, std::abs(log_disc));
            if (std::abs(log_disc - implied) > 1e-9 * scale)
                throw std::domain_error("datum: rd_L inconsistent with |Disc(L)|");
        }
    }
    if (d.signature && d.degL_exact) {
        BigInt n = BigInt(d.signature->first) + 2 * BigInt(d.signature->second);
        if (n != *d.degL_exact) throw std::domain_error("datum: r1 + 2 r2 != [L:Q]");
    }
}

double degree_bound_unconditional(const ExtensionDatum& d, const BoundConstants& c) {
    if (!d.has_rd || d.log_rdL <= 0)
        throw std::domain_error("degree_bound_unconditional: needs rd_L > 1");
    if (d.log_degL <= std::numbers::e)
        throw std::domain_error("degree_bound_unconditional: [L:Q] <= e^e, iterated logs undefined");
    double loglog = std::log(d.log_degL);
    double logloglog = std::log(loglog);
    if (logloglog <= 0)
        throw std::domain_error("degree_bound_unconditional: [L:Q] <= e^e, iterated logs undefined");
    return (c.C1 * loglog / logloglog - std::log(static_cast<double>(d.degK))) / d.log_rdL;
}

double degree_bound_grh(const ExtensionDatum& d, const BoundConstants& c) {
    if (!d.has_rd || d.log_rdL <= 0) throw std::domain_error("degree_bound_grh: needs rd_L > 1");
    if (d.log_degL < std::log(3.0)) throw std::domain_error("degree_bound_grh: needs [L:Q] >= 3");
    return c.C2 * std::pow(d.log_degL, 0.2) /
           (std::pow(d.log_rdL, 0.4) * std::pow(static_cast<double>(d.degK), 0.6));
}

double abelian_bound(std::uint64_t degL) {
    if (degL <= 2) throw std::domain_error("abelian_bound: degree must exceed 2");
    return std::pow(static_cast<double>(degL) / 2.0, 0.25);
}

std::optional<bool> certify_abelian_exact(const FactoredInt& disc_abs, std::uint64_t degL) {
    if (degL <= 2) return std::nullopt;
    // rd_L > (d/2)^{1/4}  <=>  |Disc|^4 > (d/2)^d  <=>  |Disc|^4 2^d > d^d
    BigInt lhs = disc_abs.value();
    lhs = lhs * lhs;
    lhs = lhs * lhs;
    lhs <<= degL;
    BigInt rhs = 1;
    BigInt base = degL;
    for (std::uint64_t i = 0; i < degL; ++i) rhs *= base;
    return lhs > rhs;
}

std::optional<bool> certify_abelian(const fields::AbelianField& field) {
    return certify_abelian_exact(field.discriminant_abs(), field.degree());
}

double poitou_bound(std::uint64_t r1, std::uint64_t r2, bool grh) {
    std::uint64_t n = r1 + 2 * r2;
    if (n == 0) throw std::domain_error("poitou_bound: r1 + 2 r2 must be positive");
    double a = grh ? kPoitouRealGRH : kPoitouReal;
    double b = grh ? kPoitouComplexGRH : kPoitouComplex;
    return std::pow(a, static_cast<double>(r1) / static_cast<double>(n)) *
           std::pow(b, 2.0 * static_cast<double>(r2) / static_cast<double>(n));
}

IdealClassBounds ideal_and_class_bounds(double Y, std::uint64_t f, std::optional<double> disc_abs) {
    if (Y < 1.0) throw std::domain_error("ideal_and_class_bounds: Y must be >= 1");
    if (f < 1) throw std::domain_error("ideal_and_class_bounds: degree must be >= 1");
    IdealClassBounds b;
    b.ideal_bound = std::numbers::e * Y * std::pow(1.0 + std::log(Y), static_cast<double>(f));
    if (disc_abs) {
        if (*disc_abs < 1.0) throw std::domain_error("ideal_and_class_bounds: |Disc| must be >= 1");
        b.class_bound = std::numbers::e * std::sqrt(*disc_abs) *
                        std::pow(1.0 + 0.5 * std::log(*disc_abs), static_cast<double>(f));
    }
    return b;
}

namespace {

double character_count_rhs(double Y, double disc, std::uint64_t degF) {
    double e2 = std::numbers::e * std::numbers::e;
    return e2 * Y * Y * std::sqrt(disc) *
           std::pow(2.0 + std::log(Y * Y * disc), 2.0 * static_cast<double>(degF));
}

} // namespace

double character_count_bound(double Y, const FactoredInt& discF_abs, std::uint64_t degF) {
    if (Y < 1.0) throw std::domain_error("character_count_bound: Y must be >= 1");
    return character_count_rhs(Y, std::exp(discF_abs.log_value()), degF);
}

double solve_conductor_threshold(double degL, std::uint64_t degF, const FactoredInt& discF_abs) {
    if (!(degL > 0) || degF < 1)
        throw std::domain_error("solve_conductor_threshold: degrees must be positive");
    double disc = std::exp(discF_abs.log_value());
    double target = degL / (2.0 * static_cast<double>(degF));
    if (!(target > 0) || !std::isfinite(target))
        throw std::domain_error(
            "solve_conductor_threshold: no admissible solution; the count bound starts at 0");
    double lo = std::exp(-1.0) / std::sqrt(disc); // the count bound vanishes here
    double hi = std::max(1.0, 2.0 * lo);
    while (character_count_rhs(hi, disc, degF) < target) {
        hi *= 2.0;
        if (!std::isfinite(hi))
            throw std::domain_error("solve_conductor_threshold: target out of double range");
    }
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-15 * hi; ++iter) {
        double mid = 0.5 * (lo + hi);
        (character_count_rhs(mid, disc, degF) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

SeparationThresholds representation_count_thresholds(std::uint64_t r, double logq,
                                                     std::uint64_t degK, const BoundConstants& c) {
    if (r < 1) throw std::domain_error("representation_count_thresholds: r must be >= 1");
    if (!(logq > static_cast<double>(r) * static_cast<double>(degK)))
        throw std::domain_error(
            "representation_count_thresholds: hypothesis log q > r [K:Q] fails");
    SeparationThresholds t;
    double r_d = static_cast<double>(r);
    t.X_min = c.C16 * r_d * r_d * logq * logq;
    t.count_bound_log = r_d * r_d * r_d * logq * logq * static_cast<double>(degK) * std::log(c.C17);
    return t;
}

double unramified_count_bound(std::uint64_t r, double discK_abs, std::uint64_t degK,
                              const BoundConstants& c) {
    if (r < 1) throw std::domain_error("unramified_count_bound: r must be >= 1");
    if (discK_abs < std::numbers::e)
        throw std::domain_error("unramified_count_bound: |Disc K| < 3 makes log^2 degenerate");
    double logd = std::log(discK_abs);
    return c.C3 * std::pow(static_cast<double>(r), 5.0) * logd * logd * static_cast<double>(degK);
}

CirclePackingCheck circle_packing_check(double Y) {
    if (Y < 1.0) throw std::domain_error("circle_packing_check: Y must be >= 1");
    CirclePackingCheck r;
    // chord >= 1/Y forces an angular gap of 2 asin(1/(2Y))
    double theta = 2.0 * std::asin(1.0 / (2.0 * Y));
    auto count = static_cast<std::uint64_t>(std::floor(2.0 * std::numbers::pi / theta));
    // admit the exact boundary fit (regular hexagon at Y = 1) lost to rounding
    while (static_cast<double>(count + 1) * theta <= 2.0 * std::numbers::pi * (1.0 + 1e-12)) ++count;
    r.greedy_count = count;
    r.bound = 2.0 * std::numbers::pi * Y;
    r.holds = static_cast<double>(r.greedy_count) <= r.bound;
    return r;
}

namespace {

BoundEntry entry_or_note(const std::string& name, const std::string& formula,
                         const std::function<BoundEntry()>& eval, const std::string& missing,
                         bool have_inputs) {
    BoundEntry e;
    e.name = name;
    e.formula = formula;
    if (!have_inputs) {
        e.note = missing;
        return e;
    }
    try {
        e = eval();
        e.name = name;
        e.formula = formula;
        if (!std::isfinite(e.value)) {
            e = BoundEntry{};
            e.name = name;
            e.formula = formula;
            e.note = "value not finite for these inputs";
        }
    } catch (const std::exception& ex) {
        e = BoundEntry{};
        e.name = name;
        e.formula = formula;
        e.note = ex.what();
    }
    return e;
}

} // namespace

BoundReport make_report(const ExtensionDatum& d, const BoundConstants& c) {
    validate(d);
    BoundReport report{d, c, {}};

    report.entries.push_back(entry_or_note(
        "degree_bound_unconditional",
        "r >= (C1 loglog(degL)/logloglog(degL) - log(degK)) / log(rdL)",
        [&] {
            BoundEntry e;
            e.value = degree_bound_unconditional(d, c);
            e.inputs = {{"loglog_degL", std::log(d.log_degL)},
                        {"degK", static_cast<double>(d.degK)},
                        {"log_rdL", d.log_rdL}};
            e.applicable = d.log_degL >= c.log_min_degree_unconditional;
            if (!e.applicable) e.note = "[L:Q] below the e^{e^8} floor for C1 = 1/16";
            e.vacuous = e.value <= 1.0;
            if (e.applicable && d.r_actual)
                e.satisfied = static_cast<double>(*d.r_actual) >= e.value;
            return e;
        },
        "needs rd_L and large [L:Q]", d.has_rd));

    report.entries.push_back(entry_or_note(
        "degree_bound_grh",
        "r >= C2 log(degL)^{1/5} / (log(rdL)^{2/5} degK^{3/5})",
        [&] {
            BoundEntry e;
            e.value = degree_bound_grh(d, c);
            e.inputs = {{"log_degL", d.log_degL},
                        {"degK", static_cast<double>(d.degK)},
                        {"log_rdL", d.log_rdL}};
            e.applicable = true;
            e.constant_unspecified = true;
            e.vacuous = e.value <= 1.0;
            if (d.r_actual) e.satisfied = static_cast<double>(*d.r_actual) >= e.value;
            return e;
        },
        "needs rd_L", d.has_rd));

    report.entries.push_back(entry_or_note(
        "abelian_rd_bound",
        "rd_L > (degL/2)^{1/4} for abelian L of degree > 2",
        [&] {
            BoundEntry e;
            std::uint64_t deg = static_cast<std::uint64_t>(*d.degL_exact);
            e.value = abelian_bound(deg);
            e.inputs = {{"degL", static_cast<double>(deg)}};
            e.applicable = true;
            e.vacuous = e.value <= 1.0;
            if (d.discL) {
                e.satisfied = certify_abelian_exact(*d.discL, deg).value();
            } else if (d.has_rd) {
                e.satisfied = std::exp(d.log_rdL) > e.value;
            }
            return e;
        },
        "needs exact [L:Q] > 2",
        d.degL_exact && *d.degL_exact > 2 && *d.degL_exact < (BigInt(1) << 40)));

    for (bool grh : {false, true}) {
        report.entries.push_back(entry_or_note(
            grh ? "poitou_grh" : "poitou",
            "rd_K >= a^{r1/n} b^{2 r2/n}, main term",
            [&] {
                BoundEntry e;
                e.value = poitou_bound(d.signature->first, d.signature->second, grh);
                e.inputs = {{"r1", static_cast<double>(d.signature->first)},
                            {"r2", static_cast<double>(d.signature->second)}};
                e.applicable = true;
                e.vacuous = false;
                return e;
            },
            "needs the signature (r1, r2)", d.signature.has_value()));
    }

    report.entries.push_back(entry_or_note(
        "unramified_count",
        "log(N) <= C3 r^5 log^2|Disc K| degK",
        [&] {
            BoundEntry e;
            std::uint64_t r = d.r_actual.value_or(1);
            double disc = std::exp(d.discK->log_value());
            e.value = unramified_count_bound(r, disc, d.degK, c);
            e.inputs = {{"r", static_cast<double>(r)},
                        {"log_discK", d.discK->log_value()},
                        {"degK", static_cast<double>(d.degK)}};
            e.applicable = true;
            e.constant_unspecified = true;
            e.vacuous = false;
            return e;
        },
        "needs |Disc(K)|", d.discK.has_value()));

    report.entries.push_back(entry_or_note(
        "conductor_threshold",
        "degL/(2 degF) = e^2 Y^2 sqrt|Disc F| (2 + log(Y^2 |Disc F|))^{2 degF}, solved for Y",
        [&] {
            BoundEntry e;
            e.value = solve_conductor_threshold(std::exp(d.log_degL), d.degK, d.discK.value());
            e.inputs = {{"degL", std::exp(d.log_degL)},
                        {"degF", static_cast<double>(d.degK)},
                        {"log_discF", d.discK->log_value()}};
            e.applicable = true;
            e.vacuous = false;
            return e;
        },
        "needs |Disc(K)| and a double-range [L:Q]",
        d.discK.has_value() && d.log_degL < 700.0));

    return report;
}

} // namespace rdcert::bounds
