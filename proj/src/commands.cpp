#include "rdcert/commands.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <numbers>
#include <sstream>

#include "rdcert/bounds.hpp"
#include "rdcert/cache.hpp"
#include "rdcert/json_io.hpp"

namespace rdcert::cli {

using jsonio::json;
using jsonio::kSchemaVersion;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::uint64_t parse_u64(const std::string& tok) {
    try {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(tok, &pos);
        if (pos != tok.size()) throw ParseError("trailing characters in '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected a positive integer, got '" + tok + "'");
    }
}

std::int64_t parse_i64(const std::string& tok) {
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw ParseError("trailing characters in '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'");
    }
}

json abelian_rd_entry(const fields::AbelianField& f) {
    json j;
    auto verdict = bounds::certify_abelian(f);
    j["applicable"] = verdict.has_value();
    if (verdict) {
        j["satisfied"] = *verdict;
        j["bound"] = bounds::abelian_bound(f.degree());
        j["rd"] = f.root_discriminant();
    }
    return j;
}

} // namespace

fields::AbelianField parse_field_spec(const std::string& spec, const GlobalOptions& g) {
    auto parts = split(spec, ':');
    if (parts.empty()) throw ParseError("empty field spec");
    const std::string& kind = parts[0];
    if (kind == "cyclotomic") {
        if (parts.size() != 2) throw ParseError("usage: cyclotomic:n");
        return fields::cyclotomic_field(parse_u64(parts[1]), g.modulus_cap);
    }
    if (kind == "subgroup") {
        if (parts.size() != 3) throw ParseError("usage: subgroup:n:g1,g2,...");
        std::uint64_t n = parse_u64(parts[1]);
        std::vector<std::uint64_t> gens;
        if (!parts[2].empty())
            for (const auto& tok : split(parts[2], ',')) gens.push_back(parse_u64(tok));
        return fields::field_from_subgroup(n, gens, g.modulus_cap);
    }
    if (kind == "quadratic") {
        if (parts.size() != 2) throw ParseError("usage: quadratic:D");
        return fields::quadratic_field(parse_i64(parts[1]), g.modulus_cap);
    }
    throw ParseError("unknown field spec '" + kind + "' (use cyclotomic:|subgroup:|quadratic:)");
}

CommandResult cmd_field(const std::string& spec, std::optional<std::uint64_t> zeta_N,
                        const GlobalOptions& g) {
    auto field = parse_field_spec(spec, g);
    json out{{"schema_version", kSchemaVersion}, {"field", jsonio::to_json(field)}};
    json chars = json::array();
    for (const auto& chi : field.characters()) chars.push_back(jsonio::to_json(chi));
    out["characters"] = chars;
    out["abelian_rd_bound"] = abelian_rd_entry(field);

    auto parts = split(spec, ':');
    if (parts[0] == "quadratic") {
        std::int64_t D = parse_i64(parts[1]);
        if (D < 0) {
            std::uint64_t h = fields::class_number_imag_quadratic(D);
            double absD = static_cast<double>(-D);
            double bound = std::numbers::e * std::sqrt(absD) *
                           std::pow(1.0 + 0.5 * std::log(absD), 2.0);
            out["class_number"] = {{"h", h},
                                   {"class_number_bound", bound},
                                   {"margin", bound - static_cast<double>(h)},
                                   {"satisfied", static_cast<double>(h) < bound}};
        }
    }

    if (zeta_N) {
        auto ze = fields::zeta_coefficients_euler(field, *zeta_N, g.coeff_cap);
        auto zs = fields::zeta_coefficients_splitting(field, *zeta_N, g.coeff_cap);
        json first = json::array();
        for (std::uint64_t m = 1; m <= std::min<std::uint64_t>(*zeta_N, 40); ++m)
            first.push_back(ze.a[m].str());
        out["zeta"] = {{"N", *zeta_N},
                       {"euler_equals_splitting", ze.a == zs.a},
                       {"coefficients_head", first}};
        if (ze.a != zs.a) return {out, kExitVerifyFailure};
    }
    return {out, kExitOk};
}

CommandResult cmd_group(const std::string& generators, const GlobalOptions& g) {
    int points = 1;
    auto gens = repr::parse_generators(generators, points);
    auto G = repr::group_from_generators(points, gens, g.group_order_cap);

    TableCache cache(g.cache_path.empty() ? TableCache::default_path() : g.cache_path);
    json table_json;
    if (auto hit = cache.lookup(G->canonical_key())) {
        table_json = *hit;
    } else {
        auto table = repr::character_table(G, g.table_order_cap, g.table_class_cap);
        table_json = jsonio::to_json(*table);
        cache.append(G->canonical_key(), table_json);
    }

    std::uint64_t r = 0;
    for (const auto& row : table_json["irreducibles"]) r = std::max(r, row["degree"].get<std::uint64_t>());

    json out{{"schema_version", kSchemaVersion},
             {"group",
              {{"moved_points", G->moved_points()},
               {"order", G->order()},
               {"exponent", G->exponent()},
               {"key", G->canonical_key()}}},
             {"table", table_json},
             {"max_irr_degree", r}};

    json degrees = json::array();
    for (const auto& row : table_json["irreducibles"]) degrees.push_back(row["degree"]);
    out["degrees"] = degrees;

    if (G->order() <= g.subgroup_cap) {
        std::uint64_t m = repr::min_abelian_subgroup_index(G, g.subgroup_cap);
        std::uint64_t rfact = 1;
        for (std::uint64_t i = 2; i <= r; ++i) rfact *= i;
        out["min_abelian_index"] = m;
        out["isaacs"] = {{"r_le_index", r <= m},
                         {"index_le_r_factorial_sq", m <= rfact * rfact},
                         {"holds", r <= m && m <= rfact * rfact}};
        if (!(r <= m && m <= rfact * rfact)) return {out, kExitVerifyFailure};
    } else {
        out["min_abelian_index"] = nullptr;
    }
    return {out, kExitOk};
}

CommandResult cmd_survey(std::uint64_t max_conductor, const GlobalOptions& g) {
    auto corpus = fields::enumerate_abelian_fields(max_conductor, g.conductor_cap);

    auto row_of = [&](const fields::AbelianField& f) {
        json row{{"conductor", f.conductor()},
                 {"subgroup", f.subgroup()},
                 {"degree", f.degree()},
                 {"rd", f.root_discriminant()}};
        auto verdict = bounds::certify_abelian(f);
        row["abelian_rd_bound"] = {{"applicable", verdict.has_value()}};
        bool ok = true;
        if (verdict) {
            row["abelian_rd_bound"]["satisfied"] = *verdict;
            row["abelian_rd_bound"]["margin"] = f.root_discriminant() - bounds::abelian_bound(f.degree());
            ok = *verdict;
        }
        // ideal-count bound spot check at a small Y
        double Y = 100.0;
        BigInt count = fields::count_ideals(f, Y, g.coeff_cap);
        double bound = std::numbers::e * Y *
                       std::pow(1.0 + std::log(Y), static_cast<double>(f.degree()));
        bool ideal_ok = static_cast<double>(count) <= bound;
        row["ideal_count_spot"] = {{"Y", Y}, {"ideals", count.str()}, {"bound", bound}, {"ok", ideal_ok}};
        return std::make_pair(row, ok && ideal_ok);
    };

    json rows = json::array();
    std::uint64_t violations = 0;
    if (g.jobs > 1) {
        std::vector<std::future<std::pair<json, bool>>> futures;
        futures.reserve(corpus.size());
        for (const auto& f : corpus)
            futures.push_back(std::async(std::launch::async, row_of, std::cref(f)));
        for (auto& fut : futures) {
            auto [row, ok] = fut.get();
            rows.push_back(row);
            if (!ok) ++violations;
        }
    } else {
        for (const auto& f : corpus) {
            auto [row, ok] = row_of(f);
            rows.push_back(row);
            if (!ok) ++violations;
        }
    }

    json out{{"schema_version", kSchemaVersion},
             {"max_conductor", max_conductor},
             {"rows", rows},
             {"summary", {{"fields", corpus.size()}, {"violations", violations}}}};
    return {out, violations == 0 ? kExitOk : kExitVerifyFailure};
}

CommandResult cmd_bounds(const BoundsArgs& args, const GlobalOptions&) {
    bounds::ExtensionDatum d;
    int deg_forms = args.degL.has_value() + args.degL_log.has_value() + args.degL_loglog.has_value();
    if (deg_forms != 1)
        throw ParseError("give exactly one of --degL, --degL-log, --degL-loglog");
    if (args.degL) {
        d = bounds::datum_from_exact_degree(BigInt(*args.degL), args.degK);
    } else if (args.degL_log) {
        d.log_degL = *args.degL_log;
        d.degK = args.degK;
    } else {
        d.log_degL = std::exp(*args.degL_loglog);
        d.degK = args.degK;
    }
    if (args.rdL.has_value() + args.rdL_log.has_value() > 1)
        throw ParseError("give at most one of --rdL, --rdL-log");
    if (args.rdL) {
        if (*args.rdL <= 0) throw ParseError("--rdL must be positive");
        d.has_rd = true;
        d.log_rdL = std::log(*args.rdL);
    } else if (args.rdL_log) {
        d.has_rd = true;
        d.log_rdL = *args.rdL_log;
    }
    if (args.discL) {
        d.discL = arith::factor(*args.discL);
        if (!d.has_rd && d.degL_exact) {
            d.has_rd = true;
            d.log_rdL = d.discL->log_value() / std::exp(d.log_degL);
        }
    }
    if (args.discK) d.discK = arith::factor(*args.discK);
    if (args.r_actual) d.r_actual = *args.r_actual;
    if (args.r1 || args.r2) d.signature = {args.r1.value_or(0), args.r2.value_or(0)};

    bounds::BoundConstants c;
    if (!args.constants_file.empty()) {
        std::ifstream in(args.constants_file);
        if (!in) throw ParseError("cannot open constants file " + args.constants_file);
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded()) throw ParseError("constants file is not valid JSON");
        c = jsonio::constants_from_json(j);
    }

    auto report = bounds::make_report(d, c);
    json out{{"schema_version", kSchemaVersion}, {"report", jsonio::to_json(report)}};
    return {out, kExitOk};
}

CommandResult cmd_verify(const std::string& suite, const verify::SuiteOptions& opt,
                         const GlobalOptions&) {
    auto results = verify::run_suite(suite, opt);
    json checks = json::array();
    std::uint64_t passed = 0, failed = 0;
    for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        (r.pass ? passed : failed) += 1;
    }
    json out{{"schema_version", kSchemaVersion},
             {"suite", suite},
             {"checks", checks},
             {"summary", {{"passed", passed}, {"failed", failed}}}};
    return {out, failed == 0 ? kExitOk : kExitVerifyFailure};
}

CommandResult cmd_cache_stats(const GlobalOptions& g) {
    TableCache cache(g.cache_path.empty() ? TableCache::default_path() : g.cache_path);
    json out{{"schema_version", kSchemaVersion}, {"cache", cache.stats()}};
    return {out, kExitOk};
}

CommandResult cmd_cache_clear(const GlobalOptions& g) {
    TableCache cache(g.cache_path.empty() ? TableCache::default_path() : g.cache_path);
    cache.clear();
    json out{{"schema_version", kSchemaVersion}, {"cache", {{"path", cache.path()}, {"cleared", true}}}};
    return {out, kExitOk};
}

} // namespace rdcert::cli
