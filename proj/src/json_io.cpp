#include "rdcert/json_io.hpp"

#include <complex>
#include <sstream>

namespace rdcert::jsonio {

namespace {

std::string complex_string(const std::complex<double>& z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

} // namespace

json to_json(const arith::FactoredInt& f) {
    json factors = json::array();
    for (const auto& pp : f.factors()) factors.push_back({pp.prime, pp.exponent});
    return json{{"value", f.value().str()}, {"factors", factors}};
}

json to_json(const dirichlet::DirichletCharacter& chi) {
    return json{{"modulus", chi.modulus()},
                {"exponents", chi.exponents()},
                {"conductor", to_json(chi.conductor())},
                {"order", chi.order()},
                {"parity", chi.is_even() ? "even" : "odd"}};
}

json to_json(const fields::AbelianField& field) {
    return json{{"conductor", field.conductor()},
                {"subgroup", field.subgroup()},
                {"degree", field.degree()},
                {"r1", field.r1()},
                {"r2", field.r2()},
                {"disc", to_json(field.discriminant_abs())},
                {"rd", field.root_discriminant()}};
}

json to_json(const repr::CharacterTable& table) {
    const auto& G = *table.group();
    json classes = json::array();
    for (const auto& c : G.classes()) {
        classes.push_back(
            {{"size", c.size},
             {"element_order", c.element_order},
             {"representative", repr::cycles_string(G.elements()[static_cast<std::size_t>(c.representative)])}});
    }
    json rows = json::array();
    for (int r = 0; r < table.row_count(); ++r) {
        json values = json::array();
        json rendered = json::array();
        for (std::size_t c = 0; c < G.classes().size(); ++c) {
            const auto& v = table.value(r, static_cast<int>(c));
            values.push_back(v.coeffs());
            rendered.push_back(complex_string(v.to_complex()));
        }
        rows.push_back({{"degree", table.degree(r)}, {"values", values}, {"complex", rendered}});
    }
    return json{{"group_key", G.canonical_key()},
                {"order", G.order()},
                {"exponent", G.exponent()},
                {"value_order", table.value_order()},
                {"classes", classes},
                {"irreducibles", rows}};
}

json to_json(const bounds::BoundConstants& c) {
    return json{{"C1", c.C1},     {"C2", c.C2},   {"C3", c.C3},
                {"C19", c.C19},   {"C16", c.C16}, {"C17", c.C17},
                {"log_min_degree_unconditional", c.log_min_degree_unconditional},
                {"paper_unspecified", bounds::BoundConstants::unspecified_names()}};
}

bounds::BoundConstants constants_from_json(const json& j) {
    bounds::BoundConstants c;
    if (j.contains("C1")) c.C1 = j.at("C1").get<double>();
    if (j.contains("C2")) c.C2 = j.at("C2").get<double>();
    if (j.contains("C3")) c.C3 = j.at("C3").get<double>();
    if (j.contains("C19")) c.C19 = j.at("C19").get<double>();
    c.C16 = std::max(16384.0, 100.0 * c.C19 * c.C19);
    if (j.contains("C16")) c.C16 = j.at("C16").get<double>();
    if (j.contains("C17")) c.C17 = j.at("C17").get<double>();
    if (j.contains("log_min_degree_unconditional")) c.log_min_degree_unconditional = j.at("log_min_degree_unconditional").get<double>();
    for (const auto& [key, _] : j.items()) {
        if (key != "C1" && key != "C2" && key != "C3" && key != "C19" && key != "C16" &&
            key != "C17" && key != "log_min_degree_unconditional" && key != "paper_unspecified")
            throw ParseError("constants file: unknown field '" + key + "'");
    }
    return c;
}

namespace {

json datum_to_json(const bounds::ExtensionDatum& d) {
    json j{{"log_degL", d.log_degL}, {"degK", d.degK}};
    if (d.degL_exact) j["degL"] = d.degL_exact->str();
    if (d.has_rd) j["log_rdL"] = d.log_rdL;
    if (d.discL) j["discL"] = to_json(*d.discL);
    if (d.discK) j["discK"] = to_json(*d.discK);
    if (d.r_actual) j["r_actual"] = *d.r_actual;
    if (d.signature) j["signature"] = {d.signature->first, d.signature->second};
    return j;
}

} // namespace

json to_json(const bounds::BoundReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json je{{"name", e.name},
                {"formula", e.formula},
                {"value", e.value},
                {"applicable", e.applicable},
                {"vacuous", e.vacuous},
                {"constant_unspecified", e.constant_unspecified}};
        je["inputs"] = e.inputs;
        if (e.satisfied) je["satisfied"] = *e.satisfied;
        if (!e.note.empty()) je["note"] = e.note;
        entries.push_back(je);
    }
    return json{{"datum", datum_to_json(report.datum)},
                {"constants", to_json(report.constants)},
                {"entries", entries}};
}

} // namespace rdcert::jsonio
