#pragma once

#include <json.hpp>

#include "rdcert/abelian_fields.hpp"
#include "rdcert/bounds.hpp"
#include "rdcert/dirichlet.hpp"
#include "rdcert/repr.hpp"

namespace rdcert::jsonio {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const arith::FactoredInt& f);
json to_json(const dirichlet::DirichletCharacter& chi);
json to_json(const fields::AbelianField& field);
json to_json(const repr::CharacterTable& table);
json to_json(const bounds::BoundReport& report);

bounds::BoundConstants constants_from_json(const json& j);
json to_json(const bounds::BoundConstants& c);

} // namespace rdcert::jsonio
