// JSON views of the report and certificate types.
//
// Schemas:
//   ShurReport      {"closed_walk":bool, "forbidden_factor"?:{"factor","position"},
//                    "wxyw"?:{"w","x","y","position"}, "pass":bool}
//   LinkReport      {"frame":bool, "conditions":{"closed_walk",...}, witnesses..., "pass":bool}
//   BuildCertificate{"n", "word", "recipe":{"type", ...}, "level", "circular_square_free"}
// Recipe types: "brute-force" | {"type":"table-entry","u"} | {"type":"composite","v","s"}.
#pragma once

#include <json.hpp>

#include "csf/assemble.hpp"
#include "csf/link.hpp"
#include "csf/shur.hpp"

namespace csf {

nlohmann::json to_json(const ShurReport& r);
nlohmann::json to_json(const LinkReport& r);
nlohmann::json to_json(const BuildCertificate& c);
BuildCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace csf
