#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

#include "qgr/grading.hpp"
#include "qgr/hall.hpp"

// JSON formats (field names are part of the external interface):
//   quiver   {"vertices":["1","2"], "arrows":[{"id":"a","src":"1","tgt":"2"}]}
//   winding  {"domain":<quiver>, "codomain":<quiver>, "vmap":{...}, "amap":{...}}
//   module   {"codomain":<quiver>, "summands":[{"kind":"tree","winding":<winding>}
//             | {"kind":"band","winding":<winding>,"n":2,"lambda":"L1"}]}
//   hall     {"trees":[<winding>...], "bands":[{"winding":<winding>,"n":1}...]}
//   algebra  {"quiver":<quiver>, "relations":[["a","b"],...]}
//   grading  {"vertex_values":{"1":0,...}, "arrow_values":{"a":1,...}}
// Dimension vectors on the CLI are "1=2,2=3"; omitted vertices default to 0.

namespace qgr {

nlohmann::json quiver_to_json(const Quiver& q);
nlohmann::json winding_to_json(const Winding& w);
nlohmann::json module_to_json(const ModuleExpr& m);
nlohmann::json hall_to_json(const HallFunction& f);

Quiver parse_quiver(const nlohmann::json& j);
Winding parse_winding(const nlohmann::json& j);
ModuleExpr parse_module(const nlohmann::json& j);
HallFunction parse_hall(const nlohmann::json& j, const Quiver& codomain);
StringAlgebra parse_string_algebra(const nlohmann::json& j);
Grading parse_grading(const nlohmann::json& j, const Quiver& domain);

DimVec parse_dim_flag(const Quiver& q, const std::string& flag);
std::vector<DimVec> parse_dims_flag(const Quiver& q, const std::string& flag);  // ';'-separated

}  // namespace qgr
