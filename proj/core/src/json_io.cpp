#include "qgr/json_io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace qgr {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw Error("ParseError", std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

json quiver_to_json(const Quiver& q) {
  json vertices = json::array();
  for (int v = 0; v < q.num_vertices(); ++v) vertices.push_back(q.vertex_id(v));
  json arrows = json::array();
  for (int a = 0; a < q.num_arrows(); ++a)
    arrows.push_back({{"id", q.arrow(a).id},
                      {"src", q.vertex_id(q.arrow(a).src)},
                      {"tgt", q.vertex_id(q.arrow(a).tgt)}});
  return {{"vertices", vertices}, {"arrows", arrows}};
}

json winding_to_json(const Winding& w) {
  json vmap = json::object(), amap = json::object();
  for (int v = 0; v < w.domain().num_vertices(); ++v)
    vmap[w.domain().vertex_id(v)] = w.codomain().vertex_id(w.vertex_image(v));
  for (int a = 0; a < w.domain().num_arrows(); ++a)
    amap[w.domain().arrow(a).id] = w.codomain().arrow(w.arrow_image(a)).id;
  return {{"domain", quiver_to_json(w.domain())},
          {"codomain", quiver_to_json(w.codomain())},
          {"vmap", vmap},
          {"amap", amap}};
}

json module_to_json(const ModuleExpr& m) {
  json summands = json::array();
  for (const auto& s : m.summands()) {
    if (std::holds_alternative<TreeTerm>(s)) {
      summands.push_back({{"kind", "tree"}, {"winding", winding_to_json(std::get<TreeTerm>(s).winding)}});
    } else {
      const BandTerm& b = std::get<BandTerm>(s);
      summands.push_back({{"kind", "band"},
                          {"winding", winding_to_json(b.winding)},
                          {"n", b.n},
                          {"lambda", b.lambda}});
    }
  }
  return {{"codomain", quiver_to_json(m.codomain())}, {"summands", summands}};
}

json hall_to_json(const HallFunction& f) {
  json trees = json::array(), bands = json::array();
  for (const auto& t : f.trees()) trees.push_back(winding_to_json(t));
  for (const auto& [b, n] : f.bands())
    bands.push_back({{"winding", winding_to_json(b)}, {"n", n}});
  return {{"trees", trees}, {"bands", bands}};
}

Quiver parse_quiver(const json& j) {
  if (!j.is_object()) throw Error("ParseError", "quiver must be an object");
  std::vector<std::string> vertices;
  for (const auto& v : field(j, "vertices")) {
    if (!v.is_string()) throw Error("ParseError", "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<ArrowSpec> arrows;
  for (const auto& a : field(j, "arrows"))
    arrows.push_back({field(a, "id").get<std::string>(), field(a, "src").get<std::string>(),
                      field(a, "tgt").get<std::string>()});
  return Quiver::validate(std::move(vertices), std::move(arrows));
}

Winding parse_winding(const json& j) {
  Quiver domain = parse_quiver(field(j, "domain"));
  Quiver codomain = parse_quiver(field(j, "codomain"));
  std::map<std::string, std::string> vmap, amap;
  for (const auto& [k, v] : field(j, "vmap").items()) vmap[k] = v.get<std::string>();
  for (const auto& [k, v] : field(j, "amap").items()) amap[k] = v.get<std::string>();
  return Winding::validate(std::move(domain), std::move(codomain), vmap, amap);
}

ModuleExpr parse_module(const json& j) {
  Quiver codomain = parse_quiver(field(j, "codomain"));
  std::vector<Summand> summands;
  int fresh = 0;
  for (const auto& s : field(j, "summands")) {
    std::string kind = field(s, "kind").get<std::string>();
    Winding w = parse_winding(field(s, "winding"));
    if (kind == "tree") {
      summands.push_back(TreeTerm{std::move(w)});
    } else if (kind == "band") {
      long long n = field(s, "n").get<long long>();
      // Omitted labels are distinct by default; equal labels are an explicit
      // assertion of equal band parameters.
      std::string lambda = s.contains("lambda") ? s["lambda"].get<std::string>()
                                                : "_fresh" + std::to_string(++fresh);
      summands.push_back(BandTerm{std::move(w), n, std::move(lambda)});
    } else {
      throw Error("ParseError", "summand kind must be 'tree' or 'band'");
    }
  }
  return ModuleExpr::validate(std::move(codomain), std::move(summands));
}

HallFunction parse_hall(const json& j, const Quiver& codomain) {
  std::vector<Winding> trees;
  std::vector<std::pair<Winding, long long>> bands;
  for (const auto& t : field(j, "trees")) trees.push_back(parse_winding(t));
  for (const auto& b : field(j, "bands"))
    bands.emplace_back(parse_winding(field(b, "winding")), field(b, "n").get<long long>());
  return HallFunction::make(codomain, std::move(trees), std::move(bands));
}

StringAlgebra parse_string_algebra(const json& j) {
  Quiver q = parse_quiver(field(j, "quiver"));
  std::vector<std::vector<std::string>> relations;
  for (const auto& rel : field(j, "relations")) {
    std::vector<std::string> path;
    for (const auto& a : rel) path.push_back(a.get<std::string>());
    relations.push_back(std::move(path));
  }
  return StringAlgebra::validate(std::move(q), std::move(relations));
}

Grading parse_grading(const json& j, const Quiver& domain) {
  Grading g;
  g.vertex_values.assign(domain.num_vertices(), 0);
  for (const auto& [k, v] : field(j, "vertex_values").items()) {
    int idx = domain.vertex_index(k);
    if (idx < 0) throw Error("ParseError", "grading names unknown vertex '" + k + "'");
    g.vertex_values[idx] = v.get<long long>();
  }
  if (j.contains("arrow_values")) {
    std::vector<long long> av(domain.num_arrows(), 0);
    for (const auto& [k, v] : j["arrow_values"].items()) {
      int idx = domain.arrow_index(k);
      if (idx < 0) throw Error("ParseError", "grading names unknown arrow '" + k + "'");
      av[idx] = v.get<long long>();
    }
    g.arrow_values = std::move(av);
  }
  return g;
}

DimVec parse_dim_flag(const Quiver& q, const std::string& flag) {
  DimVec d(q.num_vertices(), 0);
  std::stringstream ss(flag);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error("ParseError", "dimension entries look like vertex=value: '" + item + "'");
    std::string name = item.substr(0, eq);
    int idx = q.vertex_index(name);
    if (idx < 0) throw Error("ParseError", "unknown vertex '" + name + "' in dimension vector");
    try {
      d[idx] = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("ParseError", "bad dimension value in '" + item + "'");
    }
  }
  return d;
}

std::vector<DimVec> parse_dims_flag(const Quiver& q, const std::string& flag) {
  std::vector<DimVec> out;
  std::stringstream ss(flag);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_dim_flag(q, item));
  if (out.empty()) throw Error("ParseError", "flag dimension list is empty");
  return out;
}

}  // namespace qgr
