#include "qgr/module_expr.hpp"

namespace qgr {

ModuleExpr ModuleExpr::validate(Quiver codomain, std::vector<Summand> summands) {
  for (const auto& s : summands) {
    if (std::holds_alternative<TreeTerm>(s)) {
      const Winding& w = std::get<TreeTerm>(s).winding;
      if (!w.codomain().same_as(codomain))
        throw Error("UnsupportedModule", "summand codomain differs from the module codomain");
      QuiverClass cls = classify_quiver(w.domain());
      if (cls.kind != QuiverClass::Kind::Tree && cls.kind != QuiverClass::Kind::TypeA)
        throw Error("UnsupportedModule", "tree summand domain is not a tree");
    } else {
      const BandTerm& b = std::get<BandTerm>(s);
      if (!b.winding.codomain().same_as(codomain))
        throw Error("UnsupportedModule", "summand codomain differs from the module codomain");
      if (b.n < 1) throw Error("UnsupportedModule", "band multiplicity must be positive");
      validate_band(b.winding);  // primitivity
    }
  }
  ModuleExpr m;
  m.codomain_ = std::move(codomain);
  m.summands_ = std::move(summands);
  return m;
}

DimVec summand_dimension(const Summand& s) {
  if (std::holds_alternative<TreeTerm>(s)) {
    const Winding& w = std::get<TreeTerm>(s).winding;
    return pushforward_dim(w, DimVec(w.domain().num_vertices(), 1));
  }
  const BandTerm& b = std::get<BandTerm>(s);
  return pushforward_dim(b.winding, DimVec(b.winding.domain().num_vertices(), b.n));
}

DimVec ModuleExpr::dimension() const {
  DimVec d(codomain_.num_vertices(), 0);
  for (const auto& s : summands_) d = dim_add(d, summand_dimension(s));
  return d;
}

std::string summand_canonical(const Summand& s) {
  if (std::holds_alternative<TreeTerm>(s))
    return winding_canonical_form(std::get<TreeTerm>(s).winding);
  const BandTerm& b = std::get<BandTerm>(s);
  return winding_canonical_form(b.winding) + "#n=" + std::to_string(b.n);
}

}  // namespace qgr
