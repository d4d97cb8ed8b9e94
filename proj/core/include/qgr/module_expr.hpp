#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qgr/winding.hpp"

namespace qgr {

struct TreeTerm {
  Winding winding;  // tree domain
};

struct BandTerm {
  Winding winding;     // primitive A~ domain
  long long n;         // multiplicity, n >= 1
  std::string lambda;  // opaque symbolic parameter, compared only for equality
};

using Summand = std::variant<TreeTerm, BandTerm>;

// Formal direct sum of tree and band modules over a common codomain.
class ModuleExpr {
 public:
  static ModuleExpr validate(Quiver codomain, std::vector<Summand> summands);

  const Quiver& codomain() const { return codomain_; }
  const std::vector<Summand>& summands() const { return summands_; }
  DimVec dimension() const;

 private:
  Quiver codomain_;
  std::vector<Summand> summands_;
};

DimVec summand_dimension(const Summand& s);

// Canonical key of a summand; lambda labels are not part of it (all computed
// quantities are independent of them).
std::string summand_canonical(const Summand& s);

}  // namespace qgr
