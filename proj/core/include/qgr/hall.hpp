#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgr/module_expr.hpp"

namespace qgr {

// String algebra CQ/I: at most two arrows in and out of each vertex, monomial
// relations forcing unique forward continuations, admissible ideal. Relations
// are oriented paths a_1...a_k with t(a_{i+1}) = s(a_i), stored by arrow
// index in exactly that order.
class StringAlgebra {
 public:
  // admissibility_bound < 0 selects the default 2*|Q_1| + 2.
  static StringAlgebra validate(Quiver quiver, std::vector<std::vector<std::string>> relations,
                                int admissibility_bound = -1);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<std::vector<int>>& relations() const { return relations_; }

 private:
  Quiver quiver_;
  std::vector<std::vector<int>> relations_;
};

// All strings (reduced relation-avoiding walks) with up to max_len arrows, up
// to winding isomorphism, sorted by canonical form.
std::vector<Winding> enumerate_strings(const StringAlgebra& a, int max_len);

// All primitive cyclic strings with up to max_len arrows, up to band
// equivalence (rotation and reversal-with-sign-flip).
std::vector<Winding> enumerate_bands(const StringAlgebra& a, int max_len);

// Indicator 1_{F,B,n}: value 1 on modules isomorphic to the direct sum of the
// listed tree classes and band classes with the listed multiplicities, for
// some choice of band parameters.
class HallFunction {
 public:
  static HallFunction make(Quiver codomain, std::vector<Winding> trees,
                           std::vector<std::pair<Winding, long long>> bands);

  const Quiver& codomain() const { return codomain_; }
  const std::vector<Winding>& trees() const { return trees_; }
  const std::vector<std::pair<Winding, long long>>& bands() const { return bands_; }
  DimVec dimension() const;
  const std::string& key() const { return key_; }  // canonical multiset key

 private:
  Quiver codomain_;
  std::vector<Winding> trees_;                       // sorted by canonical form
  std::vector<std::pair<Winding, long long>> bands_; // sorted by (canonical form, n)
  std::string key_;
};

// All splittings of the tree and band multisets into an ordered pair of
// submultisets, each distinct submultiset choice once.
std::vector<std::pair<HallFunction, HallFunction>> coproduct_splittings(const HallFunction& f);

// 1 iff the summand multisets of m match f up to winding isomorphism (band
// parameters ignored).
int evaluate(const HallFunction& f, const ModuleExpr& m);

// Exact value of (1_f * 1_g)(m) = chi{N <= m : N in f-class, m/N in g-class}.
// Returns 0 on dimension mismatch.
Int product_evaluate(const HallFunction& f, const HallFunction& g, const ModuleExpr& m);

// <delta, d> with delta = (1,...,1) over a quiver of type A~: negative for
// preprojectives, zero for regulars, positive for preinjectives.
long long defect(const Quiver& tilde_a, const DimVec& d);

struct BandPeel {
  bool zero;            // n + n' > m: no such filtration
  long long m_reduced;  // otherwise m - n - n'
};

// Strips equal band classes from both sides of a product against B_*(l, m).
BandPeel band_peel(long long n, long long n_prime, long long m);

// The finite set H_d: every Hall function with total dimension vector d
// assembled from the algebra's strings and bands. max_len must be at least
// |d|, else BoundTooSmall.
std::vector<HallFunction> indicator_dim_sum(const StringAlgebra& a, const DimVec& d, int max_len);

}  // namespace qgr
