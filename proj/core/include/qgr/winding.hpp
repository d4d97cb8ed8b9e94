#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgr/quiver.hpp"

namespace qgr {

// Quiver morphism S -> Q subject to the two no-folding conditions: distinct
// arrows with a common source (resp. target) have distinct images.
class Winding {
 public:
  static Winding validate(Quiver domain, Quiver codomain,
                          const std::map<std::string, std::string>& vmap,
                          const std::map<std::string, std::string>& amap);
  static Winding validate_indexed(Quiver domain, Quiver codomain,
                                  std::vector<int> vmap, std::vector<int> amap);

  const Quiver& domain() const { return domain_; }
  const Quiver& codomain() const { return codomain_; }
  int vertex_image(int sv) const { return vmap_[sv]; }
  int arrow_image(int sa) const { return amap_[sa]; }
  bool vertex_injective() const;

 private:
  Quiver domain_, codomain_;
  std::vector<int> vmap_, amap_;
};

// Identity winding on q.
Winding identity_winding(const Quiver& q);

// Accepts iff the domain is of type A~_{l-1} and no rotation period r < l
// matches both arrow images and signs; the least witness r is reported
// otherwise. Acceptance guarantees indecomposability of the band modules.
// Returns the canonical cyclic labeling of the domain.
CycleLabeling validate_band(const Winding& b);

DimVec pushforward_dim(const Winding& w, const DimVec& t);

// All t with 0 <= t <= bound and pushforward_dim(w, t) = d, in lexicographic
// order of the canonical (id-sorted) vertex ordering.
std::vector<DimVec> fiber_dims(const Winding& w, const DimVec& d, const DimVec& bound);

// Relabeling-invariant encoding. Tree domains use a rooted canonical form at
// the tree center; A~ domains take the minimum over all rotations and both
// traversal directions (reversal flips signs). Throws MixedKinds for domains
// that are neither.
std::string winding_canonical_form(const Winding& w);
bool windings_isomorphic(const Winding& a, const Winding& b);

// Winding from a reduced walk in q: letters are (arrow id, forward?) and the
// domain is a fresh path quiver w0 -e1- w1 ... . An empty walk needs the
// start vertex. Reducedness of the walk is exactly the no-fold condition.
Winding string_from_walk(const Quiver& q, const std::vector<std::pair<std::string, bool>>& letters,
                         const std::string& start_vertex = "");

// Same for a cyclically reduced closed walk; the domain is a fresh cycle.
Winding band_from_walk(const Quiver& q, const std::vector<std::pair<std::string, bool>>& letters);

// Restriction of w to a successor-stable collection of domain vertices and
// arrows; domain ids are kept.
Winding restrict_winding(const Winding& w, const std::vector<int>& vertices,
                         const std::vector<int>& arrows);

}  // namespace qgr
