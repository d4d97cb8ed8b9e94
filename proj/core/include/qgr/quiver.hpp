#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgr/common.hpp"

namespace qgr {

struct ArrowSpec {
  std::string id;
  std::string src;
  std::string tgt;
};

// Finite directed multigraph. Vertices and arrows carry opaque string ids;
// after validation both are stored sorted by id, and all index-based views
// refer to that order. Immutable once validated.
class Quiver {
 public:
  struct Arrow {
    std::string id;
    int src;
    int tgt;
  };

  static Quiver validate(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_id(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  int vertex_index(const std::string& id) const;  // -1 if absent
  int arrow_index(const std::string& id) const;
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }
  bool same_as(const Quiver& other) const;  // identical ids and incidence

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
};

// Dimension vector, indexed like the owning quiver's vertex order.
using DimVec = std::vector<long long>;

bool dim_leq(const DimVec& a, const DimVec& b);
DimVec dim_add(const DimVec& a, const DimVec& b);
DimVec dim_sub(const DimVec& a, const DimVec& b);
long long dim_total(const DimVec& a);
bool dim_nonneg(const DimVec& a);

// Cyclic labeling of a quiver of type A~_{l-1}: position p holds vertex
// vertex_at[p]; arrow_at[p] joins positions p and p+1 (mod l); eps[p] = +1
// when the arrow points (p+1) -> p and -1 when it points p -> (p+1), i.e.
// t(s_p^{eps_p}) = p.
struct CycleLabeling {
  std::vector<int> vertex_at;
  std::vector<int> arrow_at;
  std::vector<int> eps;
  int length() const { return static_cast<int>(vertex_at.size()); }
};

struct QuiverClass {
  enum class Kind { Tree, TypeA, TypeATilde, Other };
  Kind kind = Kind::Other;
  int length = 0;  // l for TypeA / TypeATilde
  std::optional<CycleLabeling> cycle;
};

// Total on valid quivers. TypeA is reported for path-shaped trees (Tree is
// derivable). The cyclic labeling is the lexicographically least over all
// rotations and both traversal directions of the (arrow-id, eps) sequence,
// ties broken by vertex ids.
QuiverClass classify_quiver(const Quiver& q);

}  // namespace qgr
