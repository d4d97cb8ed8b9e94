#pragma once

// Independent brute-force oracles for the test suites. These deliberately
// avoid the library's pruned enumeration paths: plain bitmask loops over all
// vertex subsets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qgr/winding.hpp"

namespace brute {

using qgr::DimVec;
using qgr::Int;
using qgr::Winding;

inline bool mask_closed(const Winding& w, std::uint32_t mask) {
  const auto& s = w.domain();
  for (int a = 0; a < s.num_arrows(); ++a)
    if ((mask >> s.arrow(a).src) & 1)
      if (!((mask >> s.arrow(a).tgt) & 1)) return false;
  return true;
}

inline DimVec mask_dim(const Winding& w, std::uint32_t mask) {
  DimVec d(w.codomain().num_vertices(), 0);
  for (int v = 0; v < w.domain().num_vertices(); ++v)
    if ((mask >> v) & 1) d[w.vertex_image(v)] += 1;
  return d;
}

inline std::vector<std::uint32_t> closed_masks(const Winding& w) {
  std::vector<std::uint32_t> out;
  int nv = w.domain().num_vertices();
  for (std::uint32_t mask = 0; mask < (1u << nv); ++mask)
    if (mask_closed(w, mask)) out.push_back(mask);
  return out;
}

inline Int subset_count(const Winding& w, const DimVec& d) {
  Int count = 0;
  for (std::uint32_t mask : closed_masks(w))
    if (mask_dim(w, mask) == d) count += 1;
  return count;
}

// Chains of successor-closed subsets with prescribed pushforward dimensions.
inline Int chain_count(const Winding& w, const std::vector<DimVec>& dims) {
  std::vector<std::uint32_t> closed = closed_masks(w);
  Int count = 0;
  std::vector<std::uint32_t> chain(dims.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == dims.size()) {
      count += 1;
      return;
    }
    for (std::uint32_t m : closed) {
      if (i > 0 && (chain[i - 1] & ~m) != 0) continue;
      if (mask_dim(w, m) != dims[i]) continue;
      chain[i] = m;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// Connected components of the induced structure on a closed mask (sub side:
// every arrow out of an included vertex) or on its complement (quotient side:
// arrows with both endpoints excluded), as restricted windings.
inline std::vector<Winding> mask_components(const Winding& w, std::uint32_t mask, bool sub_side) {
  const auto& s = w.domain();
  std::uint32_t inside = sub_side ? mask : ~mask;
  std::vector<int> arrows;
  for (int a = 0; a < s.num_arrows(); ++a) {
    bool src_in = (inside >> s.arrow(a).src) & 1;
    bool tgt_in = (inside >> s.arrow(a).tgt) & 1;
    if (sub_side ? src_in : (src_in && tgt_in)) arrows.push_back(a);
  }
  int nv = s.num_vertices();
  std::vector<int> comp(nv, -1);
  int ncomp = 0;
  for (int v = 0; v < nv; ++v) {
    if (!((inside >> v) & 1) || comp[v] >= 0) continue;
    comp[v] = ncomp;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a : arrows) {
        int x = s.arrow(a).src, y = s.arrow(a).tgt;
        if (x == u && comp[y] < 0) comp[y] = ncomp, stack.push_back(y);
        if (y == u && comp[x] < 0) comp[x] = ncomp, stack.push_back(x);
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> cv(ncomp), ca(ncomp);
  for (int v = 0; v < nv; ++v)
    if ((inside >> v) & 1) cv[comp[v]].push_back(v);
  for (int a : arrows) ca[comp[s.arrow(a).src]].push_back(a);
  std::vector<Winding> out;
  for (int c = 0; c < ncomp; ++c) out.push_back(qgr::restrict_winding(w, cv[c], ca[c]));
  return out;
}

inline std::vector<std::string> mask_component_classes(const Winding& w, std::uint32_t mask,
                                                       bool sub_side) {
  std::vector<std::string> out;
  for (const auto& c : mask_components(w, mask, sub_side))
    out.push_back(qgr::winding_canonical_form(c));
  std::sort(out.begin(), out.end());
  return out;
}

// Straight-loop evaluation of (1_f * 1_g) on an indecomposable tree module.
inline Int naive_hall_tree(const Winding& w, std::vector<std::string> want_sub,
                           std::vector<std::string> want_quot) {
  std::sort(want_sub.begin(), want_sub.end());
  std::sort(want_quot.begin(), want_quot.end());
  Int count = 0;
  for (std::uint32_t mask : closed_masks(w))
    if (mask_component_classes(w, mask, true) == want_sub &&
        mask_component_classes(w, mask, false) == want_quot)
      count += 1;
  return count;
}

// Disjoint union of two windings over a common codomain, with prefixed ids.
inline Winding disjoint_union(const Winding& a, const Winding& b) {
  std::vector<std::string> vids;
  std::vector<qgr::ArrowSpec> arrows;
  std::map<std::string, std::string> vmap, amap;
  auto add = [&](const Winding& w, const std::string& prefix) {
    const auto& s = w.domain();
    for (int v = 0; v < s.num_vertices(); ++v) {
      vids.push_back(prefix + s.vertex_id(v));
      vmap[vids.back()] = w.codomain().vertex_id(w.vertex_image(v));
    }
    for (int x = 0; x < s.num_arrows(); ++x) {
      arrows.push_back({prefix + s.arrow(x).id, prefix + s.vertex_id(s.arrow(x).src),
                        prefix + s.vertex_id(s.arrow(x).tgt)});
      amap[arrows.back().id] = w.codomain().arrow(w.arrow_image(x)).id;
    }
  };
  add(a, "A.");
  add(b, "B.");
  return Winding::validate(qgr::Quiver::validate(std::move(vids), std::move(arrows)), a.codomain(),
                           vmap, amap);
}

}  // namespace brute
