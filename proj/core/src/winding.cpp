#include "qgr/winding.hpp"

#include <algorithm>
#include <set>

namespace qgr {

namespace {

// Length-prefixed id serialization keeps canonical encodings injective for
// arbitrary id strings.
std::string esc(const std::string& s) { return std::to_string(s.size()) + ":" + s; }

}  // namespace

Winding Winding::validate(Quiver domain, Quiver codomain,
                          const std::map<std::string, std::string>& vmap,
                          const std::map<std::string, std::string>& amap) {
  std::vector<int> vm(domain.num_vertices(), -1), am(domain.num_arrows(), -1);
  for (const auto& [sv, qv] : vmap) {
    int si = domain.vertex_index(sv);
    if (si < 0) throw Error("NotMorphism", "vmap key '" + sv + "' is not a domain vertex");
    int qi = codomain.vertex_index(qv);
    if (qi < 0) throw Error("NotMorphism", "vmap value '" + qv + "' is not a codomain vertex");
    vm[si] = qi;
  }
  for (const auto& [sa, qa] : amap) {
    int si = domain.arrow_index(sa);
    if (si < 0) throw Error("NotMorphism", "amap key '" + sa + "' is not a domain arrow");
    int qi = codomain.arrow_index(qa);
    if (qi < 0) throw Error("NotMorphism", "amap value '" + qa + "' is not a codomain arrow");
    am[si] = qi;
  }
  for (int v = 0; v < domain.num_vertices(); ++v)
    if (vm[v] < 0) throw Error("NotMorphism", "vertex '" + domain.vertex_id(v) + "' has no image");
  for (int a = 0; a < domain.num_arrows(); ++a)
    if (am[a] < 0) throw Error("NotMorphism", "arrow '" + domain.arrow(a).id + "' has no image");
  return validate_indexed(std::move(domain), std::move(codomain), std::move(vm), std::move(am));
}

Winding Winding::validate_indexed(Quiver domain, Quiver codomain, std::vector<int> vmap,
                                  std::vector<int> amap) {
  for (int a = 0; a < domain.num_arrows(); ++a) {
    const auto& sa = domain.arrow(a);
    const auto& qa = codomain.arrow(amap[a]);
    if (vmap[sa.src] != qa.src || vmap[sa.tgt] != qa.tgt)
      throw Error("NotMorphism", "arrow '" + sa.id + "' does not commute with the vertex map");
  }
  for (int v = 0; v < domain.num_vertices(); ++v) {
    std::set<int> images;
    for (int a : domain.out_arrows(v))
      if (!images.insert(amap[a]).second)
        throw Error("FoldAtSource", "two arrows out of '" + domain.vertex_id(v) +
                                        "' share the image '" +
                                        codomain.arrow(amap[a]).id + "'");
    images.clear();
    for (int a : domain.in_arrows(v))
      if (!images.insert(amap[a]).second)
        throw Error("FoldAtTarget", "two arrows into '" + domain.vertex_id(v) +
                                        "' share the image '" +
                                        codomain.arrow(amap[a]).id + "'");
  }
  Winding w;
  w.domain_ = std::move(domain);
  w.codomain_ = std::move(codomain);
  w.vmap_ = std::move(vmap);
  w.amap_ = std::move(amap);
  return w;
}

bool Winding::vertex_injective() const {
  std::set<int> seen;
  for (int img : vmap_)
    if (!seen.insert(img).second) return false;
  return true;
}

Winding identity_winding(const Quiver& q) {
  std::vector<int> vm(q.num_vertices()), am(q.num_arrows());
  for (int v = 0; v < q.num_vertices(); ++v) vm[v] = v;
  for (int a = 0; a < q.num_arrows(); ++a) am[a] = a;
  return Winding::validate_indexed(q, q, std::move(vm), std::move(am));
}

CycleLabeling validate_band(const Winding& b) {
  QuiverClass cls = classify_quiver(b.domain());
  if (cls.kind != QuiverClass::Kind::TypeATilde)
    throw Error("NotABand", "band domain must be of type A~");
  const CycleLabeling& lab = *cls.cycle;
  int l = lab.length();
  for (int r = 1; r < l; ++r) {
    bool periodic = true;
    for (int i = 0; i < l && periodic; ++i) {
      int j = (i + r) % l;
      if (b.arrow_image(lab.arrow_at[i]) != b.arrow_image(lab.arrow_at[j]) ||
          lab.eps[i] != lab.eps[j])
        periodic = false;
    }
    if (periodic)
      throw PeriodicBandError(r, "band has rotational period " + std::to_string(r));
  }
  return lab;
}

DimVec pushforward_dim(const Winding& w, const DimVec& t) {
  DimVec d(w.codomain().num_vertices(), 0);
  for (int v = 0; v < w.domain().num_vertices(); ++v) d[w.vertex_image(v)] += t[v];
  return d;
}

std::vector<DimVec> fiber_dims(const Winding& w, const DimVec& d, const DimVec& bound) {
  int nv = w.domain().num_vertices();
  int nq = w.codomain().num_vertices();
  // remaining[v][q]: how much the vertices >= v can still contribute to q.
  std::vector<DimVec> remaining(nv + 1, DimVec(nq, 0));
  for (int v = nv - 1; v >= 0; --v) {
    remaining[v] = remaining[v + 1];
    remaining[v][w.vertex_image(v)] += bound[v];
  }
  std::vector<DimVec> out;
  DimVec t(nv, 0), acc(nq, 0);
  Budget budget;
  auto feasible = [&](int v) {
    for (int q = 0; q < nq; ++q) {
      if (acc[q] > d[q]) return false;
      if (acc[q] + remaining[v][q] < d[q]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int v) -> void {
    budget.spend();
    if (!feasible(v)) return;
    if (v == nv) {
      out.push_back(t);
      return;
    }
    int q = w.vertex_image(v);
    for (long long x = 0; x <= bound[v]; ++x) {
      t[v] = x;
      acc[q] += x;
      self(self, v + 1);
      acc[q] -= x;
    }
    t[v] = 0;
  };
  rec(rec, 0);
  return out;
}

namespace {

// Rooted canonical encoding of a tree-domain winding: vertex token is the
// codomain vertex id, edges carry direction relative to the parent plus the
// codomain arrow id, children sorted by encoding.
std::string encode_tree(const Winding& w,
                        const std::vector<std::vector<std::pair<int, int>>>& adj, int v,
                        int parent_arrow) {
  std::vector<std::string> child_tokens;
  for (auto [arrow, other] : adj[v]) {
    if (arrow == parent_arrow) continue;
    bool outgoing = w.domain().arrow(arrow).src == v;
    std::string tok = (outgoing ? ">" : "<") + esc(w.codomain().arrow(w.arrow_image(arrow)).id) +
                      encode_tree(w, adj, other, arrow);
    child_tokens.push_back(std::move(tok));
  }
  std::sort(child_tokens.begin(), child_tokens.end());
  std::string r = "(" + esc(w.codomain().vertex_id(w.vertex_image(v)));
  for (auto& t : child_tokens) r += t;
  r += ")";
  return r;
}

std::string tree_canonical(const Winding& w) {
  const Quiver& s = w.domain();
  int nv = s.num_vertices();
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (arrow, other endpoint)
  for (int a = 0; a < s.num_arrows(); ++a) {
    adj[s.arrow(a).src].emplace_back(a, s.arrow(a).tgt);
    adj[s.arrow(a).tgt].emplace_back(a, s.arrow(a).src);
  }
  // Centers by leaf stripping.
  std::vector<int> degree(nv);
  for (int v = 0; v < nv; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<int> layer;
  std::vector<char> removed(nv, 0);
  for (int v = 0; v < nv; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  int alive = nv;
  while (alive > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --alive;
      for (auto [a, other] : adj[v])
        if (!removed[other] && --degree[other] == 1) next.push_back(other);
    }
    layer = std::move(next);
  }
  std::string best;
  for (int v = 0; v < nv; ++v) {
    if (removed[v]) continue;
    std::string e = encode_tree(w, adj, v, -1);
    if (best.empty() || e < best) best = e;
  }
  return "T:" + best;
}

std::string band_canonical(const Winding& w, const CycleLabeling& lab) {
  int l = lab.length();
  auto item = [&](int vertex, int arrow, int eps) {
    return esc(w.codomain().vertex_id(w.vertex_image(vertex))) + (eps > 0 ? "+" : "-") +
           esc(w.codomain().arrow(w.arrow_image(arrow)).id);
  };
  std::string best;
  for (int start = 0; start < l; ++start) {
    std::string fwd, bwd;
    for (int i = 0; i < l; ++i) {
      int p = (start + i) % l;
      fwd += item(lab.vertex_at[p], lab.arrow_at[p], lab.eps[p]);
      // Reversed traversal: position j holds the old vertex start-j; its
      // arrow is the old arrow start-j-1 with flipped sign.
      int pv = ((start - i) % l + l) % l;
      int pa = ((start - i - 1) % l + l) % l;
      bwd += item(lab.vertex_at[pv], lab.arrow_at[pa], -lab.eps[pa]);
    }
    if (best.empty() || fwd < best) best = fwd;
    if (bwd < best) best = bwd;
  }
  return "B:" + best;
}

}  // namespace

std::string winding_canonical_form(const Winding& w) {
  QuiverClass cls = classify_quiver(w.domain());
  switch (cls.kind) {
    case QuiverClass::Kind::Tree:
    case QuiverClass::Kind::TypeA:
      return tree_canonical(w);
    case QuiverClass::Kind::TypeATilde:
      return band_canonical(w, *cls.cycle);
    default:
      throw Error("MixedKinds", "canonical form needs a tree or type A~ domain");
  }
}

bool windings_isomorphic(const Winding& a, const Winding& b) {
  QuiverClass ca = classify_quiver(a.domain());
  QuiverClass cb = classify_quiver(b.domain());
  bool tree_a = ca.kind == QuiverClass::Kind::Tree || ca.kind == QuiverClass::Kind::TypeA;
  bool tree_b = cb.kind == QuiverClass::Kind::Tree || cb.kind == QuiverClass::Kind::TypeA;
  if (tree_a != tree_b)
    throw Error("MixedKinds", "cannot compare a tree winding with a band winding");
  if (!a.codomain().same_as(b.codomain())) return false;
  return winding_canonical_form(a) == winding_canonical_form(b);
}

Winding string_from_walk(const Quiver& q, const std::vector<std::pair<std::string, bool>>& letters,
                         const std::string& start_vertex) {
  std::vector<std::string> vids;
  std::vector<ArrowSpec> arrows;
  std::map<std::string, std::string> vmap, amap;
  int n = static_cast<int>(letters.size());
  auto wv = [](int i) { return "w" + std::to_string(i); };
  for (int i = 0; i <= n; ++i) vids.push_back(wv(i));
  std::string cur;
  if (n == 0) {
    if (q.vertex_index(start_vertex) < 0)
      throw Error("NotMorphism", "empty walk needs a start vertex");
    cur = start_vertex;
  } else {
    const auto& [id, forward] = letters[0];
    int a = q.arrow_index(id);
    if (a < 0) throw Error("NotMorphism", "unknown arrow '" + id + "' in walk");
    cur = q.vertex_id(forward ? q.arrow(a).src : q.arrow(a).tgt);
  }
  vmap[wv(0)] = cur;
  for (int i = 0; i < n; ++i) {
    const auto& [id, forward] = letters[i];
    int a = q.arrow_index(id);
    if (a < 0) throw Error("NotMorphism", "unknown arrow '" + id + "' in walk");
    std::string from = q.vertex_id(forward ? q.arrow(a).src : q.arrow(a).tgt);
    std::string to = q.vertex_id(forward ? q.arrow(a).tgt : q.arrow(a).src);
    if (from != cur) throw Error("NotMorphism", "walk is not connected at letter " + std::to_string(i));
    std::string eid = "e" + std::to_string(i + 1);
    if (forward)
      arrows.push_back({eid, wv(i), wv(i + 1)});
    else
      arrows.push_back({eid, wv(i + 1), wv(i)});
    amap[eid] = id;
    vmap[wv(i + 1)] = to;
    cur = to;
  }
  return Winding::validate(Quiver::validate(std::move(vids), std::move(arrows)), q, vmap, amap);
}

Winding band_from_walk(const Quiver& q, const std::vector<std::pair<std::string, bool>>& letters) {
  int n = static_cast<int>(letters.size());
  if (n == 0) throw Error("NotABand", "a band walk needs at least one letter");
  std::vector<std::string> vids;
  std::vector<ArrowSpec> arrows;
  std::map<std::string, std::string> vmap, amap;
  auto wv = [](int i) { return "w" + std::to_string(i); };
  for (int i = 0; i < n; ++i) vids.push_back(wv(i));
  const auto& [id0, fwd0] = letters[0];
  int a0 = q.arrow_index(id0);
  if (a0 < 0) throw Error("NotMorphism", "unknown arrow '" + id0 + "' in walk");
  std::string cur = q.vertex_id(fwd0 ? q.arrow(a0).src : q.arrow(a0).tgt);
  vmap[wv(0)] = cur;
  for (int i = 0; i < n; ++i) {
    const auto& [id, forward] = letters[i];
    int a = q.arrow_index(id);
    if (a < 0) throw Error("NotMorphism", "unknown arrow '" + id + "' in walk");
    std::string from = q.vertex_id(forward ? q.arrow(a).src : q.arrow(a).tgt);
    std::string to = q.vertex_id(forward ? q.arrow(a).tgt : q.arrow(a).src);
    if (from != cur) throw Error("NotMorphism", "walk is not connected at letter " + std::to_string(i));
    std::string eid = "e" + std::to_string(i + 1);
    int j = (i + 1) % n;
    if (forward)
      arrows.push_back({eid, wv(i), wv(j)});
    else
      arrows.push_back({eid, wv(j), wv(i)});
    amap[eid] = id;
    if (j != 0) vmap[wv(j)] = to;
    else if (vmap[wv(0)] != to)
      throw Error("NotABand", "walk does not close up");
    cur = to;
  }
  return Winding::validate(Quiver::validate(std::move(vids), std::move(arrows)), q, vmap, amap);
}

Winding restrict_winding(const Winding& w, const std::vector<int>& vertices,
                         const std::vector<int>& arrows) {
  std::vector<std::string> vids;
  std::vector<ArrowSpec> specs;
  std::map<std::string, std::string> vmap, amap;
  for (int v : vertices) {
    vids.push_back(w.domain().vertex_id(v));
    vmap[vids.back()] = w.codomain().vertex_id(w.vertex_image(v));
  }
  for (int a : arrows) {
    const auto& arr = w.domain().arrow(a);
    specs.push_back({arr.id, w.domain().vertex_id(arr.src), w.domain().vertex_id(arr.tgt)});
    amap[arr.id] = w.codomain().arrow(w.arrow_image(a)).id;
  }
  return Winding::validate(Quiver::validate(std::move(vids), std::move(specs)), w.codomain(), vmap,
                           amap);
}

}  // namespace qgr
