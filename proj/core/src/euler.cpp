#include "qgr/euler.hpp"

#include <algorithm>

namespace qgr {

std::vector<int> BandProfile::sources() const {
  std::vector<int> out;
  int l = length();
  for (int p = 0; p < l; ++p)
    if (eps[(p - 1 + l) % l] == +1 && eps[p] == -1) out.push_back(p);
  return out;
}

std::vector<int> BandProfile::sinks() const {
  std::vector<int> out;
  int l = length();
  for (int p = 0; p < l; ++p)
    if (eps[(p - 1 + l) % l] == -1 && eps[p] == +1) out.push_back(p);
  return out;
}

BandProfile band_profile(const CycleLabeling& lab, const DimVec& t_domain, long long n) {
  BandProfile p;
  p.eps = lab.eps;
  p.n = n;
  p.t.resize(lab.length());
  for (int i = 0; i < lab.length(); ++i) p.t[i] = t_domain[lab.vertex_at[i]];
  return p;
}

Int band_formula(const BandProfile& p) {
  int l = p.length();
  for (long long x : p.t)
    if (x < 0 || x > p.n) return 0;
  // Any negative factorial argument annihilates the term; with 0 <= t <= n
  // the only candidates are the cyclic difference factors.
  Rat val = 1;
  for (int s : p.sources()) val *= Rat(factorial(p.n - p.t[s]), factorial(p.t[s]));
  for (int s : p.sinks()) val *= Rat(factorial(p.t[s]), factorial(p.n - p.t[s]));
  for (int i = 0; i < l; ++i) {
    long long arg = p.eps[i] * (p.t[i] - p.t[(i + 1) % l]);
    if (arg < 0) return 0;
    val /= Rat(factorial(arg));
  }
  if (denominator(val) != 1)
    throw Error("NonIntegerResult", "band formula produced a non-integer");
  Int out = numerator(val);
  if (out < 0) throw Error("NonIntegerResult", "band formula produced a negative value");
  return out;
}

// ---------------------------------------------------------------------------
// Successor-closed subset enumeration.

namespace {

struct SubsetSearch {
  const Winding& w;
  const DimVec& d;
  Budget& budget;
  const std::function<void(const std::vector<char>&)>* callback = nullptr;
  Int count = 0;

  std::vector<char> state;  // 0 undecided, 1 in, 2 out
  DimVec in_count, out_count, total;

  explicit SubsetSearch(const Winding& w_, const DimVec& d_, Budget& b_) : w(w_), d(d_), budget(b_) {
    int nq = w.codomain().num_vertices();
    state.assign(w.domain().num_vertices(), 0);
    in_count.assign(nq, 0);
    out_count.assign(nq, 0);
    total.assign(nq, 0);
    for (int v = 0; v < w.domain().num_vertices(); ++v) total[w.vertex_image(v)] += 1;
  }

  bool feasible() const {
    for (std::size_t q = 0; q < d.size(); ++q) {
      if (in_count[q] > d[q]) return false;
      if (total[q] - out_count[q] < d[q]) return false;
    }
    return true;
  }

  // Mark v and everything reachable through out-arrows as in. Returns false
  // (after recording the trail) when a forced vertex is already out.
  bool close_in(int v, std::vector<int>& trail) {
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (state[u] == 1) continue;
      if (state[u] == 2) return false;
      state[u] = 1;
      in_count[w.vertex_image(u)] += 1;
      trail.push_back(u);
      for (int a : w.domain().out_arrows(u)) stack.push_back(w.domain().arrow(a).tgt);
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int u : trail) {
      state[u] = 0;
      in_count[w.vertex_image(u)] -= 1;
    }
  }

  void run(int v) {
    budget.spend();
    if (!feasible()) return;
    int nv = w.domain().num_vertices();
    while (v < nv && state[v] != 0) ++v;
    if (v == nv) {
      if (in_count == d) {
        if (callback) (*callback)(state);
        count += 1;
      }
      return;
    }
    // Exclude v.
    state[v] = 2;
    out_count[w.vertex_image(v)] += 1;
    run(v + 1);
    out_count[w.vertex_image(v)] -= 1;
    state[v] = 0;
    // Include v together with its successor closure.
    std::vector<int> trail;
    if (close_in(v, trail)) run(v + 1);
    undo(trail);
  }
};

}  // namespace

Int count_successor_closed(const Winding& w, const DimVec& d, Budget& budget) {
  if (!dim_nonneg(d)) return 0;
  SubsetSearch search(w, d, budget);
  search.run(0);
  return search.count;
}

void for_each_successor_closed(const Winding& w, const DimVec& d, Budget& budget,
                               const std::function<void(const std::vector<char>&)>& fn) {
  if (!dim_nonneg(d)) return;
  SubsetSearch search(w, d, budget);
  search.callback = &fn;
  search.run(0);
}

std::map<DimVec, Int> successor_closed_table(const Winding& w, const DimVec& cap, Budget& budget) {
  // All successor-closed subsets with pushforward <= cap, bucketed by
  // pushforward dimension vector.
  std::map<DimVec, Int> table;
  struct Rec {
    const Winding& w;
    const DimVec& cap;
    Budget& budget;
    std::map<DimVec, Int>& table;
    std::vector<char> state;
    DimVec in_count;

    void run(int v) {
      budget.spend();
      int nv = w.domain().num_vertices();
      while (v < nv && state[v] != 0) ++v;
      if (v == nv) {
        table[in_count] += 1;
        return;
      }
      state[v] = 2;
      run(v + 1);
      state[v] = 0;
      std::vector<int> trail;
      bool ok = true;
      std::vector<int> stack{v};
      while (!stack.empty() && ok) {
        int u = stack.back();
        stack.pop_back();
        if (state[u] == 1) continue;
        if (state[u] == 2) {
          ok = false;
          break;
        }
        state[u] = 1;
        in_count[w.vertex_image(u)] += 1;
        if (in_count[w.vertex_image(u)] > cap[w.vertex_image(u)]) ok = false;
        trail.push_back(u);
        for (int a : w.domain().out_arrows(u)) stack.push_back(w.domain().arrow(a).tgt);
      }
      if (ok) run(v + 1);
      for (int u : trail) {
        state[u] = 0;
        in_count[w.vertex_image(u)] -= 1;
      }
    }
  } rec{w, cap, budget, table, std::vector<char>(w.domain().num_vertices(), 0),
        DimVec(w.codomain().num_vertices(), 0)};
  rec.run(0);
  return table;
}

Int euler_tree(const Winding& f, const DimVec& d) {
  QuiverClass cls = classify_quiver(f.domain());
  if (cls.kind != QuiverClass::Kind::Tree && cls.kind != QuiverClass::Kind::TypeA)
    throw Error("NotATree", "euler_tree needs a tree winding");
  Budget budget;
  return count_successor_closed(f, d, budget);
}

Int euler_band(const Winding& b, long long n, const DimVec& d) {
  CycleLabeling lab = validate_band(b);
  if (!dim_nonneg(d)) return 0;
  DimVec bound(b.domain().num_vertices(), n);
  Int total = 0;
  for (const DimVec& t : fiber_dims(b, d, bound)) total += band_formula(band_profile(lab, t, n));
  return total;
}

// ---------------------------------------------------------------------------
// Riedtmann convolution over direct sums.

namespace {

std::map<DimVec, Int> convolve(const std::map<DimVec, Int>& a, const std::map<DimVec, Int>& b,
                               const DimVec& cap, Budget& budget) {
  std::map<DimVec, Int> out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) {
      budget.spend();
      DimVec s = dim_add(da, db);
      if (!dim_leq(s, cap)) continue;
      out[s] += ca * cb;
    }
  return out;
}

std::map<DimVec, Int> band_table(const Winding& b, long long n, const DimVec& cap, Budget& budget) {
  CycleLabeling lab = validate_band(b);
  std::map<DimVec, Int> table;
  int nv = b.domain().num_vertices();
  DimVec t(nv, 0);
  auto rec = [&](auto&& self, int v) -> void {
    budget.spend();
    if (v == nv) {
      Int val = band_formula(band_profile(lab, t, n));
      if (val != 0) {
        DimVec pf = pushforward_dim(b, t);
        if (dim_leq(pf, cap)) table[pf] += val;
      }
      return;
    }
    for (long long x = 0; x <= n; ++x) {
      t[v] = x;
      self(self, v + 1);
    }
    t[v] = 0;
  };
  rec(rec, 0);
  return table;
}

}  // namespace

Int euler_module(const ModuleExpr& m, const DimVec& d) {
  if (static_cast<int>(d.size()) != m.codomain().num_vertices())
    throw Error("UnsupportedModule", "dimension vector size mismatch");
  if (!dim_nonneg(d)) return 0;
  Budget budget;
  std::map<DimVec, Int> acc{{DimVec(d.size(), 0), 1}};
  for (const auto& s : m.summands()) {
    std::map<DimVec, Int> tbl;
    if (std::holds_alternative<TreeTerm>(s))
      tbl = successor_closed_table(std::get<TreeTerm>(s).winding, d, budget);
    else {
      const BandTerm& b = std::get<BandTerm>(s);
      tbl = band_table(b.winding, b.n, d, budget);
    }
    acc = convolve(acc, tbl, d, budget);
  }
  auto it = acc.find(d);
  return it == acc.end() ? Int(0) : it->second;
}

// ---------------------------------------------------------------------------
// Band recursion: peel the first source, reduce to string-module sums.

Int band_recursion_oracle(const BandProfile& p) {
  int l = p.length();
  for (long long x : p.t)
    if (x < 0 || x > p.n) return 0;
  std::vector<int> sources = p.sources();
  if (sources.empty()) {
    // Oriented cycle: the unique filtration forces constant t.
    for (int i = 1; i < l; ++i)
      if (p.t[i] != p.t[0]) return 0;
    return 1;
  }

  // Rotate so position 0 is a source.
  int shift = sources[0];
  BandProfile q;
  q.n = p.n;
  q.eps.resize(l);
  q.t.resize(l);
  for (int i = 0; i < l; ++i) {
    q.eps[i] = p.eps[(i + shift) % l];
    q.t[i] = p.t[(i + shift) % l];
  }
  std::vector<int> sinks = q.sinks();
  int r = static_cast<int>(sinks.size());
  int first_sink = sinks.front();
  int last_sink = sinks.back();

  // The cycle as a quiver; arc strings embed into it.
  auto pad = [l](const char* prefix, int i) {
    std::string s = std::to_string(i);
    std::string width = std::to_string(l);
    while (s.size() < width.size()) s.insert(s.begin(), '0');
    return prefix + s;
  };
  std::vector<std::string> vids;
  std::vector<ArrowSpec> arrows;
  for (int i = 0; i < l; ++i) vids.push_back(pad("p", i));
  for (int i = 0; i < l; ++i) {
    int j = (i + 1) % l;
    if (q.eps[i] == -1)
      arrows.push_back({pad("s", i), pad("p", i), pad("p", j)});
    else
      arrows.push_back({pad("s", i), pad("p", j), pad("p", i)});
  }
  Quiver cycle = Quiver::validate(vids, arrows);
  Winding id = identity_winding(cycle);

  // Linear ranges in positions 1..l-1; an inverted range is the zero module.
  auto arc = [&](int from, int to) -> std::optional<Winding> {
    if (from > to) return std::nullopt;
    std::vector<int> vs, as;
    for (int v = from; v <= to; ++v) vs.push_back(cycle.vertex_index(pad("p", v)));
    for (int a = from; a < to; ++a) as.push_back(cycle.arrow_index(pad("s", a)));
    return restrict_winding(id, vs, as);
  };
  std::optional<Winding> arc_alpha = arc(first_sink + 1, last_sink - 1);  // empty when r = 1
  std::optional<Winding> arc_beta = arc(first_sink + 1, l - 1);
  std::optional<Winding> arc_gamma = arc(1, last_sink - 1);
  std::optional<Winding> arc_delta = arc(1, l - 1);

  long long t0 = q.t[0];
  Int total = 0;
  for (long long k = 0; k <= std::min(t0, q.n - t0); ++k) {
    Int coef = binomial(t0, k) * binomial(q.n - t0, k);
    if (coef == 0) continue;
    DimVec tp(l, 0);
    if (r == 1) {
      for (int v = 1; v < l; ++v) tp[v] = q.t[v] - t0;
      tp[first_sink] -= k;
    } else {
      for (int v = 1; v <= first_sink; ++v) tp[v] = q.t[v] - t0;
      for (int v = first_sink + 1; v < last_sink; ++v) tp[v] = q.t[v];
      for (int v = last_sink; v < l; ++v) tp[v] = q.t[v] - t0;
    }
    std::vector<Summand> summands;
    auto add = [&](const std::optional<Winding>& a, long long copies) {
      if (!a) return;
      for (long long i = 0; i < copies; ++i) summands.push_back(TreeTerm{*a});
    };
    add(arc_alpha, t0 - k);
    add(arc_beta, k);
    add(arc_gamma, k);
    add(arc_delta, q.n - t0 - k);
    Int x = euler_module(ModuleExpr::validate(cycle, std::move(summands)), tp);
    total += coef * x;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Flags.

namespace {

struct FlagSearch {
  const Winding& w;
  const std::vector<DimVec>& dims;  // per step, or caps in table mode
  Budget& budget;
  bool table_mode = false;
  std::map<std::vector<long long>, Int>* table = nullptr;
  Int count = 0;

  int r, nv, nq;
  std::vector<int> level;                   // 0 = unassigned marker handled by order
  std::vector<DimVec> cnt;                  // cnt[i][q], i in 0..r-1
  DimVec undecided;
  std::vector<std::vector<std::pair<int, bool>>> checks;  // per vertex: (other, other_is_source)

  FlagSearch(const Winding& w_, const std::vector<DimVec>& dims_, Budget& b_)
      : w(w_), dims(dims_), budget(b_) {
    r = static_cast<int>(dims.size());
    nv = w.domain().num_vertices();
    nq = w.codomain().num_vertices();
    level.assign(nv, 0);
    cnt.assign(r, DimVec(nq, 0));
    undecided.assign(nq, 0);
    for (int v = 0; v < nv; ++v) undecided[w.vertex_image(v)] += 1;
    checks.assign(nv, {});
    for (int a = 0; a < w.domain().num_arrows(); ++a) {
      int s = w.domain().arrow(a).src, t = w.domain().arrow(a).tgt;
      // Check the constraint level[t] <= level[s] once both are set.
      if (s < t)
        checks[t].emplace_back(s, true);
      else
        checks[s].emplace_back(t, false);
    }
  }

  bool feasible() const {
    for (int i = 0; i < r; ++i)
      for (int q = 0; q < nq; ++q) {
        if (cnt[i][q] > dims[i][q]) return false;
        if (!table_mode && cnt[i][q] + undecided[q] < dims[i][q]) return false;
      }
    return true;
  }

  void run(int v) {
    budget.spend();
    if (!feasible()) return;
    if (v == nv) {
      if (table_mode) {
        std::vector<long long> key;
        for (int i = 0; i < r; ++i) key.insert(key.end(), cnt[i].begin(), cnt[i].end());
        (*table)[key] += 1;
      } else {
        for (int i = 0; i < r; ++i)
          if (cnt[i] != dims[i]) return;
        count += 1;
      }
      return;
    }
    int q = w.vertex_image(v);
    undecided[q] -= 1;
    for (int lv = 1; lv <= r + 1; ++lv) {
      level[v] = lv;
      bool ok = true;
      for (auto [other, other_is_source] : checks[v]) {
        int ls = other_is_source ? level[other] : lv;
        int lt = other_is_source ? lv : level[other];
        if (lt > ls) ok = false;
      }
      if (!ok) continue;
      for (int i = lv - 1; i < r; ++i) cnt[i][q] += 1;
      run(v + 1);
      for (int i = lv - 1; i < r; ++i) cnt[i][q] -= 1;
    }
    undecided[q] += 1;
  }
};

std::map<std::vector<long long>, Int> flag_table(const Winding& w, const std::vector<DimVec>& caps,
                                                 Budget& budget) {
  std::map<std::vector<long long>, Int> table;
  FlagSearch search(w, caps, budget);
  search.table_mode = true;
  search.table = &table;
  search.run(0);
  return table;
}

bool is_kronecker(const Quiver& q) {
  if (q.num_vertices() != 2 || q.num_arrows() != 2) return false;
  const auto& a = q.arrow(0);
  const auto& b = q.arrow(1);
  return a.src == b.src && a.tgt == b.tgt && a.src != a.tgt;
}

}  // namespace

Int euler_flag_tree(const Winding& f, const std::vector<DimVec>& dims) {
  QuiverClass cls = classify_quiver(f.domain());
  if (cls.kind != QuiverClass::Kind::Tree && cls.kind != QuiverClass::Kind::TypeA)
    throw Error("NotATree", "euler_flag_tree needs a tree winding");
  for (const auto& d : dims)
    if (!dim_nonneg(d)) return 0;
  if (dims.empty()) return 1;
  Budget budget;
  FlagSearch search(f, dims, budget);
  search.run(0);
  return search.count;
}

Int euler_flag_module(const ModuleExpr& m, const std::vector<DimVec>& dims) {
  for (const auto& d : dims) {
    if (static_cast<int>(d.size()) != m.codomain().num_vertices())
      throw Error("UnsupportedModule", "dimension vector size mismatch");
    if (!dim_nonneg(d)) return 0;
  }
  if (dims.empty()) return 1;

  bool any_band = false;
  for (const auto& s : m.summands())
    if (std::holds_alternative<BandTerm>(s)) any_band = true;
  if (any_band) {
    if (m.summands().size() == 1 && is_kronecker(m.codomain()))
      return kronecker_band_flag(m.codomain(), std::get<BandTerm>(m.summands()[0]).n, dims);
    throw Error("UnsupportedBandFlag", "flags of band modules are only available on the Kronecker quiver");
  }

  Budget budget;
  std::vector<long long> target;
  for (const auto& d : dims) target.insert(target.end(), d.begin(), d.end());
  std::map<std::vector<long long>, Int> acc{{std::vector<long long>(target.size(), 0), 1}};
  for (const auto& s : m.summands()) {
    auto tbl = flag_table(std::get<TreeTerm>(s).winding, dims, budget);
    std::map<std::vector<long long>, Int> next;
    for (const auto& [ka, ca] : acc)
      for (const auto& [kb, cb] : tbl) {
        budget.spend();
        std::vector<long long> key(ka);
        bool ok = true;
        for (std::size_t i = 0; i < key.size(); ++i) {
          key[i] += kb[i];
          if (key[i] > target[i]) ok = false;
        }
        if (ok) next[key] += ca * cb;
      }
    acc = std::move(next);
  }
  auto it = acc.find(target);
  return it == acc.end() ? Int(0) : it->second;
}

Winding kronecker_zigzag(const Quiver& kronecker, long long n) {
  if (!is_kronecker(kronecker))
    throw Error("NotKronecker", "the zig-zag reduction needs the Kronecker quiver");
  if (n < 1) throw Error("UnsupportedModule", "band multiplicity must be positive");
  const std::string& src = kronecker.vertex_id(kronecker.arrow(0).src);
  const std::string& tgt = kronecker.vertex_id(kronecker.arrow(0).tgt);
  const std::string& a0 = kronecker.arrow(0).id;
  const std::string& a1 = kronecker.arrow(1).id;
  auto pad = [n](const char* prefix, long long i) {
    std::string s = std::to_string(i);
    std::string width = std::to_string(n);
    while (s.size() < width.size()) s.insert(s.begin(), '0');
    return prefix + s;
  };
  std::vector<std::string> vids;
  std::vector<ArrowSpec> arrows;
  std::map<std::string, std::string> vmap, amap;
  for (long long i = 1; i <= n; ++i) {
    vids.push_back(pad("t", i));
    vids.push_back(pad("b", i));
    vmap[pad("t", i)] = src;
    vmap[pad("b", i)] = tgt;
    arrows.push_back({pad("d", i), pad("t", i), pad("b", i)});
    amap[pad("d", i)] = a0;
    if (i >= 2) {
      arrows.push_back({pad("l", i), pad("t", i), pad("b", i - 1)});
      amap[pad("l", i)] = a1;
    }
  }
  return Winding::validate(Quiver::validate(std::move(vids), std::move(arrows)), kronecker, vmap,
                           amap);
}

Int kronecker_band_flag(const Quiver& kronecker, long long n, const std::vector<DimVec>& dims) {
  return euler_flag_tree(kronecker_zigzag(kronecker, n), dims);
}

}  // namespace qgr
