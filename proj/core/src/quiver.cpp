#include "qgr/quiver.hpp"

#include <algorithm>
#include <set>

namespace qgr {

Quiver Quiver::validate(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows) {
  if (vertices.empty()) throw Error("EmptyQuiver", "a quiver needs at least one vertex");
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      throw Error("DuplicateId", "duplicate vertex id '" + vertices[i] + "'");

  std::sort(arrows.begin(), arrows.end(),
            [](const ArrowSpec& a, const ArrowSpec& b) { return a.id < b.id; });
  Quiver q;
  q.vertices_ = std::move(vertices);
  q.out_.assign(q.vertices_.size(), {});
  q.in_.assign(q.vertices_.size(), {});
  for (const auto& spec : arrows) {
    if (!q.arrows_.empty() && q.arrows_.back().id == spec.id)
      throw Error("DuplicateId", "duplicate arrow id '" + spec.id + "'");
    int s = q.vertex_index(spec.src);
    int t = q.vertex_index(spec.tgt);
    if (s < 0) throw Error("DanglingArrow", "arrow '" + spec.id + "' starts at unknown vertex '" + spec.src + "'");
    if (t < 0) throw Error("DanglingArrow", "arrow '" + spec.id + "' ends at unknown vertex '" + spec.tgt + "'");
    int idx = static_cast<int>(q.arrows_.size());
    q.arrows_.push_back({spec.id, s, t});
    q.out_[s].push_back(idx);
    q.in_[t].push_back(idx);
  }
  return q;
}

int Quiver::vertex_index(const std::string& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int Quiver::arrow_index(const std::string& id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, const std::string& s) { return a.id < s; });
  if (it == arrows_.end() || it->id != id) return -1;
  return static_cast<int>(it - arrows_.begin());
}

bool Quiver::same_as(const Quiver& other) const {
  if (vertices_ != other.vertices_) return false;
  if (arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].id != other.arrows_[i].id || arrows_[i].src != other.arrows_[i].src ||
        arrows_[i].tgt != other.arrows_[i].tgt)
      return false;
  }
  return true;
}

bool dim_leq(const DimVec& a, const DimVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

DimVec dim_add(const DimVec& a, const DimVec& b) {
  DimVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

DimVec dim_sub(const DimVec& a, const DimVec& b) {
  DimVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

long long dim_total(const DimVec& a) {
  long long t = 0;
  for (long long x : a) t += x;
  return t;
}

bool dim_nonneg(const DimVec& a) {
  for (long long x : a)
    if (x < 0) return false;
  return true;
}

namespace {

// Undirected incidence entry: arrow index plus which endpoint this vertex is.
struct Incidence {
  int arrow;
  bool as_source;
};

std::vector<std::vector<Incidence>> incidences(const Quiver& q) {
  std::vector<std::vector<Incidence>> inc(q.num_vertices());
  for (int a = 0; a < q.num_arrows(); ++a) {
    inc[q.arrow(a).src].push_back({a, true});
    inc[q.arrow(a).tgt].push_back({a, false});
  }
  return inc;
}

bool connected(const Quiver& q, const std::vector<std::vector<Incidence>>& inc) {
  std::vector<char> seen(q.num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : inc[v]) {
      int w = e.as_source ? q.arrow(e.arrow).tgt : q.arrow(e.arrow).src;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// One traversal of the unique cycle starting at position `start` with the
// chosen first incidence; produces the labeling plus its comparison key.
struct Traversal {
  CycleLabeling lab;
  std::vector<std::pair<std::string, int>> key;  // (arrow id, eps)
  std::vector<std::string> tiebreak;             // vertex ids
};

Traversal traverse(const Quiver& q, const std::vector<std::vector<Incidence>>& inc, int start,
                   int first_choice) {
  Traversal t;
  int l = q.num_vertices();
  int v = start;
  Incidence step = inc[start][first_choice];
  for (int p = 0; p < l; ++p) {
    // eps = -1 when the arrow leaves position p, +1 when it enters it.
    int eps = step.as_source ? -1 : +1;
    t.lab.vertex_at.push_back(v);
    t.lab.arrow_at.push_back(step.arrow);
    t.lab.eps.push_back(eps);
    t.key.emplace_back(q.arrow(step.arrow).id, eps);
    t.tiebreak.push_back(q.vertex_id(v));
    int w = step.as_source ? q.arrow(step.arrow).tgt : q.arrow(step.arrow).src;
    // We arrive at w through (step.arrow, opposite role); leave via the
    // other incidence entry. Works for loops and parallel arrows alike.
    const auto& cand = inc[w];
    int arrival = 0;
    for (int i = 0; i < 2; ++i)
      if (cand[i].arrow == step.arrow && cand[i].as_source != step.as_source) arrival = i;
    step = cand[1 - arrival];
    v = w;
  }
  return t;
}

}  // namespace

QuiverClass classify_quiver(const Quiver& q) {
  QuiverClass result;
  auto inc = incidences(q);
  if (!connected(q, inc)) return result;  // Other

  int nv = q.num_vertices(), na = q.num_arrows();
  if (na == nv - 1) {
    // Connected and acyclic: a tree. Paths are reported as TypeA.
    bool path = true;
    for (int v = 0; v < nv; ++v)
      if (inc[v].size() > 2) path = false;
    result.kind = path ? QuiverClass::Kind::TypeA : QuiverClass::Kind::Tree;
    result.length = nv;
    return result;
  }

  if (na == nv) {
    // Single cycle covering everything iff every vertex meets exactly two
    // arrow endpoints.
    for (int v = 0; v < nv; ++v)
      if (inc[v].size() != 2) return result;
    std::optional<Traversal> best;
    for (int v = 0; v < nv; ++v)
      for (int c = 0; c < 2; ++c) {
        Traversal t = traverse(q, inc, v, c);
        if (!best || t.key < best->key || (t.key == best->key && t.tiebreak < best->tiebreak))
          best = std::move(t);
      }
    result.kind = QuiverClass::Kind::TypeATilde;
    result.length = nv;
    result.cycle = best->lab;
    return result;
  }

  return result;  // Other
}

}  // namespace qgr
