#pragma once

// Shared fixtures: the small quivers, windings and modules the suites
// exercise, named by shape.

#include <random>

#include "qgr/euler.hpp"
#include "qgr/grading.hpp"
#include "qgr/hall.hpp"

namespace fixtures {

using namespace qgr;

// 1 -a-> 2
inline Quiver a2() {
  return Quiver::validate({"1", "2"}, {{"a", "1", "2"}});
}

// One vertex "o" with loops alpha and beta.
inline Quiver loop2() {
  return Quiver::validate({"o"}, {{"alpha", "o", "o"}, {"beta", "o", "o"}});
}

// 1 => 2 via a and b.
inline Quiver kronecker() {
  return Quiver::validate({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
}

// 1 -alpha-> 2, 2 => 3 via beta and gamma.
inline Quiver fork3() {
  return Quiver::validate({"1", "2", "3"},
                          {{"alpha", "1", "2"}, {"beta", "2", "3"}, {"gamma", "2", "3"}});
}

// 1 -alpha-> 3 <-beta- 2 with a loop gamma at 3.
inline Quiver star_loop() {
  return Quiver::validate({"1", "2", "3"},
                          {{"alpha", "1", "3"}, {"beta", "2", "3"}, {"gamma", "3", "3"}});
}

// Five-vertex tree over star_loop: three vertices over 3 chained by the loop.
inline Winding star_tail_tree() {
  Quiver s = Quiver::validate({"1", "2", "3", "3p", "3pp"}, {{"a", "1", "3p"},
                                                            {"b", "2", "3p"},
                                                            {"c", "3", "3p"},
                                                            {"d", "3p", "3pp"}});
  return Winding::validate(s, star_loop(),
                           {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"3p", "3"}, {"3pp", "3"}},
                           {{"a", "alpha"}, {"b", "beta"}, {"c", "gamma"}, {"d", "gamma"}});
}

// The square band over the two-loop vertex.
inline Winding square_band() {
  Quiver s = Quiver::validate(
      {"1", "2", "3", "4"},
      {{"b1", "1", "2"}, {"a1", "1", "3"}, {"a2", "2", "4"}, {"b2", "3", "4"}});
  return Winding::validate(s, loop2(), {{"1", "o"}, {"2", "o"}, {"3", "o"}, {"4", "o"}},
                           {{"b1", "beta"}, {"a1", "alpha"}, {"a2", "alpha"}, {"b2", "beta"}});
}

// Five-vertex tree over the two loops: 1 -alpha-> 2 -beta-> 3 <-alpha- 2p <-beta- 1p.
inline Winding wedge_tree() {
  Quiver s = Quiver::validate({"1", "1p", "2", "2p", "3"}, {{"e1", "1", "2"},
                                                           {"e2", "2", "3"},
                                                           {"e3", "1p", "2p"},
                                                           {"e4", "2p", "3"}});
  return Winding::validate(s, loop2(),
                           {{"1", "o"}, {"1p", "o"}, {"2", "o"}, {"2p", "o"}, {"3", "o"}},
                           {{"e1", "alpha"}, {"e2", "beta"}, {"e3", "beta"}, {"e4", "alpha"}});
}

// Six-vertex tree over the doubled-arrow fork with exactly two
// successor-closed subsets of pushforward dimension (0,1,1).
inline Winding fork_tree6() {
  Quiver s = Quiver::validate({"1", "2a", "2b", "2c", "3a", "3b"}, {{"e1", "1", "2a"},
                                                                   {"e2", "2a", "3a"},
                                                                   {"e3", "2a", "3b"},
                                                                   {"e4", "2b", "3b"},
                                                                   {"e5", "2c", "3a"}});
  return Winding::validate(
      s, fork3(),
      {{"1", "1"}, {"2a", "2"}, {"2b", "2"}, {"2c", "2"}, {"3a", "3"}, {"3b", "3"}},
      {{"e1", "alpha"}, {"e2", "beta"}, {"e3", "gamma"}, {"e4", "beta"}, {"e5", "gamma"}});
}

// The five-vertex winding whose domain is neither a tree nor a cycle: both
// middle vertices feed both sinks.
inline Winding fork_nontree() {
  Quiver s = Quiver::validate({"1", "2a", "2b", "3a", "3b"}, {{"e1", "1", "2a"},
                                                              {"e2", "2a", "3a"},
                                                              {"e3", "2a", "3b"},
                                                              {"e4", "2b", "3a"},
                                                              {"e5", "2b", "3b"}});
  return Winding::validate(s, fork3(),
                           {{"1", "1"}, {"2a", "2"}, {"2b", "2"}, {"3a", "3"}, {"3b", "3"}},
                           {{"e1", "alpha"},
                            {"e2", "beta"},
                            {"e3", "gamma"},
                            {"e4", "gamma"},
                            {"e5", "beta"}});
}

// Codomain of the six-vertex Hall example: 1 -alpha-> 2, 1 -beta-> 3, loop
// gamma at 3.
inline Quiver hall_q() {
  return Quiver::validate({"1", "2", "3"},
                          {{"alpha", "1", "2"}, {"beta", "1", "3"}, {"gamma", "3", "3"}});
}

inline Winding hall_string() {
  Quiver s = Quiver::validate({"1", "1p", "2", "2p", "3", "3p"}, {{"e1", "1", "2"},
                                                                 {"e2", "1", "3"},
                                                                 {"e3", "3", "3p"},
                                                                 {"e4", "1p", "3p"},
                                                                 {"e5", "1p", "2p"}});
  return Winding::validate(
      s, hall_q(),
      {{"1", "1"}, {"1p", "1"}, {"2", "2"}, {"2p", "2"}, {"3", "3"}, {"3p", "3"}},
      {{"e1", "alpha"}, {"e2", "beta"}, {"e3", "gamma"}, {"e4", "beta"}, {"e5", "alpha"}});
}

// Single vertex over q_vertex.
inline Winding simple_at(const Quiver& q, const std::string& q_vertex) {
  return string_from_walk(q, {}, q_vertex);
}

// Projective cover of the Kronecker source simple: dim (1,2).
inline Winding kron_p1() {
  return string_from_walk(kronecker(), {{"a", false}, {"b", true}});
}

// Injective hull of the Kronecker sink simple: dim (2,1).
inline Winding kron_i2() {
  return string_from_walk(kronecker(), {{"a", true}, {"b", false}});
}

// The loop-pair string algebra with relations alpha^2, beta^2, alpha.beta.alpha.
inline StringAlgebra loop_pair_algebra() {
  return StringAlgebra::validate(
      loop2(), {{"alpha", "alpha"}, {"beta", "beta"}, {"alpha", "beta", "alpha"}});
}

inline ModuleExpr module_of(const Quiver& q, std::vector<Summand> summands) {
  return ModuleExpr::validate(q, std::move(summands));
}

inline DimVec dims(std::initializer_list<long long> xs) { return DimVec(xs); }

// x -> y over a single loop.
inline Winding a2_over_loop() {
  Quiver loop1 = Quiver::validate({"v"}, {{"l", "v", "v"}});
  Quiver s = Quiver::validate({"x", "y"}, {{"e", "x", "y"}});
  return Winding::validate(s, loop1, {{"x", "v"}, {"y", "v"}}, {{"e", "l"}});
}

// At least twenty tree windings with at most ten vertices; the fixed examples
// first, then seeded random trees over the two-loop vertex.
inline std::vector<Winding> tree_corpus() {
  std::vector<Winding> out = {star_tail_tree(),
                              wedge_tree(),
                              fork_tree6(),
                              hall_string(),
                              a2_over_loop(),
                              kronecker_zigzag(kronecker(), 2),
                              kronecker_zigzag(kronecker(), 3)};
  std::mt19937 rng(2024);
  Quiver q = loop2();
  while (out.size() < 22) {
    int nv = 2 + static_cast<int>(rng() % 7);
    std::vector<std::string> vids;
    std::vector<ArrowSpec> arrows;
    std::map<std::string, std::string> vmap, amap;
    for (int v = 0; v < nv; ++v) {
      vids.push_back("v" + std::to_string(v));
      vmap[vids.back()] = "o";
    }
    for (int v = 1; v < nv; ++v) {
      int parent = static_cast<int>(rng() % v);
      bool toward_parent = rng() % 2 == 0;
      std::string id = "e" + std::to_string(v);
      if (toward_parent)
        arrows.push_back({id, vids[v], vids[parent]});
      else
        arrows.push_back({id, vids[parent], vids[v]});
      amap[id] = rng() % 2 ? "alpha" : "beta";
    }
    try {
      out.push_back(Winding::validate(Quiver::validate(vids, arrows), q, vmap, amap));
    } catch (const Error&) {
      // fold: try another random tree
    }
  }
  return out;
}

}  // namespace fixtures
