#pragma once

#include <optional>
#include <vector>

#include "qgr/euler.hpp"

namespace qgr {

// Integer grading of the canonical basis of a pushed-forward module, stored
// as labels on the domain quiver S. When arrow values are present they must
// satisfy d(a) = d(t(a)) - d(s(a)) (condition (S1)).
struct Grading {
  std::vector<long long> vertex_values;                 // per S-vertex
  std::optional<std::vector<long long>> arrow_values;   // per S-arrow
};

using GradingStack = std::vector<Grading>;

// The unique grading with the given anchor value whose arrow labels are the
// prescribed ones. S must be connected; on cyclic S the signed sum around the
// cycle must vanish, otherwise InconsistentCycle.
Grading induce_from_arrows(const Winding& f, const std::vector<long long>& arrow_labels,
                           int anchor_vertex, long long anchor_value);

// (S1) plus (S2): arrows with equal image and equal stack values at both
// endpoints carry equal labels.
bool validate_nice(const Winding& f, const Grading& g, const GradingStack& stack);

struct Refinement {
  Quiver qprime;
  Winding fprime;  // S -> Q'
  Winding g;       // Q' -> Q, with g o fprime = f
};

// Splits vertices by grading value: Q'_0 = {(F_0(i), d(i))}, Q'_1 from the
// (d(s a), d(t a), F_1(a)) triples. Fibers of g partition the Grassmannian
// count of f between those of fprime.
Refinement refine_winding(const Winding& f, const Grading& g);

// A nice grading separating some pair of domain vertices with equal image;
// nullopt iff the vertex map is injective.
std::optional<Grading> separating_grading_tree(const Winding& f);

// Band counterpart, built from the label maps rho(a) and their combinations;
// scans equal-image pairs by cyclic distance, closest first. Throws
// NotPrimitive on periodic bands.
std::optional<Grading> separating_grading_band(const Winding& b);

// Iterated separate-and-refine until the winding is vertex-injective, then a
// direct coordinate-subrepresentation count. Independent cross-check for
// euler_tree, and for euler_band at n = 1 (band n > 1: NotSupported).
Int fixed_point_count(const Winding& f, long long n, const DimVec& d);

}  // namespace qgr
