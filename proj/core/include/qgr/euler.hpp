#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qgr/module_expr.hpp"

namespace qgr {

// Euler characteristics of quiver Grassmannians and flag varieties of tree
// and band modules; everything is counted combinatorially.

// Data the band formula depends on: cyclic signs (t(s_i^{eps_i}) = i), the
// cyclic dimension tuple and the multiplicity. Positions are 0-based;
// position p is a source iff (eps[p-1], eps[p]) = (+1, -1) and a sink iff
// (-1, +1), indices mod l.
struct BandProfile {
  std::vector<int> eps;
  std::vector<long long> t;
  long long n = 1;

  int length() const { return static_cast<int>(eps.size()); }
  std::vector<int> sources() const;
  std::vector<int> sinks() const;
};

BandProfile band_profile(const CycleLabeling& lab, const DimVec& t_domain, long long n);

// Product formula for chi_t of a band module, evaluated in exact rational
// arithmetic with the conventions 0! = 1 and r! = 0, 1/r! = 0 for negative r
// (any negative factorial annihilates the term). Asserts integrality.
Int band_formula(const BandProfile& p);

// Independent evaluation of the same quantity: peel the first source and
// reduce to Euler characteristics of direct sums of string modules on
// subpaths of the cycle, convolved Riedtmann-style. Oriented cycles (r = 0)
// fall back to the unique-filtration count.
Int band_recursion_oracle(const BandProfile& p);

// Number of successor-closed vertex subsets R of the tree domain with
// pushforward dimension vector d.
Int euler_tree(const Winding& f, const DimVec& d);

// Sum of band_formula over the fiber of d under the dimension pushforward,
// bounded by n per domain vertex. Independent of the band parameter.
Int euler_band(const Winding& b, long long n, const DimVec& d);

// Riedtmann convolution over the summands. Entries of d outside [0, dim M]
// give 0 (convolution callers generate such vectors).
Int euler_module(const ModuleExpr& m, const DimVec& d);

// Chains R^(1) <= ... <= R^(r) of successor-closed subsets with the given
// pushforward dimension vectors.
Int euler_flag_tree(const Winding& f, const std::vector<DimVec>& dims);

// Multi-index convolution; all summands must be trees, except for a single
// band term over the Kronecker quiver which reduces through
// kronecker_band_flag. Anything else: UnsupportedBandFlag.
Int euler_flag_module(const ModuleExpr& m, const std::vector<DimVec>& dims);

// Flag Euler characteristic of the Kronecker band module of multiplicity n,
// computed on the zig-zag string quiver T^(n) (parameter-shift reduction).
Int kronecker_band_flag(const Quiver& kronecker, long long n, const std::vector<DimVec>& dims);

// The zig-zag winding T^(n) itself (2n vertices over the Kronecker quiver).
Winding kronecker_zigzag(const Quiver& kronecker, long long n);

// Internal engines, exposed for the gradings/hall modules and the test
// suites. All work on arbitrary domains (trees, forests, cycles).
Int count_successor_closed(const Winding& w, const DimVec& d, Budget& budget);
void for_each_successor_closed(const Winding& w, const DimVec& d, Budget& budget,
                               const std::function<void(const std::vector<char>&)>& fn);
std::map<DimVec, Int> successor_closed_table(const Winding& w, const DimVec& cap, Budget& budget);

}  // namespace qgr
