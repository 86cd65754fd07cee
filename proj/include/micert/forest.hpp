#pragma once

#include <optional>

#include "micert/core.hpp"

// Forest-type monomial ideals: generator leaves, minors, free variables, the
// free variable property, clutters and totally balanced incidence matrices.

namespace micert {

// Leaf of a generator subset: u_t with a branch u_j such that
// gcd(u_t, u_i) | gcd(u_t, u_j) for every other member.
struct GeneratorLeaf {
  std::size_t leaf = 0;                // position within the given subset
  std::optional<std::size_t> branch;   // empty only for singleton subsets
};

std::optional<GeneratorLeaf> generator_leaf(const std::vector<Monomial>& gens);

// Minor I_(X1,X2): X1-variables set to 0, X2-variables set to 1; the result
// lives in the ring on the remaining variables.
struct Minor {
  MonomialIdeal base;
  std::vector<int> x1, x2;          // sorted, disjoint
  MonomialIdeal result;             // in the restricted ring
  std::vector<int> kept_variables;  // result var i = base var kept_variables[i]
};

Minor minor(const MonomialIdeal& I, std::vector<int> x1, std::vector<int> x2);

// Same operation without shrinking the ring: erased variables simply stop
// occurring.  Used by the recursive decision procedures.
MonomialIdeal minor_same_ring(const MonomialIdeal& I, const std::vector<int>& x1,
                              const std::vector<int>& x2);

// Variables dividing exactly one generator.
std::vector<int> free_variables(const MonomialIdeal& I);

struct ForestTypeResult {
  bool forest_type = false;
  // on rejection: a subset of G(I) (generator indices) with no leaf, when one
  // exists
  std::vector<int> leafless_subset;
  // otherwise: generators of a minor of I with >= 2 generators, not
  // irreducible and without a free variable.  For squarefree ideals a
  // leafless subset always exists; for general monomial ideals it need not:
  // (a^2*b, a*b*c, b*c*d, c*d^2) has a leaf in every generator subset yet no
  // minor-recursion succeeds, so only this witness is available.
  std::vector<Monomial> no_free_variable_minor;
};

// Recursive decision through the class-of-ideals characterization: accept
// irreducible ideals and ideals with at most one generator, otherwise pick a
// free variable and recurse on both minors.  Memoized.  Equivalent to the
// every-subset-has-a-leaf condition for squarefree ideals (and to the free
// variable property in general); for arbitrary monomial ideals the
// subset-leaf condition is strictly weaker and is used as a test oracle only
// in the squarefree case.
ForestTypeResult is_forest_type(const MonomialIdeal& I);

// Naive oracle: checks every subset of the given generators for a leaf.
// Returns a leafless subset or nothing.
std::optional<std::vector<int>> leafless_subset_naive(const std::vector<Monomial>& gens);

// All minors of I with at least two generators have a free variable.
// Decided by direct enumeration of the 3^n minor assignments, independently
// of is_forest_type.
bool free_variable_property(const MonomialIdeal& I);

// 0/1 incidence matrix of a clutter (rows = vertices, columns = edges).
struct IncidenceMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<int>> entries;  // row-major
};

IncidenceMatrix incidence_matrix(const MonomialIdeal& clutter);

struct BalancedResult {
  bool balanced = false;
  // on failure: a square submatrix of order >= 3 with exactly two 1s in each
  // row and column
  std::vector<int> bad_rows, bad_cols;
};

BalancedResult totally_balanced(const IncidenceMatrix& M);

struct ClutterReport {
  bool forest = false;
  bool balanced = false;
  bool free_vertex_property = false;
  bool agree = false;
};

// Three independent procedures that must agree; disagreement throws.
ClutterReport clutter_equivalences(const MonomialIdeal& clutter);

}  // namespace micert
