#pragma once

#include <optional>

#include "micert/core.hpp"
#include "micert/linear_quotients.hpp"

// Simplicial complexes on [n]: Stanley-Reisner and facet ideals, Alexander
// duality, facet skeletons, shellings (through the duality with linear
// quotients) and quasi-forest leaf orders.  Vertices are 0-based internally;
// I/O uses the 1-based convention.

namespace micert {

using Face = std::uint64_t;  // vertex bitmask, n <= 63

enum class VertexPolicy {
  Reject,         // a vertex in no facet is an error (default)
  AddSingletons,  // record it as a degenerate singleton facet
  AllowMissing,   // keep the facet list as given
};

struct SimplicialComplex {
  int n = 0;
  std::vector<Face> facets;  // pairwise non-containing; order significant

  std::size_t facet_count() const { return facets.size(); }
  int dim() const;  // max |F| - 1
  bool has_vertex(int v) const;
  bool is_face(Face f) const;
  std::vector<Face> all_faces() const;  // includes the empty face
};

int face_size(Face f);
std::vector<int> face_vertices(Face f);
Face face_from_vertices(const std::vector<int>& verts, int n);

SimplicialComplex make_complex(int n, const std::vector<Face>& facets,
                               VertexPolicy policy = VertexPolicy::Reject);

// I(Delta): one squarefree generator per facet, in facet order.
MonomialIdeal facet_ideal(const SimplicialComplex& delta, const Ring& ring);
MonomialIdeal facet_ideal(const SimplicialComplex& delta);
// I_Delta: minimal non-faces.
MonomialIdeal stanley_reisner(const SimplicialComplex& delta, const Ring& ring);
MonomialIdeal stanley_reisner(const SimplicialComplex& delta);
// The complex with I_Delta = I (facets are complements of the minimal primes).
SimplicialComplex complex_from_stanley_reisner(const MonomialIdeal& I);

// Alexander dual of a squarefree ideal: generators are the monomials of its
// minimal primes.  An involution on proper squarefree ideals.
MonomialIdeal dual_of_squarefree(const MonomialIdeal& I);

// I_{Delta^dual} = (prod_{j not in F_i} x_j), in facet order.  Rejects
// complexes containing the full simplex (their Stanley-Reisner ideal is 0).
MonomialIdeal dual_complex_generators(const SimplicialComplex& delta);

// i-fold facet skeleton: one step replaces each facet by its codimension-one
// subsets, minimalized.
SimplicialComplex facet_skeleton(const SimplicialComplex& delta, int i);

struct Shelling {
  SimplicialComplex complex;
  std::vector<int> order;                  // permutation of facet indices
  std::vector<std::vector<int>> restriction;  // R(F_k) per position, vertices
};

// Shelling via duality: an admissible order of the dual generators is a
// shelling order and the q-sets are the restriction sets.  The R-sets are
// re-verified against their combinatorial definition.
std::optional<Shelling> find_shelling(const SimplicialComplex& delta);

// Independent verifier: the direct Bjorner-Wachs condition plus the R-set
// definition, no ideal arithmetic involved.
bool verify_shelling_direct(const SimplicialComplex& delta,
                            const std::vector<int>& order);
std::vector<std::vector<int>> restriction_sets_direct(
    const SimplicialComplex& delta, const std::vector<int>& order);

// Dimension-non-increasing shelling induced by delta; R-sets are preserved.
Shelling rearranged_shelling(const Shelling& shelling);

// Quasi-forest recognition: backtracking peel of leaves.  The reversed
// removal order makes every facet a leaf of its predecessors.
std::optional<std::vector<int>> leaf_order(const SimplicialComplex& delta);

std::vector<int> free_vertices(const SimplicialComplex& delta, Face f);
// Leaf check for a facet; returns a branch when one exists (a single facet
// complex returns the facet itself).
std::optional<Face> is_leaf(const SimplicialComplex& delta, Face f);

}  // namespace micert
