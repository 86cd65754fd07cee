#pragma once

#include <optional>

#include "micert/core.hpp"
#include "micert/linear_quotients.hpp"
#include "micert/simplicial.hpp"

// Pretty clean filtrations, cleanness, Stanley decompositions, interval
// partitions and Hilbert series.

namespace micert {

// Chain certificate for I = I_0 c I_1 c ... c I_r = S with
// I_j = I + (v_1,...,v_j) and I_j/I_{j-1} iso S/P_j.  The colon identity
// (I_{j-1} : v_j) = P_j is the complete, checkable meaning of the
// isomorphism for monomial chains.
struct FiltrationStep {
  Monomial chain_monomial;
  PrimeIdealMono prime;
};

struct PrettyCleanFiltration {
  MonomialIdeal ideal;
  std::vector<FiltrationStep> steps;
};

struct FiltrationReport {
  bool valid = false;
  std::optional<int> failed_step;       // colon identity broken here (0-based)
  bool terminal_unit = false;           // I_r is the unit ideal
  bool condition_b = false;             // no earlier prime strictly inside a later one
  std::optional<std::pair<int, int>> offending_pair;
  bool is_clean = false;                // every prime is a minimal prime of I
};

FiltrationReport verify_filtration(const PrettyCleanFiltration& F);

// From a filtration of S/K and a pure power x_j^t with x_j regular over S/K
// (x_j occurs in no generator of K and no chain monomial), produce a
// filtration of S/(K, x_j^t): each source step (w, Q) expands to the slices
// (w x_j^s, Q + x_j) for s = t-1 down to 0.
PrettyCleanFiltration lift_pure_power(const PrettyCleanFiltration& FK, int var,
                                      Exponent t);

// Pretty clean filtration for a forest-type ideal, by recursion on a free
// variable.  The output always passes verify_filtration.
PrettyCleanFiltration construct_pretty_clean(const MonomialIdeal& I);

struct CleanResult {
  bool clean = false;
  LinearQuotientWitness dual_witness;  // admissible order of I^dual, or refusal
};

// Cleanness of a squarefree ideal through Alexander duality: clean iff the
// dual has linear quotients (Dress; Herzog-Hibi-Zheng).
CleanResult clean_squarefree(const MonomialIdeal& I);

struct StanleyPiece {
  Monomial head;
  std::vector<int> vars;  // Z: the piece is head * K[vars]
};

struct StanleyDecomposition {
  std::vector<StanleyPiece> pieces;
};

StanleyDecomposition stanley_from_filtration(const PrettyCleanFiltration& F);

// Hilbert series numerator over (1-t)^denominator_exponent.
struct HilbertSeries {
  std::vector<long long> numerator;  // coefficient of t^i at index i
  int denominator_exponent = 0;

  HilbertSeries normalized() const;  // cancel common (1-t) factors
  bool same_series(const HilbertSeries& o) const;
};

// Inclusion-exclusion over generator subsets:
// numerator = sum_{T subset G(I)} (-1)^|T| t^(deg lcm T).
HilbertSeries hilbert_series(const MonomialIdeal& I);
HilbertSeries piece_series(const StanleyDecomposition& D, int nvars);

struct StanleyReport {
  bool valid = false;
  std::optional<std::pair<int, int>> overlapping_pieces;
  std::optional<std::pair<int, int>> piece_meeting_ideal;  // (piece, generator)
  bool covers = false;  // Hilbert series equality
};

StanleyReport verify_stanley(const StanleyDecomposition& D, const MonomialIdeal& I);

// min |Z_i| >= depth(S/I)?  depth is supplied by the caller (Betti engine or
// a frozen fixture).
bool stanley_conjecture_check(const StanleyDecomposition& D, int depth);

// Interval partition of a simplicial complex: faces H with F_i <= H <= G_i,
// pairwise disjoint, covering every face.
struct Interval {
  Face lower = 0, upper = 0;
};

struct IntervalPartition {
  SimplicialComplex complex;
  std::vector<Interval> intervals;
};

struct PartitionReport {
  bool valid = false;
  std::optional<Face> uncovered_face;
  std::optional<Face> multiply_covered_face;
  std::optional<int> bad_interval;  // not an interval of the complex
};

PartitionReport verify_interval_partition(const IntervalPartition& P);

// Pieces (x_{F_i}, Z_{G_i}); a Stanley decomposition of S/I_Delta.
StanleyDecomposition partition_to_stanley(const IntervalPartition& P);

}  // namespace micert
