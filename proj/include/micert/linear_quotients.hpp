#pragma once

#include <map>
#include <optional>
#include <variant>

#include "micert/core.hpp"

// Linear quotients: admissible-order checking and search, q-sets, the
// degree-increasing rearrangement, m*I orders, componentwise linear
// quotients and squarefree-part orders.

namespace micert {

// An order u_1,...,u_m of G(I) is admissible when each colon ideal
// (u_1,...,u_{i-1}) : u_i is generated by variables; those variables are the
// q-set of position i.
struct AdmissibleOrder {
  MonomialIdeal ideal;
  std::vector<int> order;              // permutation of generator indices
  std::vector<std::vector<int>> qsets; // per position; qsets[0] is empty

  const Monomial& gen_at(std::size_t pos) const { return ideal.gens[order[pos]]; }
  // q-set keyed by the generator (original index), not by position.
  std::map<int, std::vector<int>> qsets_by_generator() const;
};

struct AdmissibleFailure {
  int position = 0;       // first bad position (0-based)
  Monomial offending;     // a colon generator of degree >= 2
};

// Refusals are only ever produced by exhausting the backtracking search.
struct Refusal {
  std::uint64_t prefixes_explored = 0;
};

using CheckResult = std::variant<AdmissibleOrder, AdmissibleFailure>;
using LinearQuotientWitness = std::variant<AdmissibleOrder, Refusal>;

inline bool has_witness(const LinearQuotientWitness& w) {
  return std::holds_alternative<AdmissibleOrder>(w);
}

CheckResult check_admissible(const MonomialIdeal& I, const std::vector<int>& order);

// Depth-first backtracking over admissible prefixes with dead-prefix
// memoization keyed on the set of chosen generators.  Greedy extension is not
// assumed complete; refusals mean the whole tree was exhausted.  Candidate
// extensions are tried in (degree, index) order, so runs are reproducible.
LinearQuotientWitness find_admissible_order(const MonomialIdeal& I);

// Degree-increasing admissible order induced by sigma (stable insertion of
// each generator after all earlier ones of degree <= its own).
AdmissibleOrder rearrange_degree_increasing(const AdmissibleOrder& sigma);

// q_{u,sigma}(I) == q_{u,sigma'}(I) for every generator u; a theorem check
// that must always come back true.
bool qset_invariance(const AdmissibleOrder& sigma);

// m*I where m = (x_1,...,x_n).
MonomialIdeal m_times_ideal(const MonomialIdeal& I);

// Admissible order of G(m*I) built from a degree-increasing admissible order
// of G(I): survivors u_i x_j ordered lexicographically by (i, j).
AdmissibleOrder m_times_order(const AdmissibleOrder& sigma);

struct ComponentWitness {
  MonomialIdeal component;
  LinearQuotientWitness witness;
};

struct ComponentwiseResult {
  // one entry per degree in [min deg, max deg] with a nonzero component
  std::map<std::uint64_t, ComponentWitness> components;
  bool all_linear = false;
  // degrees above max deg are covered by the m*I closure, not by search
  std::uint64_t closure_from_degree = 0;
};

ComponentwiseResult componentwise_lq(const MonomialIdeal& I);

struct AssemblyResult {
  std::optional<AdmissibleOrder> order;
  // set when some component order violates the initial-part hypothesis
  std::optional<std::uint64_t> failed_degree;
};

// Concatenates component orders (sorted by degree, then by component
// position) into an admissible order of G(I).  Each component order must be
// admissible and have G(m * I_<a-1>) as its initial part.
AssemblyResult assemble_from_components(
    const MonomialIdeal& I,
    const std::map<std::uint64_t, AdmissibleOrder>& component_orders);

// Subsequence of sigma consisting of the squarefree generators; admissible
// for I^*.
AdmissibleOrder squarefree_part_order(const AdmissibleOrder& sigma);

}  // namespace micert
