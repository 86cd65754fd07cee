#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic for monomials and monomial ideals in a polynomial ring
// K[x_1,...,x_n].  The field K is never materialized here; everything is
// integer exponent-vector combinatorics.

namespace micert {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments from the caller's side (wrong ring, zero/unit ideal where
// rejected, ...).
struct domain_error : error {
  using error::error;
};

// A theorem-backed internal invariant failed.  Reaching this is a bug, not a
// user error; the CLI maps it to exit code 2.
struct internal_error : error {
  using error::error;
};

struct overflow_error : error {
  using error::error;
};

// Ambient polynomial ring: a variable count and cosmetic names.  Variable
// identity is positional; names only matter for I/O.
struct Ring {
  int n = 0;
  std::vector<std::string> names;

  static Ring with_default_names(int n);
  static Ring with_names(std::vector<std::string> names);

  bool operator==(const Ring& other) const { return n == other.n; }
};

using Exponent = std::uint32_t;

// Monomial as an exponent vector of length Ring::n.  The unit monomial is
// all zeros.
struct Monomial {
  std::vector<Exponent> exps;

  Monomial() = default;
  explicit Monomial(std::vector<Exponent> e) : exps(std::move(e)) {}
  static Monomial one(int n) { return Monomial(std::vector<Exponent>(n, 0)); }

  int nvars() const { return static_cast<int>(exps.size()); }
  bool is_one() const;
  bool is_squarefree() const;
  std::uint64_t degree() const;
  std::vector<int> support() const;
  std::uint64_t support_mask() const;  // requires nvars() <= 63

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator<(const Monomial& o) const { return exps < o.exps; }
};

// Monomial prime ideal (x_j : j in vars).  Empty set = the zero prime (0).
struct PrimeIdealMono {
  std::vector<int> vars;  // sorted, 0-based

  PrimeIdealMono() = default;
  explicit PrimeIdealMono(std::vector<int> v);

  bool contains_var(int j) const;
  bool operator==(const PrimeIdealMono& o) const { return vars == o.vars; }
  bool operator<(const PrimeIdealMono& o) const { return vars < o.vars; }
  // P subset-or-equal Q as ideals.
  bool subset_of(const PrimeIdealMono& q) const;
};

Monomial mono_gcd(const Monomial& u, const Monomial& v);
Monomial mono_lcm(const Monomial& u, const Monomial& v);
// Overflow-checked product (exponent addition).
Monomial mono_mul(const Monomial& u, const Monomial& v);
Monomial mono_mul_var(const Monomial& u, int j, Exponent k = 1);
// u : v = u / gcd(u, v), componentwise max(u - v, 0).
Monomial mono_colon(const Monomial& u, const Monomial& v);
bool mono_divides(const Monomial& u, const Monomial& v);  // u | v
Monomial squarefree_of(const Monomial& u);

// Monomial ideal given by its unique minimal generating set G(I).  The list
// order is data: candidate admissible orders are communicated by position.
// gens empty = zero ideal; gens = {1} = unit ideal.
struct MonomialIdeal {
  Ring ring;
  std::vector<Monomial> gens;

  MonomialIdeal() = default;
  MonomialIdeal(Ring r, std::vector<Monomial> g);

  int nvars() const { return ring.n; }
  bool is_zero() const { return gens.empty(); }
  bool is_unit() const;
  std::size_t size() const { return gens.size(); }
  bool is_squarefree() const;

  bool operator==(const MonomialIdeal& o) const;
  // Equality as ideals: same minimal generators regardless of list order.
  bool equals_as_ideal(const MonomialIdeal& o) const;
};

// Removes every monomial divisible by another one, preserving first
// occurrence order.  Idempotent.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);
MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens);

MonomialIdeal ideal_colon(const MonomialIdeal& I, const Monomial& v);
bool membership(const MonomialIdeal& I, const Monomial& m);

// Ideal generated by the degree-a component of I, minimalized.
MonomialIdeal graded_component(const MonomialIdeal& I, std::uint64_t a);
// I^*: subsequence of G(I) consisting of the squarefree generators.
MonomialIdeal squarefree_part(const MonomialIdeal& I);
// I_[a] = squarefree part of I_<a>.
MonomialIdeal squarefree_component(const MonomialIdeal& I, std::uint64_t a);

// Inclusion-minimal variable subsets meeting the support of every generator.
// For squarefree I these are the minimal primes, and their products generate
// the Alexander dual.  Rejects the unit ideal; the zero ideal yields {(0)}.
std::vector<PrimeIdealMono> minimal_primes(const MonomialIdeal& I);

Monomial prime_monomial(const Ring& ring, const PrimeIdealMono& p);

// All monomials of total degree d in n variables, lexicographic.
std::vector<Monomial> monomials_of_degree(int n, std::uint64_t d);

void require_same_ring(const Monomial& u, const Monomial& v);

}  // namespace micert
