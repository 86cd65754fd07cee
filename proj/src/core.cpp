#include "micert/core.hpp"

#include <algorithm>
#include <limits>

namespace micert {

Ring Ring::with_default_names(int n) {
  if (n < 1) throw domain_error("ring needs at least one variable");
  Ring r;
  r.n = n;
  r.names.reserve(n);
  for (int i = 0; i < n; ++i) r.names.push_back("x" + std::to_string(i + 1));
  return r;
}

Ring Ring::with_names(std::vector<std::string> names) {
  if (names.empty()) throw domain_error("ring needs at least one variable");
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw domain_error("variable names must be pairwise distinct");
  Ring r;
  r.n = static_cast<int>(names.size());
  r.names = std::move(names);
  return r;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps.begin(), exps.end(), [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps) d += e;
  return d;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < nvars(); ++i)
    if (exps[i] > 0) s.push_back(i);
  return s;
}

std::uint64_t Monomial::support_mask() const {
  if (nvars() > 63) throw domain_error("support_mask needs n <= 63");
  std::uint64_t m = 0;
  for (int i = 0; i < nvars(); ++i)
    if (exps[i] > 0) m |= (std::uint64_t{1} << i);
  return m;
}

PrimeIdealMono::PrimeIdealMono(std::vector<int> v) : vars(std::move(v)) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
}

bool PrimeIdealMono::contains_var(int j) const {
  return std::binary_search(vars.begin(), vars.end(), j);
}

bool PrimeIdealMono::subset_of(const PrimeIdealMono& q) const {
  return std::includes(q.vars.begin(), q.vars.end(), vars.begin(), vars.end());
}

void require_same_ring(const Monomial& u, const Monomial& v) {
  if (u.nvars() != v.nvars())
    throw domain_error("monomials live in different ambient rings");
}

Monomial mono_gcd(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  Monomial r = u;
  for (int i = 0; i < u.nvars(); ++i) r.exps[i] = std::min(u.exps[i], v.exps[i]);
  return r;
}

Monomial mono_lcm(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  Monomial r = u;
  for (int i = 0; i < u.nvars(); ++i) r.exps[i] = std::max(u.exps[i], v.exps[i]);
  return r;
}

Monomial mono_mul(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  Monomial r = u;
  for (int i = 0; i < u.nvars(); ++i) {
    if (r.exps[i] > std::numeric_limits<Exponent>::max() - v.exps[i])
      throw overflow_error("exponent overflow in monomial product");
    r.exps[i] += v.exps[i];
  }
  return r;
}

Monomial mono_mul_var(const Monomial& u, int j, Exponent k) {
  Monomial r = u;
  if (j < 0 || j >= u.nvars()) throw domain_error("variable index out of range");
  if (r.exps[j] > std::numeric_limits<Exponent>::max() - k)
    throw overflow_error("exponent overflow in monomial product");
  r.exps[j] += k;
  return r;
}

Monomial mono_colon(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  Monomial r = u;
  for (int i = 0; i < u.nvars(); ++i)
    r.exps[i] = u.exps[i] > v.exps[i] ? u.exps[i] - v.exps[i] : 0;
  return r;
}

bool mono_divides(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  for (int i = 0; i < u.nvars(); ++i)
    if (u.exps[i] > v.exps[i]) return false;
  return true;
}

Monomial squarefree_of(const Monomial& u) {
  Monomial r = u;
  for (Exponent& e : r.exps)
    if (e > 1) e = 1;
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!mono_divides(gens[j], gens[i])) continue;
      // strict divisor, or an equal duplicate seen earlier
      if (!(gens[j] == gens[i]) || j < i) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.nvars() != ring.n)
      throw domain_error("generator does not live in the given ring");
  return MonomialIdeal(ring, minimalize(std::move(gens)));
}

MonomialIdeal::MonomialIdeal(Ring r, std::vector<Monomial> g)
    : ring(std::move(r)), gens(std::move(g)) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].nvars() != ring.n)
      throw domain_error("generator does not live in the given ring");
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && mono_divides(gens[j], gens[i]))
        throw domain_error("generating set is not minimal");
  }
}

bool MonomialIdeal::is_unit() const {
  return gens.size() == 1 && gens[0].is_one();
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  return ring == o.ring && gens == o.gens;
}

bool MonomialIdeal::equals_as_ideal(const MonomialIdeal& o) const {
  if (!(ring == o.ring)) return false;
  std::vector<Monomial> a = gens, b = o.gens;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

MonomialIdeal ideal_colon(const MonomialIdeal& I, const Monomial& v) {
  std::vector<Monomial> cols;
  cols.reserve(I.gens.size());
  for (const Monomial& g : I.gens) cols.push_back(mono_colon(g, v));
  return minimalize(I.ring, std::move(cols));
}

bool membership(const MonomialIdeal& I, const Monomial& m) {
  return std::any_of(I.gens.begin(), I.gens.end(),
                     [&](const Monomial& g) { return mono_divides(g, m); });
}

std::vector<Monomial> monomials_of_degree(int n, std::uint64_t d) {
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(n);
  // distribute d among n slots, last slot takes the remainder
  auto rec = [&](auto&& self, int pos, std::uint64_t left) -> void {
    if (pos == n - 1) {
      cur.exps[pos] = static_cast<Exponent>(left);
      out.push_back(cur);
      cur.exps[pos] = 0;
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      cur.exps[pos] = static_cast<Exponent>(e);
      self(self, pos + 1, left - e);
    }
    cur.exps[pos] = 0;
  };
  rec(rec, 0, d);
  return out;
}

MonomialIdeal graded_component(const MonomialIdeal& I, std::uint64_t a) {
  std::vector<Monomial> comp;
  for (const Monomial& g : I.gens) {
    std::uint64_t dg = g.degree();
    if (dg > a) continue;
    for (const Monomial& m : monomials_of_degree(I.nvars(), a - dg))
      comp.push_back(mono_mul(g, m));
  }
  return minimalize(I.ring, std::move(comp));
}

MonomialIdeal squarefree_part(const MonomialIdeal& I) {
  std::vector<Monomial> sf;
  for (const Monomial& g : I.gens)
    if (g.is_squarefree()) sf.push_back(g);
  return MonomialIdeal(I.ring, std::move(sf));
}

MonomialIdeal squarefree_component(const MonomialIdeal& I, std::uint64_t a) {
  return squarefree_part(graded_component(I, a));
}

namespace {

// Enumerate minimal covers of the generator supports by branching on the
// first uncovered support.
void covers_rec(const std::vector<std::uint64_t>& supports, std::uint64_t chosen,
                std::size_t next, std::vector<std::uint64_t>& found) {
  while (next < supports.size() && (supports[next] & chosen)) ++next;
  if (next == supports.size()) {
    found.push_back(chosen);
    return;
  }
  std::uint64_t s = supports[next];
  while (s) {
    std::uint64_t bit = s & (~s + 1);
    covers_rec(supports, chosen | bit, next + 1, found);
    s &= s - 1;
  }
}

}  // namespace

std::vector<PrimeIdealMono> minimal_primes(const MonomialIdeal& I) {
  if (I.is_unit()) throw domain_error("unit ideal has no minimal primes");
  if (I.nvars() > 63) throw domain_error("minimal_primes needs n <= 63");
  std::vector<std::uint64_t> supports;
  supports.reserve(I.gens.size());
  for (const Monomial& g : I.gens) supports.push_back(g.support_mask());
  std::vector<std::uint64_t> raw;
  covers_rec(supports, 0, 0, raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t c : raw) {
    bool is_min = true;
    for (std::uint64_t d : raw)
      if (d != c && (d & ~c) == 0) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(c);
  }
  std::vector<PrimeIdealMono> out;
  out.reserve(minimal.size());
  for (std::uint64_t c : minimal) {
    std::vector<int> vars;
    for (int j = 0; j < I.nvars(); ++j)
      if (c & (std::uint64_t{1} << j)) vars.push_back(j);
    out.emplace_back(std::move(vars));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Monomial prime_monomial(const Ring& ring, const PrimeIdealMono& p) {
  Monomial m = Monomial::one(ring.n);
  for (int j : p.vars) m.exps.at(j) = 1;
  return m;
}

}  // namespace micert
