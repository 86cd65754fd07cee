#include "micert/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

namespace micert {

int face_size(Face f) { return std::popcount(f); }

std::vector<int> face_vertices(Face f) {
  std::vector<int> v;
  for (int i = 0; i < 64; ++i)
    if (f & (Face{1} << i)) v.push_back(i);
  return v;
}

Face face_from_vertices(const std::vector<int>& verts, int n) {
  Face f = 0;
  for (int v : verts) {
    if (v < 0 || v >= n) throw domain_error("vertex out of range");
    f |= Face{1} << v;
  }
  return f;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (Face f : facets) d = std::max(d, face_size(f) - 1);
  return d;
}

bool SimplicialComplex::has_vertex(int v) const {
  Face bit = Face{1} << v;
  return std::any_of(facets.begin(), facets.end(),
                     [&](Face f) { return (f & bit) != 0; });
}

bool SimplicialComplex::is_face(Face f) const {
  return std::any_of(facets.begin(), facets.end(),
                     [&](Face g) { return (f & ~g) == 0; });
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::set<Face> seen;
  for (Face f : facets) {
    Face sub = f;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// keep only inclusion-maximal faces, first occurrence order
std::vector<Face> maximalize(const std::vector<Face>& faces) {
  std::vector<Face> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < faces.size() && !dominated; ++j) {
      if (i == j) continue;
      if ((faces[i] & ~faces[j]) != 0) continue;  // faces[i] not subset of faces[j]
      if (faces[i] != faces[j] || j < i) dominated = true;
    }
    if (!dominated) out.push_back(faces[i]);
  }
  return out;
}

}  // namespace

SimplicialComplex make_complex(int n, const std::vector<Face>& facets,
                               VertexPolicy policy) {
  if (n < 1 || n > 63) throw domain_error("vertex count must be in [1, 63]");
  Face full = (n == 63) ? ~Face{0} >> 1 : (Face{1} << n) - 1;
  for (Face f : facets)
    if (f & ~full) throw domain_error("facet contains a vertex outside [n]");
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (i != j && (facets[i] & ~facets[j]) == 0)
        throw domain_error("facets must be pairwise non-containing");

  SimplicialComplex delta;
  delta.n = n;
  delta.facets = facets;
  Face covered = 0;
  for (Face f : facets) covered |= f;
  if (covered != full) {
    switch (policy) {
      case VertexPolicy::Reject:
        throw domain_error("some vertex lies in no facet");
      case VertexPolicy::AddSingletons:
        for (int v = 0; v < n; ++v)
          if (!(covered & (Face{1} << v))) delta.facets.push_back(Face{1} << v);
        break;
      case VertexPolicy::AllowMissing:
        break;
    }
  }
  return delta;
}

MonomialIdeal facet_ideal(const SimplicialComplex& delta, const Ring& ring) {
  if (ring.n != delta.n) throw domain_error("ring does not match the vertex set");
  std::vector<Monomial> gens;
  for (Face f : delta.facets) {
    Monomial m = Monomial::one(delta.n);
    for (int v : face_vertices(f)) m.exps[v] = 1;
    gens.push_back(m);
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal facet_ideal(const SimplicialComplex& delta) {
  return facet_ideal(delta, Ring::with_default_names(delta.n));
}

MonomialIdeal stanley_reisner(const SimplicialComplex& delta, const Ring& ring) {
  if (ring.n != delta.n) throw domain_error("ring does not match the vertex set");
  // minimal non-faces = minimal transversals of the facet complements
  Face full = (delta.n == 63) ? ~Face{0} >> 1 : (Face{1} << delta.n) - 1;
  std::vector<Monomial> comp_gens;
  for (Face f : delta.facets) {
    Face c = full & ~f;
    if (c == 0) return MonomialIdeal(ring, {});  // full simplex: I_Delta = 0
    Monomial m = Monomial::one(delta.n);
    for (int v : face_vertices(c)) m.exps[v] = 1;
    comp_gens.push_back(m);
  }
  MonomialIdeal complements = minimalize(ring, std::move(comp_gens));
  std::vector<Monomial> gens;
  for (const PrimeIdealMono& p : minimal_primes(complements))
    gens.push_back(prime_monomial(ring, p));
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal stanley_reisner(const SimplicialComplex& delta) {
  return stanley_reisner(delta, Ring::with_default_names(delta.n));
}

SimplicialComplex complex_from_stanley_reisner(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw domain_error("Stanley-Reisner ideals are squarefree");
  if (I.is_unit()) throw domain_error("the unit ideal is not a Stanley-Reisner ideal");
  int n = I.nvars();
  Face full = (n == 63) ? ~Face{0} >> 1 : (Face{1} << n) - 1;
  if (I.is_zero()) return make_complex(n, {full});
  std::vector<Face> facets;
  for (const PrimeIdealMono& p : minimal_primes(I)) {
    Face f = full;
    for (int v : p.vars) f &= ~(Face{1} << v);
    facets.push_back(f);
  }
  return make_complex(n, facets, VertexPolicy::AllowMissing);
}

MonomialIdeal dual_of_squarefree(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw domain_error("Alexander dual needs a squarefree ideal");
  if (I.is_zero() || I.is_unit())
    throw domain_error("Alexander dual needs a proper nonzero ideal");
  std::vector<Monomial> gens;
  for (const PrimeIdealMono& p : minimal_primes(I))
    gens.push_back(prime_monomial(I.ring, p));
  return MonomialIdeal(I.ring, std::move(gens));
}

MonomialIdeal dual_complex_generators(const SimplicialComplex& delta) {
  Ring ring = Ring::with_default_names(delta.n);
  Face full = (delta.n == 63) ? ~Face{0} >> 1 : (Face{1} << delta.n) - 1;
  std::vector<Monomial> gens;
  for (Face f : delta.facets) {
    Face c = full & ~f;
    if (c == 0)
      throw domain_error("complex contains the full simplex; its dual degenerates");
    Monomial m = Monomial::one(delta.n);
    for (int v : face_vertices(c)) m.exps[v] = 1;
    gens.push_back(m);
  }
  return MonomialIdeal(ring, std::move(gens));
}

SimplicialComplex facet_skeleton(const SimplicialComplex& delta, int i) {
  if (i < 1 || i > delta.dim() + 1)
    throw domain_error("facet skeleton index out of range");
  SimplicialComplex cur = delta;
  for (int step = 0; step < i; ++step) {
    std::vector<Face> subs;
    for (Face f : cur.facets) {
      std::vector<int> verts = face_vertices(f);
      for (auto it = verts.rbegin(); it != verts.rend(); ++it)
        subs.push_back(f & ~(Face{1} << *it));
    }
    cur.facets = maximalize(subs);
  }
  return cur;
}

std::vector<std::vector<int>> restriction_sets_direct(
    const SimplicialComplex& delta, const std::vector<int>& order) {
  std::vector<std::vector<int>> rsets(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    Face fk = delta.facets[order[k]];
    for (int v : face_vertices(fk)) {
      Face codim = fk & ~(Face{1} << v);
      bool in_prev = false;
      for (std::size_t j = 0; j < k && !in_prev; ++j)
        if ((codim & ~delta.facets[order[j]]) == 0) in_prev = true;
      if (in_prev) rsets[k].push_back(v);
    }
  }
  return rsets;
}

bool verify_shelling_direct(const SimplicialComplex& delta,
                            const std::vector<int>& order) {
  std::vector<std::vector<int>> rsets = restriction_sets_direct(delta, order);
  for (std::size_t k = 1; k < order.size(); ++k) {
    Face fk = delta.facets[order[k]];
    (void)fk;
    for (std::size_t j = 0; j < k; ++j) {
      Face fj = delta.facets[order[j]];
      bool ok = std::any_of(rsets[k].begin(), rsets[k].end(), [&](int v) {
        return (fj & (Face{1} << v)) == 0;
      });
      if (!ok) return false;
    }
  }
  return true;
}

std::optional<Shelling> find_shelling(const SimplicialComplex& delta) {
  if (delta.facets.empty()) throw domain_error("complex needs at least one facet");
  Shelling sh;
  sh.complex = delta;
  if (delta.facets.size() == 1) {  // a single facet is trivially shellable
    sh.order = {0};
    sh.restriction = {{}};
    return sh;
  }
  MonomialIdeal dual = dual_complex_generators(delta);
  LinearQuotientWitness w = find_admissible_order(dual);
  if (!has_witness(w)) return std::nullopt;
  const AdmissibleOrder& sigma = std::get<AdmissibleOrder>(w);
  sh.order = sigma.order;       // generator i <-> facet i, positionally
  sh.restriction = sigma.qsets; // q-set variables are restriction vertices
  if (sh.restriction != restriction_sets_direct(delta, sh.order))
    throw internal_error("q-sets disagree with the combinatorial R-sets");
  if (!verify_shelling_direct(delta, sh.order))
    throw internal_error("dual admissible order failed the direct shelling check");
  return sh;
}

Shelling rearranged_shelling(const Shelling& shelling) {
  const SimplicialComplex& delta = shelling.complex;
  if (delta.facets.size() == 1) return shelling;
  MonomialIdeal dual = dual_complex_generators(delta);
  CheckResult chk = check_admissible(dual, shelling.order);
  if (!std::holds_alternative<AdmissibleOrder>(chk))
    throw domain_error("input is not a shelling");
  AdmissibleOrder prime = rearrange_degree_increasing(std::get<AdmissibleOrder>(chk));
  Shelling out;
  out.complex = delta;
  out.order = prime.order;
  out.restriction = prime.qsets;
  if (out.restriction != restriction_sets_direct(delta, out.order))
    throw internal_error("rearranged shelling changed some restriction set");
  return out;
}

std::optional<Face> is_leaf(const SimplicialComplex& delta, Face f) {
  auto it = std::find(delta.facets.begin(), delta.facets.end(), f);
  if (it == delta.facets.end()) throw domain_error("not a facet of the complex");
  if (delta.facets.size() == 1) return f;
  for (Face g : delta.facets) {
    if (g == f) continue;
    bool branch = true;
    for (Face h : delta.facets) {
      if (h == f) continue;
      if (((f & h) & ~(f & g)) != 0) {
        branch = false;
        break;
      }
    }
    if (branch) return g;
  }
  return std::nullopt;
}

std::vector<int> free_vertices(const SimplicialComplex& delta, Face f) {
  if (std::find(delta.facets.begin(), delta.facets.end(), f) == delta.facets.end())
    throw domain_error("not a facet of the complex");
  Face others = 0;
  for (Face g : delta.facets)
    if (g != f) others |= g;
  return face_vertices(f & ~others);
}

std::optional<std::vector<int>> leaf_order(const SimplicialComplex& delta) {
  const std::size_t m = delta.facets.size();
  if (m > 63) throw domain_error("leaf_order needs at most 63 facets");
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> reversed;

  auto sub_leaf = [&](std::uint64_t mask, int idx) -> bool {
    // leaf check within the subcomplex spanned by mask
    if (std::popcount(mask) == 1) return true;
    Face f = delta.facets[idx];
    for (std::size_t j = 0; j < m; ++j) {
      if (!(mask & (std::uint64_t{1} << j)) || static_cast<int>(j) == idx) continue;
      Face g = delta.facets[j];
      bool branch = true;
      for (std::size_t h = 0; h < m && branch; ++h) {
        if (!(mask & (std::uint64_t{1} << h)) || static_cast<int>(h) == idx) continue;
        if (((f & delta.facets[h]) & ~(f & g)) != 0) branch = false;
      }
      if (branch) return true;
    }
    return false;
  };

  auto peel = [&](auto&& self, std::uint64_t mask) -> bool {
    if (mask == 0) return true;
    if (dead.count(mask)) return false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      if (!sub_leaf(mask, static_cast<int>(i))) continue;
      reversed.push_back(static_cast<int>(i));
      if (self(self, mask & ~(std::uint64_t{1} << i))) return true;
      reversed.pop_back();
    }
    dead.insert(mask);
    return false;
  };

  std::uint64_t all = (m == 63) ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << m) - 1;
  if (!peel(peel, all)) return std::nullopt;
  return std::vector<int>(reversed.rbegin(), reversed.rend());
}

}  // namespace micert
