#include "micert/filtration.hpp"

#include <algorithm>

#include "micert/forest.hpp"

namespace micert {

namespace {

MonomialIdeal prime_as_ideal(const Ring& ring, const PrimeIdealMono& p) {
  std::vector<Monomial> gens;
  for (int v : p.vars) {
    Monomial m = Monomial::one(ring.n);
    m.exps[v] = 1;
    gens.push_back(m);
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal add_generator(const MonomialIdeal& I, const Monomial& v) {
  std::vector<Monomial> gens = I.gens;
  gens.push_back(v);
  return minimalize(I.ring, std::move(gens));
}

}  // namespace

FiltrationReport verify_filtration(const PrettyCleanFiltration& F) {
  FiltrationReport rep;
  MonomialIdeal cur = F.ideal;
  for (std::size_t j = 0; j < F.steps.size(); ++j) {
    MonomialIdeal colon = ideal_colon(cur, F.steps[j].chain_monomial);
    if (!colon.equals_as_ideal(prime_as_ideal(F.ideal.ring, F.steps[j].prime))) {
      rep.failed_step = static_cast<int>(j);
      return rep;
    }
    cur = add_generator(cur, F.steps[j].chain_monomial);
  }
  rep.terminal_unit = cur.is_unit();

  rep.condition_b = true;
  for (std::size_t i = 0; i + 1 < F.steps.size() && rep.condition_b; ++i)
    for (std::size_t j = i + 1; j < F.steps.size(); ++j) {
      const PrimeIdealMono &pi = F.steps[i].prime, &pj = F.steps[j].prime;
      if (pi.subset_of(pj) && !(pi == pj)) {
        rep.condition_b = false;
        rep.offending_pair = {static_cast<int>(i), static_cast<int>(j)};
        break;
      }
    }
  rep.valid = rep.terminal_unit && rep.condition_b;

  if (rep.valid) {
    if (F.ideal.is_unit()) {
      rep.is_clean = true;
    } else {
      std::vector<PrimeIdealMono> minimal = minimal_primes(F.ideal);
      rep.is_clean = std::all_of(
          F.steps.begin(), F.steps.end(), [&](const FiltrationStep& s) {
            return std::find(minimal.begin(), minimal.end(), s.prime) !=
                   minimal.end();
          });
    }
  }
  return rep;
}

PrettyCleanFiltration lift_pure_power(const PrettyCleanFiltration& FK, int var,
                                      Exponent t) {
  if (t == 0) throw domain_error("lift needs a positive power");
  for (const Monomial& g : FK.ideal.gens)
    if (g.exps.at(var) > 0)
      throw domain_error("lift variable occurs in a generator of K");
  for (const FiltrationStep& s : FK.steps)
    if (s.chain_monomial.exps.at(var) > 0)
      throw domain_error("lift variable occurs in a chain monomial");

  PrettyCleanFiltration out;
  Monomial power = Monomial::one(FK.ideal.nvars());
  power.exps[var] = t;
  out.ideal = add_generator(FK.ideal, power);
  for (const FiltrationStep& s : FK.steps) {
    std::vector<int> vars = s.prime.vars;
    vars.push_back(var);
    PrimeIdealMono prime(vars);
    for (Exponent sdeg = t; sdeg-- > 0;)
      out.steps.push_back({mono_mul_var(s.chain_monomial, var, sdeg), prime});
  }
  FiltrationReport rep = verify_filtration(out);
  if (!rep.valid) throw internal_error("pure-power lift produced an invalid chain");
  return out;
}

namespace {

struct Candidate {
  int var;        // free variable
  int gen;        // the generator it divides
};

std::optional<std::vector<FiltrationStep>> construct_impl(const Ring& ring,
                                                          const MonomialIdeal& I);

// the two recursive branches for the free variable x_v of generator u
std::optional<std::vector<FiltrationStep>> construct_with(const Ring& ring,
                                                          const MonomialIdeal& I,
                                                          int v, int gen_idx) {
  const Monomial& u = I.gens[gen_idx];
  Exponent t = u.exps[v];
  Monomial ubar = u;
  ubar.exps[v] = 0;

  // J/I iso S/(I : ubar); split I : ubar as (K'', x_v^t) with K'' free of x_v
  std::vector<Monomial> k2_gens;
  for (std::size_t i = 0; i < I.gens.size(); ++i)
    if (static_cast<int>(i) != gen_idx) k2_gens.push_back(mono_colon(I.gens[i], ubar));
  MonomialIdeal K2 = minimalize(ring, std::move(k2_gens));

  std::vector<Monomial> j_gens;
  for (const Monomial& g : I.gens) {
    Monomial h = g;
    h.exps[v] = 0;
    j_gens.push_back(h);
  }
  MonomialIdeal J = minimalize(ring, std::move(j_gens));

  auto FK = construct_impl(ring, K2);
  if (!FK) return std::nullopt;
  auto FJ = construct_impl(ring, J);
  if (!FJ) return std::nullopt;

  std::vector<FiltrationStep> steps;
  for (const FiltrationStep& s : *FK) {
    std::vector<int> vars = s.prime.vars;
    vars.push_back(v);
    PrimeIdealMono prime(vars);
    for (Exponent sdeg = t; sdeg-- > 0;)
      steps.push_back({mono_mul(ubar, mono_mul_var(s.chain_monomial, v, sdeg)), prime});
  }
  for (const FiltrationStep& s : *FJ) {
    if (s.prime.contains_var(v))
      throw internal_error("free variable leaked into the upper segment");
    steps.push_back(s);
  }
  return steps;
}

std::optional<std::vector<FiltrationStep>> construct_impl(const Ring& ring,
                                                          const MonomialIdeal& I) {
  if (I.is_zero()) return std::vector<FiltrationStep>{{Monomial::one(ring.n), {}}};
  if (I.is_unit()) return std::vector<FiltrationStep>{};

  bool irreducible = std::all_of(I.gens.begin(), I.gens.end(), [](const Monomial& g) {
    return g.support().size() == 1;
  });
  if (irreducible) {
    PrettyCleanFiltration cur;
    cur.ideal = MonomialIdeal(ring, {});
    cur.steps = {{Monomial::one(ring.n), {}}};
    for (const Monomial& g : I.gens) {
      int v = g.support()[0];
      cur = lift_pure_power(cur, v, g.exps[v]);
    }
    return cur.steps;
  }

  // free variables, preferring generators of maximal degree; deterministic
  std::vector<Candidate> candidates;
  for (int v = 0; v < ring.n; ++v) {
    int count = 0, owner = -1;
    for (std::size_t i = 0; i < I.gens.size(); ++i)
      if (I.gens[i].exps[v] > 0) {
        ++count;
        owner = static_cast<int>(i);
      }
    if (count == 1) candidates.push_back({v, owner});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const Candidate& a, const Candidate& b) {
                     std::uint64_t da = I.gens[a.gen].degree();
                     std::uint64_t db = I.gens[b.gen].degree();
                     if (da != db) return da > db;
                     if (a.gen != b.gen) return a.gen < b.gen;
                     return a.var < b.var;
                   });
  for (const Candidate& c : candidates) {
    auto steps = construct_with(ring, I, c.var, c.gen);
    if (!steps) continue;
    PrettyCleanFiltration F{I, *steps};
    if (verify_filtration(F).valid) return steps;
  }
  return std::nullopt;
}

}  // namespace

PrettyCleanFiltration construct_pretty_clean(const MonomialIdeal& I) {
  PrettyCleanFiltration F;
  F.ideal = I;
  if (I.is_zero() || I.is_unit()) {
    auto steps = construct_impl(I.ring, I);
    F.steps = *steps;
    return F;
  }
  if (!is_forest_type(I).forest_type)
    throw domain_error("pretty clean construction needs a forest-type ideal");
  auto steps = construct_impl(I.ring, I);
  if (!steps) throw internal_error("pretty clean recursion got stuck");
  F.steps = *steps;
  FiltrationReport rep = verify_filtration(F);
  if (!rep.valid) throw internal_error("constructed filtration failed verification");
  return F;
}

CleanResult clean_squarefree(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw domain_error("cleanness check needs a squarefree ideal");
  CleanResult res;
  res.dual_witness = find_admissible_order(dual_of_squarefree(I));
  res.clean = has_witness(res.dual_witness);
  return res;
}

StanleyDecomposition stanley_from_filtration(const PrettyCleanFiltration& F) {
  if (!verify_filtration(F).valid)
    throw domain_error("cannot read a Stanley decomposition off an invalid chain");
  StanleyDecomposition D;
  for (const FiltrationStep& s : F.steps) {
    StanleyPiece p;
    p.head = s.chain_monomial;
    for (int v = 0; v < F.ideal.nvars(); ++v)
      if (!s.prime.contains_var(v)) p.vars.push_back(v);
    D.pieces.push_back(std::move(p));
  }
  return D;
}

HilbertSeries HilbertSeries::normalized() const {
  HilbertSeries out = *this;
  while (!out.numerator.empty() && out.numerator.back() == 0)
    out.numerator.pop_back();
  while (out.denominator_exponent > 0) {
    long long sum = 0;
    for (long long c : out.numerator) sum += c;
    if (sum != 0 || out.numerator.empty()) break;
    // divide by (1 - t): q_i = sum of p_0..p_i
    std::vector<long long> q(out.numerator.size() ? out.numerator.size() - 1 : 0, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < out.numerator.size(); ++i) {
      acc += out.numerator[i];
      q[i] = acc;
    }
    out.numerator = std::move(q);
    --out.denominator_exponent;
    while (!out.numerator.empty() && out.numerator.back() == 0)
      out.numerator.pop_back();
  }
  return out;
}

bool HilbertSeries::same_series(const HilbertSeries& o) const {
  HilbertSeries a = normalized(), b = o.normalized();
  return a.denominator_exponent == b.denominator_exponent && a.numerator == b.numerator;
}

HilbertSeries hilbert_series(const MonomialIdeal& I) {
  if (I.gens.size() > 25)
    throw domain_error("inclusion-exclusion limited to 25 generators");
  HilbertSeries H;
  H.denominator_exponent = I.nvars();
  std::vector<long long>& num = H.numerator;
  auto bump = [&](std::uint64_t deg, long long val) {
    if (num.size() <= deg) num.resize(deg + 1, 0);
    num[static_cast<std::size_t>(deg)] += val;
  };
  auto rec = [&](auto&& self, std::size_t i, const Monomial& lcm, long long sign) -> void {
    if (i == I.gens.size()) {
      bump(lcm.degree(), sign);
      return;
    }
    self(self, i + 1, lcm, sign);
    self(self, i + 1, mono_lcm(lcm, I.gens[i]), -sign);
  };
  rec(rec, 0, Monomial::one(I.nvars()), 1);
  return H;
}

HilbertSeries piece_series(const StanleyDecomposition& D, int nvars) {
  HilbertSeries H;
  H.denominator_exponent = nvars;
  for (const StanleyPiece& p : D.pieces) {
    int codim = nvars - static_cast<int>(p.vars.size());
    // t^(deg head) * (1-t)^codim
    std::vector<long long> term(1, 1);
    for (int k = 0; k < codim; ++k) {
      std::vector<long long> next(term.size() + 1, 0);
      for (std::size_t i = 0; i < term.size(); ++i) {
        next[i] += term[i];
        next[i + 1] -= term[i];
      }
      term = std::move(next);
    }
    std::uint64_t shift = p.head.degree();
    if (H.numerator.size() < term.size() + shift)
      H.numerator.resize(term.size() + shift, 0);
    for (std::size_t i = 0; i < term.size(); ++i)
      H.numerator[i + shift] += term[i];
  }
  return H;
}

StanleyReport verify_stanley(const StanleyDecomposition& D, const MonomialIdeal& I) {
  StanleyReport rep;
  // each piece must avoid I
  for (std::size_t p = 0; p < D.pieces.size(); ++p) {
    const StanleyPiece& piece = D.pieces[p];
    for (std::size_t g = 0; g < I.gens.size(); ++g) {
      Monomial rest = mono_colon(I.gens[g], piece.head);
      std::vector<int> supp = rest.support();
      bool inside = std::all_of(supp.begin(), supp.end(), [&](int v) {
        return std::find(piece.vars.begin(), piece.vars.end(), v) != piece.vars.end();
      });
      if (inside) {
        rep.piece_meeting_ideal = {static_cast<int>(p), static_cast<int>(g)};
        return rep;
      }
    }
  }
  // pairwise disjoint
  for (std::size_t p = 0; p < D.pieces.size(); ++p)
    for (std::size_t q = p + 1; q < D.pieces.size(); ++q) {
      const StanleyPiece &a = D.pieces[p], &b = D.pieces[q];
      Monomial w = mono_lcm(a.head, b.head);
      auto fits = [&](const Monomial& extra, const std::vector<int>& vars) {
        std::vector<int> supp = extra.support();
        return std::all_of(supp.begin(), supp.end(), [&](int v) {
          return std::find(vars.begin(), vars.end(), v) != vars.end();
        });
      };
      if (fits(mono_colon(w, a.head), a.vars) && fits(mono_colon(w, b.head), b.vars)) {
        rep.overlapping_pieces = {static_cast<int>(p), static_cast<int>(q)};
        return rep;
      }
    }
  // coverage: exact Hilbert series identity, zero tolerance
  rep.covers = hilbert_series(I).same_series(piece_series(D, I.nvars()));
  rep.valid = rep.covers;
  return rep;
}

bool stanley_conjecture_check(const StanleyDecomposition& D, int depth) {
  return std::all_of(D.pieces.begin(), D.pieces.end(), [&](const StanleyPiece& p) {
    return static_cast<int>(p.vars.size()) >= depth;
  });
}

PartitionReport verify_interval_partition(const IntervalPartition& P) {
  PartitionReport rep;
  for (std::size_t i = 0; i < P.intervals.size(); ++i) {
    const Interval& iv = P.intervals[i];
    if ((iv.lower & ~iv.upper) != 0 || !P.complex.is_face(iv.upper)) {
      rep.bad_interval = static_cast<int>(i);
      return rep;
    }
  }
  for (Face f : P.complex.all_faces()) {
    int hits = 0;
    for (const Interval& iv : P.intervals)
      if ((iv.lower & ~f) == 0 && (f & ~iv.upper) == 0) ++hits;
    if (hits == 0) {
      rep.uncovered_face = f;
      return rep;
    }
    if (hits > 1) {
      rep.multiply_covered_face = f;
      return rep;
    }
  }
  rep.valid = true;
  return rep;
}

StanleyDecomposition partition_to_stanley(const IntervalPartition& P) {
  StanleyDecomposition D;
  for (const Interval& iv : P.intervals) {
    StanleyPiece p;
    p.head = Monomial::one(P.complex.n);
    for (int v : face_vertices(iv.lower)) p.head.exps[v] = 1;
    p.vars = face_vertices(iv.upper);
    D.pieces.push_back(std::move(p));
  }
  return D;
}

}  // namespace micert
