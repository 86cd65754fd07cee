#include "micert/forest.hpp"

#include <algorithm>
#include <map>

namespace micert {

std::optional<GeneratorLeaf> generator_leaf(const std::vector<Monomial>& gens) {
  if (gens.empty()) throw domain_error("generator_leaf needs a nonempty subset");
  if (gens.size() == 1) return GeneratorLeaf{0, std::nullopt};
  for (std::size_t t = 0; t < gens.size(); ++t) {
    std::vector<Monomial> g(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) g[i] = mono_gcd(gens[t], gens[i]);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j == t) continue;
      bool branch = true;
      for (std::size_t i = 0; i < gens.size() && branch; ++i)
        if (i != t && !mono_divides(g[i], g[j])) branch = false;
      if (branch) return GeneratorLeaf{t, j};
    }
  }
  return std::nullopt;
}

MonomialIdeal minor_same_ring(const MonomialIdeal& I, const std::vector<int>& x1,
                              const std::vector<int>& x2) {
  for (int v : x1)
    if (std::find(x2.begin(), x2.end(), v) != x2.end())
      throw domain_error("minor variable sets must be disjoint");
  std::vector<Monomial> gens;
  for (const Monomial& g : I.gens) {
    bool killed = false;
    for (int v : x1)
      if (g.exps.at(v) > 0) {
        killed = true;
        break;
      }
    if (killed) continue;
    Monomial h = g;
    for (int v : x2) h.exps.at(v) = 0;
    gens.push_back(h);
  }
  return minimalize(I.ring, std::move(gens));
}

Minor minor(const MonomialIdeal& I, std::vector<int> x1, std::vector<int> x2) {
  std::sort(x1.begin(), x1.end());
  std::sort(x2.begin(), x2.end());
  MonomialIdeal erased = minor_same_ring(I, x1, x2);

  Minor out;
  out.base = I;
  out.x1 = x1;
  out.x2 = x2;
  for (int v = 0; v < I.nvars(); ++v)
    if (!std::binary_search(x1.begin(), x1.end(), v) &&
        !std::binary_search(x2.begin(), x2.end(), v))
      out.kept_variables.push_back(v);
  if (out.kept_variables.empty())
    throw domain_error("minor must keep at least one variable");
  std::vector<std::string> names;
  for (int v : out.kept_variables) names.push_back(I.ring.names.at(v));
  Ring small = Ring::with_names(std::move(names));
  std::vector<Monomial> gens;
  for (const Monomial& g : erased.gens) {
    Monomial h = Monomial::one(small.n);
    for (int i = 0; i < small.n; ++i) h.exps[i] = g.exps[out.kept_variables[i]];
    gens.push_back(h);
  }
  out.result = MonomialIdeal(small, std::move(gens));
  return out;
}

std::vector<int> free_variables(const MonomialIdeal& I) {
  std::vector<int> out;
  for (int v = 0; v < I.nvars(); ++v) {
    int count = 0;
    for (const Monomial& g : I.gens)
      if (g.exps[v] > 0) ++count;
    if (count == 1) out.push_back(v);
  }
  return out;
}

namespace {

bool is_irreducible(const std::vector<Monomial>& gens) {
  // pure powers of (necessarily distinct) variables
  return std::all_of(gens.begin(), gens.end(),
                     [](const Monomial& g) { return g.support().size() == 1; });
}

using GensKey = std::vector<std::vector<Exponent>>;

GensKey key_of(const std::vector<Monomial>& gens) {
  GensKey k;
  for (const Monomial& g : gens) k.push_back(g.exps);
  std::sort(k.begin(), k.end());
  return k;
}

bool forest_rec(const Ring& ring, const std::vector<Monomial>& gens,
                std::map<GensKey, bool>& memo, std::vector<Monomial>& stuck) {
  if (gens.size() <= 1) return true;
  if (is_irreducible(gens)) return true;
  GensKey key = key_of(gens);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  MonomialIdeal I(ring, gens);
  std::vector<int> frees = free_variables(I);
  bool ok = false;
  if (frees.empty()) {
    if (stuck.empty()) stuck = gens;
  } else {
    int v = frees.front();
    std::vector<Monomial> without;  // generator containing v deleted
    std::vector<Monomial> erased;   // v set to 1
    for (const Monomial& g : gens) {
      if (g.exps[v] > 0) {
        Monomial h = g;
        h.exps[v] = 0;
        erased.push_back(h);
      } else {
        without.push_back(g);
        erased.push_back(g);
      }
    }
    ok = forest_rec(ring, without, memo, stuck) &&
         forest_rec(ring, minimalize(std::move(erased)), memo, stuck);
  }
  memo.emplace(std::move(key), ok);
  return ok;
}

}  // namespace

std::optional<std::vector<int>> leafless_subset_naive(
    const std::vector<Monomial>& gens) {
  const std::size_t m = gens.size();
  if (m > 20) throw domain_error("naive leaf search needs at most 20 generators");
  // smallest subsets first; no subset of size < 3 can be leafless
  for (std::size_t size = 3; size <= m; ++size) {
    std::vector<int> comb(size);
    for (std::size_t i = 0; i < size; ++i) comb[i] = static_cast<int>(i);
    while (true) {
      std::vector<Monomial> sub;
      for (int i : comb) sub.push_back(gens[i]);
      if (!generator_leaf(sub)) return comb;
      // next combination
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && comb[pos] == static_cast<int>(m - size + pos)) --pos;
      if (pos < 0) break;
      ++comb[pos];
      for (std::size_t i = pos + 1; i < size; ++i) comb[i] = comb[i - 1] + 1;
    }
  }
  return std::nullopt;
}

ForestTypeResult is_forest_type(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw domain_error("forest type is undefined for the zero and unit ideal");
  std::map<GensKey, bool> memo;
  std::vector<Monomial> stuck;
  ForestTypeResult res;
  res.forest_type = forest_rec(I.ring, I.gens, memo, stuck);
  if (!res.forest_type) {
    // greedy leaf peeling can terminate without exposing a leafless set, so
    // fall back to the exhaustive smallest-first search
    std::vector<int> live(I.gens.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);
    while (live.size() > 1) {
      std::vector<Monomial> sub;
      for (int i : live) sub.push_back(I.gens[i]);
      std::optional<GeneratorLeaf> leaf = generator_leaf(sub);
      if (!leaf) {
        res.leafless_subset = live;
        return res;
      }
      live.erase(live.begin() + static_cast<long>(leaf->leaf));
    }
    std::optional<std::vector<int>> bad = leafless_subset_naive(I.gens);
    if (bad) {
      res.leafless_subset = *bad;
    } else {
      // only possible for non-squarefree ideals; report the stuck minor
      if (I.is_squarefree())
        throw internal_error("rejected squarefree ideal has no leafless subset");
      if (stuck.empty())
        throw internal_error("rejected ideal produced no stuck minor");
      res.no_free_variable_minor = stuck;
    }
  }
  return res;
}

bool free_variable_property(const MonomialIdeal& I) {
  const int n = I.nvars();
  if (n > 14) throw domain_error("free_variable_property enumeration needs n <= 14");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<int> assign(n);  // 0 = keep, 1 = set to 0, 2 = set to 1
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      assign[i] = static_cast<int>(c % 3);
      c /= 3;
    }
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens) {
      bool killed = false;
      Monomial h = g;
      for (int v = 0; v < n && !killed; ++v) {
        if (assign[v] == 1 && g.exps[v] > 0) killed = true;
        if (assign[v] == 2) h.exps[v] = 0;
      }
      if (!killed) gens.push_back(h);
    }
    gens = minimalize(std::move(gens));
    if (gens.size() < 2) continue;
    bool has_free = false;
    for (int v = 0; v < n && !has_free; ++v) {
      if (assign[v] != 0) continue;
      int count = 0;
      for (const Monomial& g : gens)
        if (g.exps[v] > 0) ++count;
      if (count == 1) has_free = true;
    }
    if (!has_free) return false;
  }
  return true;
}

IncidenceMatrix incidence_matrix(const MonomialIdeal& clutter) {
  if (!clutter.is_squarefree())
    throw domain_error("clutters are represented by squarefree edge ideals");
  IncidenceMatrix M;
  M.rows = clutter.nvars();
  M.cols = static_cast<int>(clutter.gens.size());
  M.entries.assign(M.rows, std::vector<int>(M.cols, 0));
  for (int j = 0; j < M.cols; ++j)
    for (int v : clutter.gens[j].support()) M.entries[v][j] = 1;
  return M;
}

namespace {

bool next_combination(std::vector<int>& comb, int limit) {
  int k = static_cast<int>(comb.size());
  int pos = k - 1;
  while (pos >= 0 && comb[pos] == limit - k + pos) --pos;
  if (pos < 0) return false;
  ++comb[pos];
  for (int i = pos + 1; i < k; ++i) comb[i] = comb[i - 1] + 1;
  return true;
}

}  // namespace

BalancedResult totally_balanced(const IncidenceMatrix& M) {
  if (M.rows > 16 || M.cols > 16)
    throw domain_error("totally_balanced enumeration is limited to 16x16");
  for (int k = 3; k <= std::min(M.rows, M.cols); ++k) {
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    do {
      // only rows with exactly two 1s inside the chosen columns can appear
      std::vector<int> candidates;
      for (int r = 0; r < M.rows; ++r) {
        int ones = 0;
        for (int c : cols) ones += M.entries[r][c];
        if (ones == 2) candidates.push_back(r);
      }
      if (static_cast<int>(candidates.size()) < k) continue;
      std::vector<int> pick(k);
      for (int i = 0; i < k; ++i) pick[i] = i;
      do {
        bool good = true;
        for (int ci = 0; ci < k && good; ++ci) {
          int ones = 0;
          for (int ri = 0; ri < k; ++ri)
            ones += M.entries[candidates[pick[ri]]][cols[ci]];
          if (ones != 2) good = false;
        }
        if (good) {
          BalancedResult bad;
          bad.balanced = false;
          for (int ri = 0; ri < k; ++ri) bad.bad_rows.push_back(candidates[pick[ri]]);
          bad.bad_cols = cols;
          return bad;
        }
      } while (next_combination(pick, static_cast<int>(candidates.size())));
    } while (next_combination(cols, M.cols));
  }
  BalancedResult ok;
  ok.balanced = true;
  return ok;
}

ClutterReport clutter_equivalences(const MonomialIdeal& clutter) {
  if (!clutter.is_squarefree())
    throw domain_error("clutter equivalences need a squarefree ideal");
  ClutterReport r;
  r.forest = is_forest_type(clutter).forest_type;
  r.balanced = totally_balanced(incidence_matrix(clutter)).balanced;
  r.free_vertex_property = free_variable_property(clutter);
  r.agree = (r.forest == r.balanced) && (r.balanced == r.free_vertex_property);
  if (!r.agree)
    throw internal_error("forest / totally balanced / free vertex verdicts disagree");
  return r;
}

}  // namespace micert
