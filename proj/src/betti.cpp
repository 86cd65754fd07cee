#include "micert/betti.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace micert {

using boost::multiprecision::cpp_int;

std::map<int, std::uint64_t> BettiTable::total() const {
  std::map<int, std::uint64_t> out;
  for (const auto& [key, val] : entries) out[key.first] += val;
  return out;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, val] : entries)
    if (val > 0) pd = std::max(pd, key.first);
  return pd;
}

namespace {

// Montante/Bareiss fraction-free elimination; every division is exact.
int rank_exact(std::vector<std::vector<cpp_int>> a) {
  if (a.empty() || a[0].empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  cpp_int prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int cc = c + 1; cc < cols; ++cc)
        a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

long mod_pow(long base, long exp, long p) {
  long result = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

int rank_mod_p(std::vector<std::vector<long>> a, long p) {
  if (a.empty() || a[0].empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    long inv = mod_pow(a[rank][c], p - 2, p);
    for (int cc = c; cc < cols; ++cc)
      a[rank][cc] = ((a[rank][cc] % p) * inv % p + p) % p;
    for (int r = rank + 1; r < rows; ++r) {
      long f = ((a[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (int cc = c; cc < cols; ++cc)
        a[r][cc] = ((a[r][cc] - f * a[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Koszul strand of S/I in multidegree alpha.  Basis at homological degree i:
// pairs (T, x^(alpha - e_T)) with |T| = i, alpha_j >= 1 on T and the monomial
// outside I.
struct Strand {
  std::vector<std::vector<std::uint64_t>> basis;  // per i: subset masks of supp
  std::vector<int> supp;                          // vars with alpha_v >= 1
};

Strand build_strand(const MonomialIdeal& I, const Monomial& alpha,
                    std::size_t cap) {
  Strand s;
  for (int v = 0; v < alpha.nvars(); ++v)
    if (alpha.exps[v] > 0) s.supp.push_back(v);
  const int k = static_cast<int>(s.supp.size());
  s.basis.assign(k + 1, {});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Monomial m = alpha;
    bool ok = true;
    for (int b = 0; b < k && ok; ++b)
      if (mask & (std::uint64_t{1} << b)) {
        if (m.exps[s.supp[b]] == 0)
          ok = false;
        else
          --m.exps[s.supp[b]];
      }
    if (!ok || membership(I, m)) continue;
    int i = 0;
    for (int b = 0; b < k; ++b)
      if (mask & (std::uint64_t{1} << b)) ++i;
    s.basis[i].push_back(mask);
    if (s.basis[i].size() > cap)
      throw domain_error("Koszul strand exceeds the dimension cap");
  }
  return s;
}

// d_i : B_i -> B_{i-1}, entries in {-1, 0, 1}.
template <typename Cell>
std::vector<std::vector<Cell>> differential(const Strand& s, int i) {
  const std::vector<std::uint64_t>& dom = s.basis[i];
  const std::vector<std::uint64_t>& codom = s.basis[i - 1];
  std::map<std::uint64_t, int> index;
  for (std::size_t r = 0; r < codom.size(); ++r) index[codom[r]] = static_cast<int>(r);
  std::vector<std::vector<Cell>> d(codom.size(), std::vector<Cell>(dom.size(), 0));
  const int k = static_cast<int>(s.supp.size());
  for (std::size_t c = 0; c < dom.size(); ++c) {
    int sign = 1;
    for (int b = 0; b < k; ++b) {
      if (!(dom[c] & (std::uint64_t{1} << b))) continue;
      auto it = index.find(dom[c] & ~(std::uint64_t{1} << b));
      // absent target: the shifted monomial fell into I
      if (it != index.end()) d[it->second][c] = static_cast<Cell>(sign);
      sign = -sign;
    }
  }
  return d;
}

int rank_of(const Strand& s, int i, const BettiOptions& opts) {
  if (i < 1 || i > static_cast<int>(s.supp.size())) return 0;
  if (s.basis[i].empty() || s.basis[i - 1].empty()) return 0;
  if (opts.mod_p)
    return rank_mod_p(differential<long>(s, i), opts.prime);
  return rank_exact(differential<cpp_int>(s, i));
}

}  // namespace

BettiTable betti(const MonomialIdeal& I, const BettiOptions& opts) {
  if (I.is_unit()) throw domain_error("Betti numbers of S/I need a proper ideal");
  if (I.gens.size() > 22)
    throw domain_error("lcm lattice enumeration limited to 22 generators");
  BettiTable table;
  table.nvars = I.nvars();
  table.entries[{0, Monomial::one(I.nvars()).exps}] = 1;
  if (I.is_zero()) return table;

  std::set<std::vector<Exponent>> lattice;
  auto rec = [&](auto&& self, std::size_t g, const Monomial& lcm, bool any) -> void {
    if (g == I.gens.size()) {
      if (any) lattice.insert(lcm.exps);
      return;
    }
    self(self, g + 1, lcm, any);
    self(self, g + 1, mono_lcm(lcm, I.gens[g]), true);
  };
  rec(rec, 0, Monomial::one(I.nvars()), false);

  for (const std::vector<Exponent>& alpha_exps : lattice) {
    Monomial alpha(alpha_exps);
    Strand s = build_strand(I, alpha, opts.strand_cap);
    for (int i = 1; i <= static_cast<int>(s.supp.size()); ++i) {
      long long b = static_cast<long long>(s.basis[i].size());
      b -= rank_of(s, i, opts);
      b -= rank_of(s, i + 1, opts);
      if (b < 0) throw internal_error("negative Betti number");
      if (b > 0) table.entries[{i, alpha_exps}] = static_cast<std::uint64_t>(b);
    }
  }
  return table;
}

int depth(const MonomialIdeal& I, const BettiOptions& opts) {
  return I.nvars() - betti(I, opts).projective_dimension();
}

bool has_linear_resolution(const MonomialIdeal& I, const BettiOptions& opts) {
  if (I.is_zero() || I.is_unit())
    throw domain_error("linear resolution check needs a proper nonzero ideal");
  std::uint64_t d = I.gens.front().degree();
  for (const Monomial& g : I.gens)
    if (g.degree() != d) return false;
  BettiTable table = betti(I, opts);
  for (const auto& [key, val] : table.entries) {
    if (key.first < 1 || val == 0) continue;
    std::uint64_t total = 0;
    for (Exponent e : key.second) total += e;
    if (total != d + static_cast<std::uint64_t>(key.first) - 1) return false;
  }
  return true;
}

}  // namespace micert
