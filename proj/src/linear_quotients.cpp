#include "micert/linear_quotients.hpp"

#include <algorithm>
#include <unordered_set>

namespace micert {

namespace {

struct ColonCheck {
  bool linear = false;
  std::vector<int> qset;   // on success
  Monomial offending;      // on failure: a minimal colon generator of degree >= 2
};

// Is (gens of prefix) : u generated by variables?
ColonCheck colon_linear(const MonomialIdeal& I, const std::vector<int>& prefix,
                        int next) {
  std::vector<Monomial> cols;
  cols.reserve(prefix.size());
  for (int k : prefix) cols.push_back(mono_colon(I.gens[k], I.gens[next]));
  cols = minimalize(std::move(cols));
  ColonCheck res;
  std::vector<int> qset;
  for (const Monomial& c : cols) {
    if (c.degree() >= 2) {
      res.linear = false;
      res.offending = c;
      return res;
    }
    // degree 0 impossible: u_k | u_i contradicts minimality of G(I)
    qset.push_back(c.support()[0]);
  }
  std::sort(qset.begin(), qset.end());
  res.linear = true;
  res.qset = std::move(qset);
  return res;
}

}  // namespace

std::map<int, std::vector<int>> AdmissibleOrder::qsets_by_generator() const {
  std::map<int, std::vector<int>> m;
  for (std::size_t pos = 0; pos < order.size(); ++pos) m[order[pos]] = qsets[pos];
  return m;
}

CheckResult check_admissible(const MonomialIdeal& I, const std::vector<int>& order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool is_perm = order.size() == I.gens.size();
  for (std::size_t i = 0; is_perm && i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) is_perm = false;
  if (!is_perm) throw domain_error("order is not a permutation of G(I)");

  AdmissibleOrder out;
  out.ideal = I;
  out.order = order;
  out.qsets.assign(order.size(), {});
  std::vector<int> prefix;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0) {
      ColonCheck c = colon_linear(I, prefix, order[pos]);
      if (!c.linear)
        return AdmissibleFailure{static_cast<int>(pos), c.offending};
      out.qsets[pos] = std::move(c.qset);
    }
    prefix.push_back(order[pos]);
  }
  return out;
}

LinearQuotientWitness find_admissible_order(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw domain_error("linear quotients are undefined for the zero and unit ideal");
  const std::size_t m = I.gens.size();
  if (m > 63) throw domain_error("find_admissible_order needs at most 63 generators");

  // candidates in (degree, index) order for reproducibility
  std::vector<int> by_degree(m);
  for (std::size_t i = 0; i < m; ++i) by_degree[i] = static_cast<int>(i);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    return I.gens[a].degree() < I.gens[b].degree();
  });

  std::unordered_set<std::uint64_t> dead;  // generator sets with no completion
  std::uint64_t explored = 0;
  std::vector<int> prefix;
  std::vector<std::vector<int>> qsets;

  auto dfs = [&](auto&& self, std::uint64_t chosen) -> bool {
    ++explored;
    if (prefix.size() == m) return true;
    if (dead.count(chosen)) return false;
    for (int cand : by_degree) {
      if (chosen & (std::uint64_t{1} << cand)) continue;
      ColonCheck c = prefix.empty() ? ColonCheck{true, {}, {}}
                                    : colon_linear(I, prefix, cand);
      if (!c.linear) continue;
      prefix.push_back(cand);
      qsets.push_back(std::move(c.qset));
      if (self(self, chosen | (std::uint64_t{1} << cand))) return true;
      prefix.pop_back();
      qsets.pop_back();
    }
    dead.insert(chosen);
    return false;
  };

  if (!dfs(dfs, 0)) return Refusal{explored};
  AdmissibleOrder out;
  out.ideal = I;
  out.order = prefix;
  out.qsets = std::move(qsets);
  return out;
}

AdmissibleOrder rearrange_degree_increasing(const AdmissibleOrder& sigma) {
  // iterated insertion from the proof of the rearrangement lemma: each
  // generator moves in front of the earliest strictly larger degree
  std::vector<int> result;
  for (int idx : sigma.order) {
    std::uint64_t d = sigma.ideal.gens[idx].degree();
    auto pos = std::find_if(result.begin(), result.end(), [&](int r) {
      return sigma.ideal.gens[r].degree() > d;
    });
    result.insert(pos, idx);
  }
  CheckResult chk = check_admissible(sigma.ideal, result);
  if (!std::holds_alternative<AdmissibleOrder>(chk))
    throw internal_error("degree-increasing rearrangement lost admissibility");
  return std::get<AdmissibleOrder>(chk);
}

bool qset_invariance(const AdmissibleOrder& sigma) {
  AdmissibleOrder prime = rearrange_degree_increasing(sigma);
  return sigma.qsets_by_generator() == prime.qsets_by_generator();
}

MonomialIdeal m_times_ideal(const MonomialIdeal& I) {
  std::vector<Monomial> prods;
  for (const Monomial& g : I.gens)
    for (int j = 0; j < I.nvars(); ++j) prods.push_back(mono_mul_var(g, j));
  return minimalize(I.ring, std::move(prods));
}

AdmissibleOrder m_times_order(const AdmissibleOrder& sigma) {
  const MonomialIdeal& I = sigma.ideal;
  for (std::size_t pos = 1; pos < sigma.order.size(); ++pos)
    if (sigma.gen_at(pos - 1).degree() > sigma.gen_at(pos).degree())
      throw domain_error("m_times_order needs a degree-increasing admissible order");
  if (!std::holds_alternative<AdmissibleOrder>(check_admissible(I, sigma.order)))
    throw domain_error("m_times_order needs an admissible order");

  // survivors of the multi-set {u_i x_j}: u_i x_j is dropped when an earlier
  // generator of sigma divides it
  std::vector<Monomial> survivors;
  for (std::size_t pos = 0; pos < sigma.order.size(); ++pos) {
    const Monomial& u = sigma.gen_at(pos);
    for (int j = 0; j < I.nvars(); ++j) {
      Monomial c = mono_mul_var(u, j);
      bool dropped = false;
      for (std::size_t q = 0; q < pos && !dropped; ++q)
        if (mono_divides(sigma.gen_at(q), c)) dropped = true;
      if (!dropped) survivors.push_back(c);
    }
  }
  MonomialIdeal mI(I.ring, survivors);
  if (!mI.equals_as_ideal(m_times_ideal(I)))
    throw internal_error("survivor list is not the minimal generating set of m*I");
  std::vector<int> order(survivors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  CheckResult chk = check_admissible(mI, order);
  if (!std::holds_alternative<AdmissibleOrder>(chk))
    throw internal_error("constructed m*I order is not admissible");
  return std::get<AdmissibleOrder>(chk);
}

ComponentwiseResult componentwise_lq(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw domain_error("componentwise linear quotients need a proper nonzero ideal");
  std::uint64_t lo = UINT64_MAX, hi = 0;
  for (const Monomial& g : I.gens) {
    lo = std::min(lo, g.degree());
    hi = std::max(hi, g.degree());
  }
  ComponentwiseResult res;
  res.all_linear = true;
  res.closure_from_degree = hi + 1;
  for (std::uint64_t a = lo; a <= hi; ++a) {
    MonomialIdeal comp = graded_component(I, a);
    LinearQuotientWitness w = find_admissible_order(comp);
    if (!has_witness(w)) res.all_linear = false;
    res.components.emplace(a, ComponentWitness{std::move(comp), std::move(w)});
  }
  return res;
}

AssemblyResult assemble_from_components(
    const MonomialIdeal& I,
    const std::map<std::uint64_t, AdmissibleOrder>& component_orders) {
  AssemblyResult res;
  std::uint64_t lo = UINT64_MAX;
  for (const Monomial& g : I.gens) lo = std::min(lo, g.degree());

  for (const auto& [a, sigma] : component_orders) {
    if (!sigma.ideal.equals_as_ideal(graded_component(I, a)))
      throw domain_error("component order does not belong to I_<a>");
    if (!std::holds_alternative<AdmissibleOrder>(
            check_admissible(sigma.ideal, sigma.order)))
      throw domain_error("component order is not admissible");
    if (a == lo) continue;
    // initial-part hypothesis: G(m * I_<a-1>) occupies the first positions
    MonomialIdeal prev = m_times_ideal(graded_component(I, a - 1));
    std::vector<Monomial> head;
    for (std::size_t pos = 0; pos < prev.gens.size() && pos < sigma.order.size(); ++pos)
      head.push_back(sigma.gen_at(pos));
    MonomialIdeal head_ideal = minimalize(I.ring, head);
    if (head.size() != prev.gens.size() || !head_ideal.equals_as_ideal(prev)) {
      res.failed_degree = a;
      return res;
    }
  }

  // concatenated order: by degree, within a degree by sigma_a position
  std::vector<int> order(I.gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto position_in_component = [&](int gen_idx) -> std::size_t {
    const Monomial& g = I.gens[gen_idx];
    const AdmissibleOrder& sigma = component_orders.at(g.degree());
    for (std::size_t pos = 0; pos < sigma.order.size(); ++pos)
      if (sigma.gen_at(pos) == g) return pos;
    throw internal_error("generator missing from its component");
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    std::uint64_t da = I.gens[a].degree(), db = I.gens[b].degree();
    if (da != db) return da < db;
    return position_in_component(a) < position_in_component(b);
  });
  CheckResult chk = check_admissible(I, order);
  if (!std::holds_alternative<AdmissibleOrder>(chk))
    throw internal_error("assembled order is not admissible");
  res.order = std::get<AdmissibleOrder>(chk);
  return res;
}

AdmissibleOrder squarefree_part_order(const AdmissibleOrder& sigma) {
  const MonomialIdeal& I = sigma.ideal;
  MonomialIdeal star = squarefree_part(I);
  // original index -> index within G(I^*)
  std::vector<int> star_index(I.gens.size(), -1);
  for (std::size_t i = 0, s = 0; i < I.gens.size(); ++i)
    if (I.gens[i].is_squarefree()) star_index[i] = static_cast<int>(s++);
  std::vector<int> order;
  for (int idx : sigma.order)
    if (star_index[idx] >= 0) order.push_back(star_index[idx]);
  CheckResult chk = check_admissible(star, order);
  if (!std::holds_alternative<AdmissibleOrder>(chk))
    throw internal_error("squarefree subsequence is not admissible");
  return std::get<AdmissibleOrder>(chk);
}

}  // namespace micert
