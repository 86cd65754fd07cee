#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "micert/betti.hpp"
#include "micert/filtration.hpp"
#include "micert/forest.hpp"
#include "micert/io.hpp"
#include "micert/linear_quotients.hpp"
#include "micert/simplicial.hpp"

using namespace micert;
using io::json;

namespace {

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open input file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw domain_error(std::string("JSON parse error: ") + e.what());
  }
}

struct Output {
  bool as_json = false;
  json report;
  std::ostringstream text;

  void flush() {
    if (as_json)
      std::cout << report.dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

std::string mono_list(const std::vector<Monomial>& gens, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += io::format_monomial(gens[i], ring);
  }
  return out;
}

// admissible order from the document's "order" field, or by search; on
// refusal fills the report and returns nothing
std::optional<AdmissibleOrder> obtain_order(const MonomialIdeal& I,
                                            const json& doc, Output& out) {
  if (doc.contains("order")) {
    std::vector<int> order = doc["order"].get<std::vector<int>>();
    CheckResult res = check_admissible(I, order);
    if (auto* fail = std::get_if<AdmissibleFailure>(&res))
      throw domain_error("given order is not admissible at position " +
                         std::to_string(fail->position) + " (colon generator " +
                         io::format_monomial(fail->offending, I.ring) + ")");
    return std::get<AdmissibleOrder>(res);
  }
  LinearQuotientWitness w = find_admissible_order(I);
  if (auto* refusal = std::get_if<Refusal>(&w)) {
    out.report["admissible"] = false;
    out.report["prefixes_explored"] = refusal->prefixes_explored;
    out.text << "no linear quotients: exhaustive backtracking explored "
             << refusal->prefixes_explored << " admissible prefixes\n";
    return std::nullopt;
  }
  return std::get<AdmissibleOrder>(w);
}

void cmd_lq(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  auto sigma = obtain_order(I, doc, out);
  if (!sigma) return;
  out.report["admissible"] = true;
  out.report["witness"] = io::order_to_json(*sigma);
  AdmissibleOrder inc = rearrange_degree_increasing(*sigma);
  out.report["degree_increasing"] = io::order_to_json(inc);
  out.report["qsets_invariant"] = qset_invariance(*sigma);
  out.text << "linear quotients: admissible order found\n";
  for (std::size_t pos = 0; pos < sigma->order.size(); ++pos) {
    out.text << "  " << io::format_monomial(sigma->gen_at(pos), I.ring) << "  q-set {";
    for (std::size_t k = 0; k < sigma->qsets[pos].size(); ++k)
      out.text << (k ? "," : "") << I.ring.names[sigma->qsets[pos][k]];
    out.text << "}\n";
  }
  out.text << "degree-increasing rearrangement: ";
  for (std::size_t pos = 0; pos < inc.order.size(); ++pos)
    out.text << (pos ? ", " : "") << io::format_monomial(inc.gen_at(pos), I.ring);
  out.text << "\nq-sets preserved under rearrangement: "
           << (qset_invariance(*sigma) ? "yes" : "no") << "\n";
}

void cmd_componentwise(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  ComponentwiseResult res = componentwise_lq(I);
  out.report["all_components_linear"] = res.all_linear;
  out.report["closure_from_degree"] = res.closure_from_degree;
  json comps;
  for (const auto& [deg, cw] : res.components) {
    json c;
    c["component"] = io::ideal_to_json(cw.component);
    if (has_witness(cw.witness)) {
      c["admissible"] = true;
      c["witness"] = io::order_to_json(std::get<AdmissibleOrder>(cw.witness));
    } else {
      c["admissible"] = false;
      c["prefixes_explored"] = std::get<Refusal>(cw.witness).prefixes_explored;
    }
    comps[std::to_string(deg)] = c;
    out.text << "degree " << deg << " component ("
             << cw.component.gens.size() << " generators): "
             << (has_witness(cw.witness) ? "linear quotients" : "refused") << "\n";
  }
  out.report["components"] = comps;
  out.text << "componentwise linear quotients: " << (res.all_linear ? "yes" : "no")
           << " (degrees above " << res.closure_from_degree - 1
           << " follow from the maximal-ideal product closure)\n";
}

void cmd_mI(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  out.report["mI"] = io::ideal_to_json(m_times_ideal(I));
  auto sigma = obtain_order(I, doc, out);
  if (!sigma) {
    out.text << "m*I = " << mono_list(m_times_ideal(I).gens, I.ring) << "\n";
    return;
  }
  AdmissibleOrder msigma = m_times_order(rearrange_degree_increasing(*sigma));
  out.report["admissible"] = true;
  out.report["witness"] = io::order_to_json(msigma);
  out.text << "m*I = " << mono_list(m_times_ideal(I).gens, I.ring) << "\n"
           << "admissible order of m*I built from the degree-increasing order of I:\n  ";
  for (std::size_t pos = 0; pos < msigma.order.size(); ++pos)
    out.text << (pos ? ", " : "") << io::format_monomial(msigma.gen_at(pos), I.ring);
  out.text << "\n";
}

void cmd_sqfree(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  out.report["squarefree_part"] = io::ideal_to_json(squarefree_part(I));
  auto sigma = obtain_order(I, doc, out);
  if (!sigma) return;
  AdmissibleOrder sub = squarefree_part_order(*sigma);
  out.report["admissible"] = true;
  out.report["witness"] = io::order_to_json(sub);
  out.text << "squarefree part: " << mono_list(squarefree_part(I).gens, I.ring)
           << "\nthe subsequence of the admissible order is admissible for it\n";
}

void cmd_dual(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  MonomialIdeal dual = dual_of_squarefree(I);
  out.report["dual"] = io::ideal_to_json(dual);
  out.text << "Alexander dual: " << mono_list(dual.gens, I.ring) << "\n";
}

void cmd_shelling(const json& doc, Output& out) {
  SimplicialComplex delta = io::complex_from_json(doc);
  if (doc.contains("order")) {
    std::vector<int> order = doc["order"].get<std::vector<int>>();
    bool ok = verify_shelling_direct(delta, order);
    out.report["shellable"] = ok;
    out.report["order_indices"] = order;
    out.text << "given facet order is " << (ok ? "" : "not ")
             << "a shelling (Bjorner-Wachs condition checked directly)\n";
    return;
  }
  std::optional<Shelling> s = find_shelling(delta);
  out.report["shellable"] = s.has_value();
  if (s) {
    out.report["shelling"] = io::shelling_to_json(*s);
    out.text << "shellable; order found through linear quotients of the "
                "Alexander dual (Herzog-Hibi-Zheng), verified against the "
                "Bjorner-Wachs condition\n";
    for (std::size_t pos = 0; pos < s->order.size(); ++pos) {
      out.text << "  facet {";
      auto vs = face_vertices(s->complex.facets[s->order[pos]]);
      for (std::size_t k = 0; k < vs.size(); ++k)
        out.text << (k ? "," : "") << vs[k] + 1;
      out.text << "}  restriction {";
      for (std::size_t k = 0; k < s->restriction[pos].size(); ++k)
        out.text << (k ? "," : "") << s->restriction[pos][k] + 1;
      out.text << "}\n";
    }
  } else {
    out.text << "not shellable: the Alexander dual of the Stanley-Reisner "
                "ideal has no linear quotients\n";
  }
}

void cmd_skeleton(const json& doc, int i, Output& out) {
  SimplicialComplex delta = io::complex_from_json(doc);
  SimplicialComplex sk = facet_skeleton(delta, i);
  out.report["skeleton"] = io::complex_to_json(sk);
  out.text << i << "-facet skeleton: ";
  for (std::size_t f = 0; f < sk.facets.size(); ++f) {
    out.text << (f ? ", {" : "{");
    auto vs = face_vertices(sk.facets[f]);
    for (std::size_t k = 0; k < vs.size(); ++k)
      out.text << (k ? "," : "") << vs[k] + 1;
    out.text << "}";
  }
  out.text << "\n";
}

void cmd_leaf_order(const json& doc, Output& out) {
  SimplicialComplex delta = io::complex_from_json(doc);
  std::optional<std::vector<int>> order = leaf_order(delta);
  out.report["quasi_forest"] = order.has_value();
  if (order) {
    out.report["leaf_order"] = *order;
    out.text << "quasi-forest: leaf order of facet indices ";
    for (std::size_t k = 0; k < order->size(); ++k)
      out.text << (k ? "," : "") << (*order)[k];
    out.text << "\n";
  } else {
    out.text << "not a quasi-forest: no leaf order exists\n";
  }
}

void cmd_forest_type(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  ForestTypeResult res = is_forest_type(I);
  out.report["forest_type"] = res.forest_type;
  if (res.forest_type) {
    out.text << "forest type: the free-variable minor recursion succeeds\n";
  } else if (!res.leafless_subset.empty()) {
    out.report["leafless_subset"] = res.leafless_subset;
    out.text << "not forest type; leafless generator subset (0-based indices): ";
    for (std::size_t k = 0; k < res.leafless_subset.size(); ++k)
      out.text << (k ? "," : "") << res.leafless_subset[k];
    out.text << "\n";
  } else {
    json mg = json::array();
    for (const Monomial& g : res.no_free_variable_minor)
      mg.push_back(io::format_monomial(g, I.ring));
    out.report["no_free_variable_minor"] = mg;
    out.text << "not forest type; a minor without free variables: "
             << mono_list(res.no_free_variable_minor, I.ring)
             << " (every generator subset still has a leaf)\n";
  }
}

void cmd_fvp(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  bool fvp = free_variable_property(I);
  out.report["free_variable_property"] = fvp;
  out.text << "free variable property (all minors, direct enumeration): "
           << (fvp ? "holds" : "fails") << "\n";
}

void cmd_balanced(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  IncidenceMatrix M = incidence_matrix(I);
  BalancedResult res = totally_balanced(M);
  out.report["incidence"] = io::incidence_to_json(M);
  out.report["totally_balanced"] = res.balanced;
  if (res.balanced) {
    out.text << "totally balanced incidence matrix\n";
  } else {
    out.report["bad_rows"] = res.bad_rows;
    out.report["bad_cols"] = res.bad_cols;
    out.text << "not totally balanced; violating submatrix rows {";
    for (std::size_t k = 0; k < res.bad_rows.size(); ++k)
      out.text << (k ? "," : "") << res.bad_rows[k];
    out.text << "} cols {";
    for (std::size_t k = 0; k < res.bad_cols.size(); ++k)
      out.text << (k ? "," : "") << res.bad_cols[k];
    out.text << "}\n";
  }
}

void cmd_equiv(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  ClutterReport r = clutter_equivalences(I);
  out.report["forest"] = r.forest;
  out.report["totally_balanced"] = r.balanced;
  out.report["free_vertex_property"] = r.free_vertex_property;
  out.report["agree"] = r.agree;
  out.text << "forest: " << r.forest << ", totally balanced: " << r.balanced
           << ", free vertex property: " << r.free_vertex_property
           << "; three independent procedures agree\n";
}

void cmd_pretty_clean(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  PrettyCleanFiltration F = construct_pretty_clean(I);
  FiltrationReport rep = verify_filtration(F);
  out.report["filtration"] = io::filtration_to_json(F);
  out.report["valid"] = rep.valid;
  out.report["clean"] = rep.is_clean;
  out.text << "pretty clean filtration with " << F.steps.size()
           << " steps; verified (colon identities, unit terminal, no earlier "
              "prime inside a later one)\n"
           << "clean (all primes minimal): " << (rep.is_clean ? "yes" : "no") << "\n";
}

void cmd_clean(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  CleanResult res = clean_squarefree(I);
  out.report["clean"] = res.clean;
  if (has_witness(res.dual_witness)) {
    out.report["dual_witness"] =
        io::order_to_json(std::get<AdmissibleOrder>(res.dual_witness));
    out.text << "clean: the Alexander dual has linear quotients (Dress's "
                "shellability criterion via Herzog-Hibi-Zheng duality)\n";
  } else {
    out.report["prefixes_explored"] =
        std::get<Refusal>(res.dual_witness).prefixes_explored;
    out.text << "not clean: exhaustive search found no admissible order of "
                "the Alexander dual\n";
  }
}

void cmd_stanley(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  PrettyCleanFiltration F = construct_pretty_clean(I);
  StanleyDecomposition D = stanley_from_filtration(F);
  StanleyReport rep = verify_stanley(D, I);
  int d = depth(I);
  bool conj = stanley_conjecture_check(D, d);
  out.report["decomposition"] = io::stanley_to_json(D, I.ring);
  out.report["valid"] = rep.valid;
  out.report["depth"] = d;
  out.report["conjecture_holds"] = conj;
  out.text << "Stanley decomposition with " << D.pieces.size()
           << " pieces read off the pretty clean filtration; verified "
              "(avoidance, disjointness, Hilbert series coverage)\n"
           << "depth(S/I) = " << d << " (Auslander-Buchsbaum); min |Z| >= depth: "
           << (conj ? "yes" : "no") << "\n";
}

void cmd_partition_verify(const json& doc, Output& out) {
  IntervalPartition P = io::partition_from_json(doc);
  PartitionReport rep = verify_interval_partition(P);
  out.report["valid_partition"] = rep.valid;
  if (!rep.valid) {
    out.text << "invalid partition\n";
    if (rep.bad_interval)
      out.text << "  interval " << *rep.bad_interval << " is not an interval of the complex\n";
    if (rep.uncovered_face) out.text << "  some face is uncovered\n";
    if (rep.multiply_covered_face) out.text << "  some face is covered twice\n";
    return;
  }
  Ring ring = Ring::with_default_names(P.complex.n);
  MonomialIdeal I = stanley_reisner(P.complex, ring);
  StanleyDecomposition D = partition_to_stanley(P);
  StanleyReport srep = verify_stanley(D, I);
  std::size_t min_upper = SIZE_MAX;
  for (const Interval& iv : P.intervals)
    min_upper = std::min(min_upper, static_cast<std::size_t>(face_size(iv.upper)));
  int d = depth(I);
  out.report["stanley_valid"] = srep.valid;
  out.report["min_upper_size"] = min_upper;
  out.report["depth"] = d;
  out.report["conjecture_holds"] = srep.valid && static_cast<int>(min_upper) >= d;
  out.text << "valid partition; converted Stanley decomposition "
           << (srep.valid ? "verifies" : "FAILS") << " against the "
           << "Stanley-Reisner ideal\n"
           << "min upper-face size " << min_upper << "; depth(S/I) = " << d
           << " (Auslander-Buchsbaum); conjecture "
           << (static_cast<int>(min_upper) >= d ? "holds" : "fails") << "\n";
}

void cmd_betti(const json& doc, bool mod_p, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  BettiOptions opts;
  opts.mod_p = mod_p;
  BettiTable T = betti(I, opts);
  out.report["betti"] = io::betti_to_json(T);
  out.report["projective_dimension"] = T.projective_dimension();
  out.text << "multigraded Betti numbers of S/I ("
           << (mod_p ? "GF(32003)" : "exact integer") << " ranks):\n";
  for (const auto& [key, val] : T.entries) {
    out.text << "  beta_" << key.first << ",(";
    for (std::size_t k = 0; k < key.second.size(); ++k)
      out.text << (k ? "," : "") << key.second[k];
    out.text << ") = " << val << "\n";
  }
  out.text << "projective dimension " << T.projective_dimension() << "\n";
}

void cmd_depth(const json& doc, Output& out) {
  MonomialIdeal I = io::ideal_from_json(doc);
  BettiTable T = betti(I);
  int d = I.nvars() - T.projective_dimension();
  out.report["projective_dimension"] = T.projective_dimension();
  out.report["depth"] = d;
  out.text << "pd(S/I) = " << T.projective_dimension() << ", depth(S/I) = " << d
           << " by the Auslander-Buchsbaum formula\n";
}

int cmd_fixtures(const std::string& dir, Output& out) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    out.text << (ok ? "ok   " : "FAIL ") << name << "\n";
    out.report[name] = ok;
    if (!ok) ++failures;
  };
  auto load = [&](const std::string& file) { return read_input(dir + "/" + file); };

  {
    json doc = load("remark_lq.json");
    MonomialIdeal I = io::ideal_from_json(doc);
    auto s1 = check_admissible(I, doc["orders"]["sigma1"].get<std::vector<int>>());
    auto s2 = check_admissible(I, doc["orders"]["sigma2"].get<std::vector<int>>());
    check("remark_lq: both orders admissible",
          std::holds_alternative<AdmissibleOrder>(s1) &&
              std::holds_alternative<AdmissibleOrder>(s2));
    if (auto* sigma = std::get_if<AdmissibleOrder>(&s1)) {
      AdmissibleOrder inc = rearrange_degree_increasing(*sigma);
      bool match = true;
      for (std::size_t pos = 0; pos < inc.order.size(); ++pos)
        match = match && io::format_monomial(inc.gen_at(pos), I.ring) ==
                             doc["rearranged"][pos].get<std::string>();
      check("remark_lq: degree-increasing rearrangement", match);
      check("remark_lq: q-sets invariant", qset_invariance(*sigma));
    }
  }
  {
    json doc = load("product_lq.json");
    MonomialIdeal I = io::ideal_from_json(doc["I"]);
    MonomialIdeal J = io::ideal_from_json(doc["J"]);
    auto sj = check_admissible(J, doc["J_order"].get<std::vector<int>>());
    check("product_lq: J admissible in the given order",
          std::holds_alternative<AdmissibleOrder>(sj));
    std::vector<Monomial> prod;
    for (const Monomial& a : I.gens)
      for (const Monomial& b : J.gens) prod.push_back(mono_mul(a, b));
    MonomialIdeal IJ = minimalize(I.ring, std::move(prod));
    check("product_lq: IJ refused", !has_witness(find_admissible_order(IJ)));
    check("product_lq: IJ has no linear resolution", !has_linear_resolution(IJ));
  }
  {
    json doc = load("m_times.json");
    MonomialIdeal base = io::ideal_from_json(doc["base"]);
    std::vector<Monomial> listed;
    for (const json& g : doc["product_gens"])
      listed.push_back(io::parse_monomial(g.get<std::string>(), base.ring));
    MonomialIdeal mI = m_times_ideal(base);
    check("m_times: m*(ab,cd) generators",
          mI.equals_as_ideal(MonomialIdeal(base.ring, listed)));
    MonomialIdeal listed_ideal(base.ring, listed);
    check("m_times: listed order admissible",
          std::holds_alternative<AdmissibleOrder>(check_admissible(
              listed_ideal, doc["order"].get<std::vector<int>>())));
    check("m_times: (ab,cd) itself refused",
          !has_witness(find_admissible_order(base)));
  }
  {
    json doc = load("gamma.json");
    SimplicialComplex G = io::complex_from_json(doc);
    Ring ring = Ring::with_default_names(G.n);
    MonomialIdeal IG = facet_ideal(G, ring);
    std::vector<Monomial> listed;
    for (const json& g : doc["dual_gens"])
      listed.push_back(io::parse_monomial(g.get<std::string>(), ring));
    MonomialIdeal dual = dual_of_squarefree(IG);
    check("gamma: dual generators",
          dual.equals_as_ideal(MonomialIdeal(ring, listed)));
    check("gamma: dual refused", !has_witness(find_admissible_order(dual)));
    check("gamma: not even componentwise", !componentwise_lq(dual).all_linear);
    check("gamma: not clean", !clean_squarefree(IG).clean);
    check("gamma: quasi-tree", leaf_order(G).has_value());
    ForestTypeResult ft = is_forest_type(IG);
    check("gamma: not forest type with leafless 4-subset",
          !ft.forest_type &&
              ft.leafless_subset == doc["leafless_subset"].get<std::vector<int>>());
  }
  {
    json doc = load("gamma_prime.json");
    SimplicialComplex G = io::complex_from_json(doc);
    Ring ring = Ring::with_default_names(G.n);
    MonomialIdeal IG = facet_ideal(G, ring);
    std::vector<Monomial> listed;
    for (const json& g : doc["dual_gens"])
      listed.push_back(io::parse_monomial(g.get<std::string>(), ring));
    MonomialIdeal dual = dual_of_squarefree(IG);
    MonomialIdeal listed_ideal(ring, listed);
    check("gamma_prime: dual generators", dual.equals_as_ideal(listed_ideal));
    check("gamma_prime: listed order admissible",
          std::holds_alternative<AdmissibleOrder>(check_admissible(
              listed_ideal, doc["dual_order"].get<std::vector<int>>())));
    check("gamma_prime: clean", clean_squarefree(IG).clean);
  }
  {
    json doc = load("partition.json");
    IntervalPartition P = io::partition_from_json(doc);
    PartitionReport rep = verify_interval_partition(P);
    check("partition: valid interval partition", rep.valid);
    Ring ring = Ring::with_default_names(P.complex.n);
    MonomialIdeal I = stanley_reisner(P.complex, ring);
    StanleyDecomposition D = partition_to_stanley(P);
    check("partition: Stanley decomposition verifies", verify_stanley(D, I).valid);
    json dg = load("depth_gamma.json");
    int frozen = dg["depth"].get<int>();
    check("partition: depth matches the frozen value", depth(I) == frozen);
    std::size_t min_upper = SIZE_MAX;
    for (const Interval& iv : P.intervals)
      min_upper = std::min(min_upper, static_cast<std::size_t>(face_size(iv.upper)));
    check("partition: min upper size >= depth",
          static_cast<int>(min_upper) >= frozen);
  }
  {
    json doc = load("skeleton.json");
    SimplicialComplex delta = io::complex_from_json(doc);
    auto facets_of = [&](const json& arr) {
      std::vector<Face> fs;
      for (const json& f : arr) {
        std::vector<int> vs;
        for (const json& v : f) vs.push_back(v.get<int>() - 1);
        fs.push_back(face_from_vertices(vs, delta.n));
      }
      return fs;
    };
    check("skeleton: 1-facet skeleton verbatim",
          facet_skeleton(delta, 1).facets == facets_of(doc["skeleton1"]));
    check("skeleton: 2-facet skeleton verbatim",
          facet_skeleton(delta, 2).facets == facets_of(doc["skeleton2"]));
  }
  out.report["failures"] = failures;
  out.text << (failures == 0 ? "all fixtures pass\n"
                             : std::to_string(failures) + " fixture checks failed\n");
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificates for monomial ideals: linear quotients, "
               "shellability, forest type, pretty clean filtrations, Stanley "
               "decompositions and Betti numbers"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "text";
  std::uint64_t seed = 0;
  int skeleton_i = 1;
  bool mod_p = false;
  std::string fixtures_dir = "fixtures";

  std::vector<std::string> names = {
      "lq",          "componentwise", "mI",       "sqfree",
      "dual",        "shelling",      "skeleton", "leaf-order",
      "forest-type", "free-variable-property",    "balanced",
      "equiv",       "pretty-clean",  "clean",    "stanley",
      "partition-verify", "betti",    "depth",    "fixtures"};
  std::map<std::string, CLI::App*> subs;
  for (const std::string& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("input", input, "input document (JSON file, - for stdin)");
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", seed, "seed for randomized corpus commands");
    subs[name] = sub;
  }
  subs["skeleton"]->add_option("-i,--iterations", skeleton_i,
                               "how many facet-skeleton steps");
  subs["betti"]->add_flag("--mod-p", mod_p, "ranks over GF(32003)");
  subs["fixtures"]->get_option("input")->default_str("fixtures");

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  Output out;
  out.as_json = format == "json";
  try {
    if (cmd == "fixtures") {
      if (input == "-") input = fixtures_dir;
      int rc = cmd_fixtures(input, out);
      out.flush();
      return rc;
    }
    json doc = read_input(input);
    if (cmd == "lq") cmd_lq(doc, out);
    else if (cmd == "componentwise") cmd_componentwise(doc, out);
    else if (cmd == "mI") cmd_mI(doc, out);
    else if (cmd == "sqfree") cmd_sqfree(doc, out);
    else if (cmd == "dual") cmd_dual(doc, out);
    else if (cmd == "shelling") cmd_shelling(doc, out);
    else if (cmd == "skeleton") cmd_skeleton(doc, skeleton_i, out);
    else if (cmd == "leaf-order") cmd_leaf_order(doc, out);
    else if (cmd == "forest-type") cmd_forest_type(doc, out);
    else if (cmd == "free-variable-property") cmd_fvp(doc, out);
    else if (cmd == "balanced") cmd_balanced(doc, out);
    else if (cmd == "equiv") cmd_equiv(doc, out);
    else if (cmd == "pretty-clean") cmd_pretty_clean(doc, out);
    else if (cmd == "clean") cmd_clean(doc, out);
    else if (cmd == "stanley") cmd_stanley(doc, out);
    else if (cmd == "partition-verify") cmd_partition_verify(doc, out);
    else if (cmd == "betti") cmd_betti(doc, mod_p, out);
    else if (cmd == "depth") cmd_depth(doc, out);
  } catch (const internal_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  out.flush();
  return 0;
}
