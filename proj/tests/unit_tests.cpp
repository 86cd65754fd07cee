#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "test_support.hpp"

using namespace micert;
using support::complex_of;

namespace {

io::json load_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return io::json::parse(buf.str());
}

Ring ring4() { return Ring::with_names({"a", "b", "c", "d"}); }

Monomial P(const std::string& s, const Ring& r) { return io::parse_monomial(s, r); }

MonomialIdeal ideal(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Monomial> g;
  for (const char* s : gens) g.push_back(io::parse_monomial(s, r));
  return MonomialIdeal(r, std::move(g));
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  Ring r = ring4();
  Monomial u = P("a^2*b", r), v = P("a*b*c", r);
  CHECK(io::format_monomial(mono_gcd(u, v), r) == "a*b");
  CHECK(io::format_monomial(mono_lcm(u, v), r) == "a^2*b*c");
  CHECK(io::format_monomial(mono_colon(u, v), r) == "a");
  CHECK(io::format_monomial(mono_colon(v, u), r) == "c");
  CHECK(mono_divides(P("a*b", r), u));
  CHECK_FALSE(mono_divides(u, P("a*b", r)));
  CHECK(P("1", r).is_one());
  CHECK(P("a*b*c*d", r).is_squarefree());
  CHECK_FALSE(u.is_squarefree());
  CHECK(io::format_monomial(squarefree_of(u), r) == "a*b");
  CHECK(u.degree() == 3);
  CHECK(u.support() == std::vector<int>{0, 1});
  CHECK_THROWS_AS((void)io::parse_monomial("a^", r), domain_error);
  CHECK_THROWS_AS((void)io::parse_monomial("z", r), domain_error);
}

TEST_CASE("minimalize keeps first occurrences and is idempotent") {
  Ring r = ring4();
  std::vector<Monomial> gens = {P("a*b*c", r), P("a*b", r), P("a*b*d", r),
                                P("c*d", r), P("a*b", r)};
  std::vector<Monomial> min = minimalize(gens);
  CHECK(min == std::vector<Monomial>{P("a*b", r), P("c*d", r)});
  CHECK(minimalize(min) == min);
  CHECK_THROWS_AS(MonomialIdeal(r, gens), domain_error);  // not minimal
}

TEST_CASE("ideal colon and membership") {
  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a^2", "a*c"});
  MonomialIdeal Ia = ideal_colon(I, P("a", r));
  CHECK(Ia.equals_as_ideal(ideal(r, {"a", "c"})));
  CHECK(membership(I, P("a^2*d", r)));
  CHECK_FALSE(membership(I, P("a*d", r)));
  CHECK(ideal_colon(I, P("a^2", r)).is_unit());
}

TEST_CASE("graded and squarefree components") {
  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a*b", "c^3"});
  MonomialIdeal I3 = graded_component(I, 3);
  CHECK(membership(I3, P("a*b*c", r)));
  CHECK(membership(I3, P("c^3", r)));
  CHECK_FALSE(membership(I3, P("a*b", r)));
  MonomialIdeal sf = squarefree_component(I, 3);
  CHECK(sf.equals_as_ideal(ideal(r, {"a*b*c", "a*b*d"})));
  CHECK(squarefree_part(I).equals_as_ideal(ideal(r, {"a*b"})));
}

TEST_CASE("monomials_of_degree counts") {
  CHECK(monomials_of_degree(3, 0).size() == 1);
  CHECK(monomials_of_degree(3, 2).size() == 6);   // C(4,2)
  CHECK(monomials_of_degree(4, 3).size() == 20);  // C(6,3)
}

TEST_CASE("minimal primes") {
  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a*b", "b*c", "c*d"});
  std::vector<PrimeIdealMono> primes = minimal_primes(I);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimeIdealMono> expect = {PrimeIdealMono({0, 2}),
                                        PrimeIdealMono({1, 2}),
                                        PrimeIdealMono({1, 3})};
  std::sort(expect.begin(), expect.end());
  CHECK(primes == expect);
  CHECK_THROWS_AS((void)minimal_primes(MonomialIdeal(r, {P("1", r)})), domain_error);
}

TEST_CASE("admissible order checking reports first failure") {
  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a*b", "c*d"});
  CheckResult res = check_admissible(I, {0, 1});
  auto* fail = std::get_if<AdmissibleFailure>(&res);
  REQUIRE(fail != nullptr);
  CHECK(fail->position == 1);
  CHECK(io::format_monomial(fail->offending, r) == "a*b");
  CHECK_THROWS_AS((void)check_admissible(I, {0, 0}), domain_error);
  CHECK_THROWS_AS((void)check_admissible(I, {0}), domain_error);
}

TEST_CASE("remark fixture: two admissible orders, rearrangement, q-sets") {
  io::json doc = load_fixture("remark_lq.json");
  MonomialIdeal I = io::ideal_from_json(doc);
  auto s1 = check_admissible(I, doc["orders"]["sigma1"].get<std::vector<int>>());
  auto s2 = check_admissible(I, doc["orders"]["sigma2"].get<std::vector<int>>());
  REQUIRE(std::holds_alternative<AdmissibleOrder>(s1));
  REQUIRE(std::holds_alternative<AdmissibleOrder>(s2));
  AdmissibleOrder sigma = std::get<AdmissibleOrder>(s1);
  AdmissibleOrder inc = rearrange_degree_increasing(sigma);
  for (std::size_t pos = 0; pos < inc.order.size(); ++pos)
    CHECK(io::format_monomial(inc.gen_at(pos), I.ring) ==
          doc["rearranged"][pos].get<std::string>());
  CHECK(qset_invariance(sigma));
  CHECK(sigma.qsets_by_generator() == inc.qsets_by_generator());
  CHECK(std::get<AdmissibleOrder>(s2).qsets_by_generator() ==
        sigma.qsets_by_generator());
}

TEST_CASE("maximal ideal product order") {
  io::json doc = load_fixture("m_times.json");
  MonomialIdeal base = io::ideal_from_json(doc["base"]);
  MonomialIdeal mI = m_times_ideal(base);
  std::vector<Monomial> listed;
  for (const io::json& g : doc["product_gens"])
    listed.push_back(io::parse_monomial(g.get<std::string>(), base.ring));
  CHECK(mI.equals_as_ideal(MonomialIdeal(base.ring, listed)));
  CHECK_FALSE(support::lq_bruteforce(base));
  // an ideal with linear quotients feeds the survivor construction
  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a*b", "b*c"});
  auto w = find_admissible_order(I);
  REQUIRE(has_witness(w));
  AdmissibleOrder msigma =
      m_times_order(rearrange_degree_increasing(std::get<AdmissibleOrder>(w)));
  CHECK(msigma.ideal.equals_as_ideal(m_times_ideal(I)));
  CHECK(std::holds_alternative<AdmissibleOrder>(
      check_admissible(msigma.ideal, msigma.order)));
}

TEST_CASE("componentwise linear quotients and assembly") {
  io::json doc = load_fixture("product_lq.json");
  MonomialIdeal J = io::ideal_from_json(doc["J"]);
  ComponentwiseResult res = componentwise_lq(J);
  CHECK(res.all_linear);
  REQUIRE(res.components.count(3) == 1);
  CHECK(res.components.at(3).component.equals_as_ideal(graded_component(J, 3)));

  // assembly per the initial-part hypothesis: heads are the product-ideal
  // generators of the previous component in survivor order
  MonomialIdeal I = ideal(ring4(), {"a*b", "b*c", "a*c*d"});
  auto w = find_admissible_order(I);
  REQUIRE(has_witness(w));
  AdmissibleOrder inc = rearrange_degree_increasing(std::get<AdmissibleOrder>(w));
  ComponentwiseResult cw = componentwise_lq(I);
  REQUIRE(cw.all_linear);
  std::map<std::uint64_t, AdmissibleOrder> orders;
  std::optional<AdmissibleOrder> prev;
  for (auto& [deg, comp] : cw.components) {
    std::vector<Monomial> target;
    if (prev) {
      AdmissibleOrder msigma = m_times_order(*prev);
      for (std::size_t pos = 0; pos < msigma.order.size(); ++pos)
        target.push_back(msigma.gen_at(pos));
    }
    for (std::size_t pos = 0; pos < inc.order.size(); ++pos) {
      const Monomial& g = inc.gen_at(pos);
      if (g.degree() == deg) target.push_back(g);
    }
    std::vector<int> order;
    for (const Monomial& g : target)
      for (std::size_t i = 0; i < comp.component.gens.size(); ++i)
        if (comp.component.gens[i] == g) order.push_back(static_cast<int>(i));
    REQUIRE(order.size() == comp.component.gens.size());
    CheckResult chk = check_admissible(comp.component, order);
    REQUIRE(std::holds_alternative<AdmissibleOrder>(chk));
    orders.emplace(deg, std::get<AdmissibleOrder>(chk));
    prev = std::get<AdmissibleOrder>(chk);
  }
  AssemblyResult assembled = assemble_from_components(I, orders);
  REQUIRE(assembled.order.has_value());
  CHECK(std::holds_alternative<AdmissibleOrder>(
      check_admissible(I, assembled.order->order)));
}

TEST_CASE("squarefree part order") {
  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a*b", "b*c^2", "b*c*d"});
  auto w = find_admissible_order(I);
  REQUIRE(has_witness(w));
  AdmissibleOrder sub = squarefree_part_order(std::get<AdmissibleOrder>(w));
  CHECK(sub.ideal.equals_as_ideal(squarefree_part(I)));
  CHECK(std::holds_alternative<AdmissibleOrder>(
      check_admissible(sub.ideal, sub.order)));
}

TEST_CASE("stanley-reisner ideal and complex round trip") {
  // hollow triangle: minimal non-face {1,2,3}
  SimplicialComplex delta = make_complex(
      3, {face_from_vertices({0, 1}, 3), face_from_vertices({1, 2}, 3),
          face_from_vertices({0, 2}, 3)});
  Ring r = Ring::with_default_names(3);
  MonomialIdeal sr = stanley_reisner(delta, r);
  CHECK(sr.equals_as_ideal(ideal(r, {"x1*x2*x3"})));
  SimplicialComplex back = complex_from_stanley_reisner(sr);
  auto sorted = [](std::vector<Face> f) { std::sort(f.begin(), f.end()); return f; };
  CHECK(sorted(back.facets) == sorted(delta.facets));
}

TEST_CASE("alexander dual is an involution") {
  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a*b", "b*c", "c*d"});
  MonomialIdeal dual = dual_of_squarefree(I);
  CHECK(dual_of_squarefree(dual).equals_as_ideal(I));
  CHECK_THROWS_AS((void)dual_of_squarefree(ideal(r, {"a^2"})), domain_error);
}

TEST_CASE("facet skeleton fixture verbatim") {
  io::json doc = load_fixture("skeleton.json");
  SimplicialComplex delta = io::complex_from_json(doc);
  auto to_facets = [&](const io::json& arr) {
    std::vector<Face> fs;
    for (const io::json& f : arr) {
      std::vector<int> vs;
      for (const io::json& v : f) vs.push_back(v.get<int>() - 1);
      fs.push_back(face_from_vertices(vs, delta.n));
    }
    return fs;
  };
  CHECK(facet_skeleton(delta, 1).facets == to_facets(doc["skeleton1"]));
  CHECK(facet_skeleton(delta, 2).facets == to_facets(doc["skeleton2"]));
}

TEST_CASE("shelling via duality agrees with the direct verifier") {
  io::json doc = load_fixture("gamma_prime.json");
  SimplicialComplex gp = io::complex_from_json(doc);
  std::optional<Shelling> s = find_shelling(gp);
  REQUIRE(s.has_value());
  CHECK(verify_shelling_direct(gp, s->order));
  CHECK(restriction_sets_direct(gp, s->order) == s->restriction);
  Shelling re = rearranged_shelling(*s);
  CHECK(verify_shelling_direct(re.complex, re.order));
  for (std::size_t k = 0; k + 1 < re.order.size(); ++k)
    CHECK(face_size(re.complex.facets[re.order[k]]) >=
          face_size(re.complex.facets[re.order[k + 1]]));
  // the complex whose Stanley-Reisner ideal is the gamma facet ideal is not
  // shellable (its dual generators have no linear quotients)
  io::json gdoc = load_fixture("gamma.json");
  SimplicialComplex gamma = io::complex_from_json(gdoc);
  MonomialIdeal IG = facet_ideal(gamma, Ring::with_default_names(gamma.n));
  CHECK_FALSE(find_shelling(complex_from_stanley_reisner(IG)).has_value());
}

TEST_CASE("leaf orders") {
  io::json gdoc = load_fixture("gamma.json");
  SimplicialComplex gamma = io::complex_from_json(gdoc);
  std::optional<std::vector<int>> order = leaf_order(gamma);
  REQUIRE(order.has_value());
  // reversed removal order: each facet is a leaf among its predecessors
  for (std::size_t k = 1; k < order->size(); ++k) {
    std::vector<Face> prefix;
    for (std::size_t j = 0; j <= k; ++j) prefix.push_back(gamma.facets[(*order)[j]]);
    SimplicialComplex sub = make_complex(gamma.n, prefix, VertexPolicy::AllowMissing);
    CHECK(is_leaf(sub, gamma.facets[(*order)[k]]).has_value());
  }
  SimplicialComplex hollow = make_complex(
      3, {face_from_vertices({0, 1}, 3), face_from_vertices({1, 2}, 3),
          face_from_vertices({0, 2}, 3)});
  CHECK_FALSE(leaf_order(hollow).has_value());
  CHECK(free_vertices(gamma, gamma.facets[1]) == std::vector<int>{4});
}

TEST_CASE("generator leaves and minors") {
  Ring r = ring4();
  std::vector<Monomial> chain = {P("a*b", r), P("b*c", r), P("c*d", r)};
  auto leaf = generator_leaf(chain);
  REQUIRE(leaf.has_value());
  CHECK(leaf->leaf == 0);
  REQUIRE(leaf->branch.has_value());
  CHECK(*leaf->branch == 1);
  CHECK_THROWS_AS((void)generator_leaf({}), domain_error);

  MonomialIdeal I = ideal(r, {"a*b", "b*c", "c*d"});
  Minor m0 = minor(I, {0}, {});
  CHECK(m0.result.equals_as_ideal(
      ideal(Ring::with_names({"b", "c", "d"}), {"b*c", "c*d"})));
  Minor m1 = minor(I, {}, {1});
  CHECK(m1.result.equals_as_ideal(
      ideal(Ring::with_names({"a", "c", "d"}), {"a", "c"})));
  CHECK_THROWS_AS((void)minor(I, {0}, {0}), domain_error);
  CHECK(free_variables(I) == std::vector<int>{0, 3});
}

TEST_CASE("forest type: recursion, certificates, counterexample regression") {
  Ring r = ring4();
  CHECK(is_forest_type(ideal(r, {"a*b", "b*c", "c*d"})).forest_type);
  CHECK(is_forest_type(ideal(r, {"a^3", "b^2", "c*d^2"})).forest_type);
  // every generator subset has a leaf yet no minor recursion succeeds
  MonomialIdeal J = ideal(r, {"a^2*b", "a*b*c", "b*c*d", "c*d^2"});
  ForestTypeResult res = is_forest_type(J);
  CHECK_FALSE(res.forest_type);
  CHECK(res.leafless_subset.empty());
  CHECK_FALSE(res.no_free_variable_minor.empty());
  CHECK_FALSE(leafless_subset_naive(J.gens).has_value());
  CHECK_FALSE(free_variable_property(J));
  CHECK_THROWS_AS((void)is_forest_type(MonomialIdeal(r, {})), domain_error);
}

TEST_CASE("totally balanced matrices") {
  Ring r = Ring::with_default_names(3);
  MonomialIdeal triangle = ideal(r, {"x1*x2", "x2*x3", "x1*x3"});
  BalancedResult res = totally_balanced(incidence_matrix(triangle));
  CHECK_FALSE(res.balanced);
  CHECK(res.bad_rows.size() == 3);
  CHECK(res.bad_cols.size() == 3);
  Ring r4 = ring4();
  CHECK(totally_balanced(incidence_matrix(ideal(r4, {"a*b", "b*c", "c*d"}))).balanced);
  ClutterReport rep = clutter_equivalences(ideal(r4, {"a*b", "b*c", "c*d"}));
  CHECK(rep.agree);
  CHECK(rep.forest);
}

TEST_CASE("filtration verification and lifting") {
  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a^2", "a*c"});
  PrettyCleanFiltration F = construct_pretty_clean(I);
  FiltrationReport rep = verify_filtration(F);
  CHECK(rep.valid);
  CHECK(rep.terminal_unit);
  CHECK(rep.condition_b);
  CHECK_FALSE(rep.is_clean);  // (a) and (a,c) are associated, only (a) minimal

  // tampering breaks a colon identity
  PrettyCleanFiltration bad = F;
  bad.steps[0].chain_monomial = mono_mul(bad.steps[0].chain_monomial, P("d", r));
  CHECK_FALSE(verify_filtration(bad).valid);

  // condition (b) violation: chain for (a) then the same prime twice inverted
  PrettyCleanFiltration cb;
  cb.ideal = ideal(r, {"a*b"});
  cb.steps = {{P("a", r), PrimeIdealMono({1})}, {P("1", r), PrimeIdealMono({0})}};
  FiltrationReport cbrep = verify_filtration(cb);
  CHECK(cbrep.valid);  // this one is fine: (b) and (a) incomparable
  PrettyCleanFiltration cb2;
  cb2.ideal = ideal(r, {"a^2", "a*b"});
  cb2.steps = {{P("b", r), PrimeIdealMono({0})},
               {P("a", r), PrimeIdealMono({0, 1})},
               {P("1", r), PrimeIdealMono({0, 1})}};
  FiltrationReport cb2rep = verify_filtration(cb2);
  CHECK_FALSE(cb2rep.valid);  // earlier prime strictly inside a later one
  REQUIRE(cb2rep.offending_pair.has_value());
  CHECK(*cb2rep.offending_pair == std::make_pair(0, 1));

  // lifting a pure power
  PrettyCleanFiltration base;
  base.ideal = MonomialIdeal(r, {});
  base.steps = {{P("1", r), PrimeIdealMono(std::vector<int>{})}};
  PrettyCleanFiltration lifted = lift_pure_power(base, 0, 2);
  CHECK(lifted.ideal.equals_as_ideal(ideal(r, {"a^2"})));
  CHECK(lifted.steps.size() == 2);
  CHECK(verify_filtration(lifted).valid);
  CHECK_THROWS_AS((void)lift_pure_power(lifted, 0, 1), domain_error);
}

TEST_CASE("cleanness through the dual") {
  Ring r = ring4();
  CHECK(clean_squarefree(ideal(r, {"a*b", "b*c", "c*d"})).clean);
  CHECK_THROWS_AS((void)clean_squarefree(ideal(r, {"a^2"})), domain_error);
}

TEST_CASE("hilbert series") {
  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a*b"});
  HilbertSeries H = hilbert_series(I);
  CHECK(H.denominator_exponent == 4);
  CHECK(H.numerator == std::vector<long long>{1, 0, -1});
  HilbertSeries N = H.normalized();
  CHECK(N.denominator_exponent == 3);
  CHECK(N.numerator == std::vector<long long>{1, 1});
  StanleyDecomposition D;
  D.pieces = {{P("1", r), {1, 2, 3}}, {P("a", r), {0, 2, 3}}};
  CHECK(piece_series(D, 4).same_series(H));
  CHECK(verify_stanley(D, I).valid);
  CHECK(support::stanley_covers_bruteforce(D, I, 8));
}

TEST_CASE("stanley verification rejects bad decompositions") {
  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a*b"});
  StanleyDecomposition overlap;
  overlap.pieces = {{P("1", r), {0, 1, 2, 3}}, {P("a", r), {0}}};
  StanleyReport rep = verify_stanley(overlap, I);
  CHECK_FALSE(rep.valid);
  CHECK(rep.piece_meeting_ideal.has_value());  // first piece meets I
  StanleyDecomposition partial;
  partial.pieces = {{P("1", r), {1, 2, 3}}};
  StanleyReport rep2 = verify_stanley(partial, I);
  CHECK_FALSE(rep2.valid);
  CHECK_FALSE(rep2.covers);
}

TEST_CASE("interval partition fixture") {
  io::json doc = load_fixture("partition.json");
  IntervalPartition partition = io::partition_from_json(doc);
  PartitionReport rep = verify_interval_partition(partition);
  CHECK(rep.valid);
  IntervalPartition broken = partition;
  broken.intervals.pop_back();
  PartitionReport brep = verify_interval_partition(broken);
  CHECK_FALSE(brep.valid);
  CHECK(brep.uncovered_face.has_value());
}

TEST_CASE("betti numbers of small ideals") {
  Ring r2 = Ring::with_default_names(2);
  MonomialIdeal mxy(r2, {io::parse_monomial("x1", r2), io::parse_monomial("x2", r2)});
  BettiTable T = betti(mxy);
  CHECK(T.projective_dimension() == 2);
  CHECK(T.total().at(1) == 2);
  CHECK(T.total().at(2) == 1);
  CHECK(depth(mxy) == 0);

  Ring r = ring4();
  MonomialIdeal ci = ideal(r, {"a*b", "c*d"});
  BettiTable Tc = betti(ci);
  CHECK(Tc.projective_dimension() == 2);
  CHECK(Tc.total().at(2) == 1);
  CHECK(depth(ci) == 2);
  CHECK_FALSE(has_linear_resolution(ci));
  CHECK(has_linear_resolution(ideal(r, {"a*b", "a*c"})));

  BettiOptions mp;
  mp.mod_p = true;
  CHECK(betti(ci, mp).entries == Tc.entries);
}

TEST_CASE("serialization round trips and determinism") {
  io::json doc = load_fixture("gamma.json");
  SimplicialComplex gamma = io::complex_from_json(doc);
  CHECK(io::complex_from_json(io::complex_to_json(gamma)).facets == gamma.facets);

  Ring r = ring4();
  MonomialIdeal I = ideal(r, {"a^2*b", "c*d"});
  CHECK(io::ideal_from_json(io::ideal_to_json(I)) == I);
  CHECK(io::ideal_to_json(I).dump() == io::ideal_to_json(I).dump());

  PrettyCleanFiltration F = construct_pretty_clean(ideal(r, {"a^2", "a*c"}));
  PrettyCleanFiltration F2 = io::filtration_from_json(io::filtration_to_json(F));
  CHECK(F2.ideal == F.ideal);
  REQUIRE(F2.steps.size() == F.steps.size());
  for (std::size_t i = 0; i < F.steps.size(); ++i) {
    CHECK(F2.steps[i].chain_monomial == F.steps[i].chain_monomial);
    CHECK(F2.steps[i].prime == F.steps[i].prime);
  }

  StanleyDecomposition D = stanley_from_filtration(F);
  io::json dj = io::stanley_to_json(D, r);
  StanleyDecomposition D2 = io::stanley_from_json(dj, r);
  REQUIRE(D2.pieces.size() == D.pieces.size());
  for (std::size_t i = 0; i < D.pieces.size(); ++i) {
    CHECK(D2.pieces[i].head == D.pieces[i].head);
    CHECK(D2.pieces[i].vars == D.pieces[i].vars);
  }

  BettiTable T = betti(I);
  BettiTable T2 = io::betti_from_json(io::betti_to_json(T));
  CHECK(T2.nvars == T.nvars);
  CHECK(T2.entries == T.entries);

  IntervalPartition partition = io::partition_from_json(load_fixture("partition.json"));
  io::json pj = io::partition_to_json(partition);
  IntervalPartition p2 = io::partition_from_json(pj);
  CHECK(p2.complex.facets == partition.complex.facets);
  CHECK(p2.intervals.size() == partition.intervals.size());
}
