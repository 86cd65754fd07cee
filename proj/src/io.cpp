#include "micert/io.hpp"

#include <algorithm>
#include <sstream>

namespace micert::io {

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw domain_error(what); }

int var_index(const Ring& ring, const std::string& name) {
  for (int v = 0; v < ring.n; ++v)
    if (ring.names[v] == name) return v;
  bad_input("unknown variable '" + name + "'");
}

std::vector<int> verts_from_json(const json& arr, int n, const std::string& what) {
  if (!arr.is_array()) bad_input(what + " must be an array");
  std::vector<int> out;
  for (const json& v : arr) {
    if (!v.is_number_integer()) bad_input(what + " entries must be integers");
    int w = v.get<int>();
    if (w < 1 || w > n) bad_input(what + ": vertex out of range");
    out.push_back(w - 1);
  }
  return out;
}

json verts_to_json(const std::vector<int>& verts) {
  json arr = json::array();
  for (int v : verts) arr.push_back(v + 1);
  return arr;
}

}  // namespace

Monomial parse_monomial(const std::string& text, const Ring& ring) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) bad_input("empty monomial");
  Monomial m = Monomial::one(ring.n);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t star = s.find('*', pos);
    std::string factor = s.substr(pos, star == std::string::npos ? star : star - pos);
    if (factor.empty())
      bad_input("empty factor at position " + std::to_string(pos) + " in '" + text + "'");
    if (factor == "1") {
      // unit factor, contributes nothing
    } else {
      std::size_t caret = factor.find('^');
      std::string name = factor.substr(0, caret);
      unsigned long exp = 1;
      if (caret != std::string::npos) {
        std::string tail = factor.substr(caret + 1);
        if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c));
            }))
          bad_input("bad exponent at position " + std::to_string(pos + caret + 1) +
                    " in '" + text + "'");
        exp = std::stoul(tail);
        if (exp > 1000000) bad_input("exponent too large in '" + text + "'");
      }
      m.exps.at(var_index(ring, name)) += static_cast<Exponent>(exp);
    }
    if (star == std::string::npos) break;
    pos = star + 1;
    if (pos == s.size()) bad_input("trailing '*' in '" + text + "'");
  }
  return m;
}

std::string format_monomial(const Monomial& m, const Ring& ring) {
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int v = 0; v < ring.n; ++v) {
    if (m.exps[v] == 0) continue;
    if (!first) out << '*';
    out << ring.names[v];
    if (m.exps[v] > 1) out << '^' << m.exps[v];
    first = false;
  }
  return out.str();
}

Ring ring_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vars") || !doc["vars"].is_array())
    bad_input("expected an object with a \"vars\" array");
  std::vector<std::string> names;
  for (const json& v : doc["vars"]) {
    if (!v.is_string()) bad_input("\"vars\" entries must be strings");
    names.push_back(v.get<std::string>());
  }
  if (names.empty()) bad_input("\"vars\" must be nonempty");
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    bad_input("duplicate variable name");
  return Ring::with_names(std::move(names));
}

MonomialIdeal ideal_from_json(const json& doc) {
  Ring ring = ring_from_json(doc);
  if (!doc.contains("gens") || !doc["gens"].is_array())
    bad_input("expected a \"gens\" array");
  std::vector<Monomial> gens;
  for (const json& g : doc["gens"]) {
    if (!g.is_string()) bad_input("\"gens\" entries must be strings");
    gens.push_back(parse_monomial(g.get<std::string>(), ring));
  }
  return MonomialIdeal(ring, std::move(gens));
}

json ideal_to_json(const MonomialIdeal& I) {
  json doc;
  doc["vars"] = I.ring.names;
  json gens = json::array();
  for (const Monomial& g : I.gens) gens.push_back(format_monomial(g, I.ring));
  doc["gens"] = gens;
  return doc;
}

SimplicialComplex complex_from_json(const json& doc, VertexPolicy policy) {
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc["vertices"].is_number_integer())
    bad_input("expected an object with an integer \"vertices\"");
  int n = doc["vertices"].get<int>();
  if (n < 1 || n > 63) bad_input("\"vertices\" must be in 1..63");
  if (!doc.contains("facets") || !doc["facets"].is_array())
    bad_input("expected a \"facets\" array");
  std::vector<Face> facets;
  for (const json& f : doc["facets"])
    facets.push_back(face_from_vertices(verts_from_json(f, n, "facet"), n));
  return make_complex(n, facets, policy);
}

json complex_to_json(const SimplicialComplex& delta) {
  json doc;
  doc["vertices"] = delta.n;
  json facets = json::array();
  for (Face f : delta.facets) facets.push_back(verts_to_json(face_vertices(f)));
  doc["facets"] = facets;
  return doc;
}

IntervalPartition partition_from_json(const json& doc) {
  IntervalPartition P;
  P.complex = complex_from_json(doc);
  if (!doc.contains("intervals") || !doc["intervals"].is_array())
    bad_input("expected an \"intervals\" array");
  for (const json& iv : doc["intervals"]) {
    if (!iv.is_array() || iv.size() != 2)
      bad_input("each interval must be a [lower, upper] pair");
    Interval out;
    out.lower = face_from_vertices(verts_from_json(iv[0], P.complex.n, "interval"),
                                   P.complex.n);
    out.upper = face_from_vertices(verts_from_json(iv[1], P.complex.n, "interval"),
                                   P.complex.n);
    P.intervals.push_back(out);
  }
  return P;
}

json partition_to_json(const IntervalPartition& P) {
  json doc = complex_to_json(P.complex);
  json ivs = json::array();
  for (const Interval& iv : P.intervals)
    ivs.push_back(json::array({verts_to_json(face_vertices(iv.lower)),
                               verts_to_json(face_vertices(iv.upper))}));
  doc["intervals"] = ivs;
  return doc;
}

namespace {

json names_of(const std::vector<int>& vars, const Ring& ring) {
  json arr = json::array();
  for (int v : vars) arr.push_back(ring.names.at(v));
  return arr;
}

std::vector<int> vars_from_names(const json& arr, const Ring& ring) {
  if (!arr.is_array()) bad_input("variable list must be an array");
  std::vector<int> out;
  for (const json& v : arr) {
    if (!v.is_string()) bad_input("variable list entries must be strings");
    out.push_back(var_index(ring, v.get<std::string>()));
  }
  return out;
}

}  // namespace

json filtration_to_json(const PrettyCleanFiltration& F) {
  json doc;
  doc["ideal"] = ideal_to_json(F.ideal);
  json steps = json::array();
  for (const FiltrationStep& s : F.steps)
    steps.push_back(json::array({format_monomial(s.chain_monomial, F.ideal.ring),
                                 names_of(s.prime.vars, F.ideal.ring)}));
  doc["steps"] = steps;
  return doc;
}

PrettyCleanFiltration filtration_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("ideal") || !doc.contains("steps"))
    bad_input("expected \"ideal\" and \"steps\"");
  PrettyCleanFiltration F;
  F.ideal = ideal_from_json(doc["ideal"]);
  for (const json& s : doc["steps"]) {
    if (!s.is_array() || s.size() != 2)
      bad_input("each step must be a [monomial, [vars]] pair");
    FiltrationStep step;
    step.chain_monomial = parse_monomial(s[0].get<std::string>(), F.ideal.ring);
    step.prime = PrimeIdealMono(vars_from_names(s[1], F.ideal.ring));
    F.steps.push_back(std::move(step));
  }
  return F;
}

json stanley_to_json(const StanleyDecomposition& D, const Ring& ring) {
  json pieces = json::array();
  for (const StanleyPiece& p : D.pieces)
    pieces.push_back(
        json::array({format_monomial(p.head, ring), names_of(p.vars, ring)}));
  json doc;
  doc["pieces"] = pieces;
  return doc;
}

StanleyDecomposition stanley_from_json(const json& doc, const Ring& ring) {
  if (!doc.is_object() || !doc.contains("pieces") || !doc["pieces"].is_array())
    bad_input("expected a \"pieces\" array");
  StanleyDecomposition D;
  for (const json& p : doc["pieces"]) {
    if (!p.is_array() || p.size() != 2)
      bad_input("each piece must be a [monomial, [vars]] pair");
    StanleyPiece piece;
    piece.head = parse_monomial(p[0].get<std::string>(), ring);
    piece.vars = vars_from_names(p[1], ring);
    std::sort(piece.vars.begin(), piece.vars.end());
    D.pieces.push_back(std::move(piece));
  }
  return D;
}

json hilbert_to_json(const HilbertSeries& H) {
  json doc;
  doc["numerator"] = H.numerator;
  doc["denominator_exponent"] = H.denominator_exponent;
  return doc;
}

json betti_to_json(const BettiTable& T) {
  json doc;
  doc["nvars"] = T.nvars;
  json entries;
  for (const auto& [key, val] : T.entries) {
    std::ostringstream k;
    k << key.first << ':';
    for (std::size_t i = 0; i < key.second.size(); ++i) {
      if (i) k << ',';
      k << key.second[i];
    }
    entries[k.str()] = val;
  }
  doc["entries"] = entries;
  return doc;
}

BettiTable betti_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("nvars") || !doc.contains("entries"))
    bad_input("expected \"nvars\" and \"entries\"");
  BettiTable T;
  T.nvars = doc["nvars"].get<int>();
  for (const auto& [key, val] : doc["entries"].items()) {
    std::size_t colon = key.find(':');
    if (colon == std::string::npos) bad_input("bad Betti key '" + key + "'");
    int i = std::stoi(key.substr(0, colon));
    std::vector<Exponent> alpha;
    std::stringstream rest(key.substr(colon + 1));
    std::string tok;
    while (std::getline(rest, tok, ','))
      alpha.push_back(static_cast<Exponent>(std::stoul(tok)));
    if (static_cast<int>(alpha.size()) != T.nvars)
      bad_input("Betti key length mismatch in '" + key + "'");
    T.entries[{i, alpha}] = val.get<std::uint64_t>();
  }
  return T;
}

json incidence_to_json(const IncidenceMatrix& M) {
  json doc;
  doc["rows"] = M.rows;
  doc["cols"] = M.cols;
  doc["entries"] = M.entries;
  return doc;
}

json order_to_json(const AdmissibleOrder& sigma) {
  json doc;
  json order = json::array();
  json qsets = json::array();
  for (std::size_t pos = 0; pos < sigma.order.size(); ++pos) {
    order.push_back(format_monomial(sigma.gen_at(pos), sigma.ideal.ring));
    qsets.push_back(names_of(sigma.qsets[pos], sigma.ideal.ring));
  }
  doc["order"] = order;
  doc["order_indices"] = sigma.order;
  doc["qsets"] = qsets;
  return doc;
}

json shelling_to_json(const Shelling& s) {
  json doc;
  json order = json::array();
  json restriction = json::array();
  for (std::size_t pos = 0; pos < s.order.size(); ++pos) {
    order.push_back(verts_to_json(face_vertices(s.complex.facets[s.order[pos]])));
    restriction.push_back(verts_to_json(s.restriction[pos]));
  }
  doc["order"] = order;
  doc["order_indices"] = s.order;
  doc["restriction"] = restriction;
  return doc;
}

}  // namespace micert::io
