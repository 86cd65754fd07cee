#pragma once

#include <string>

#include "json.hpp"
#include "micert/betti.hpp"
#include "micert/filtration.hpp"
#include "micert/forest.hpp"
#include "micert/simplicial.hpp"

// JSON (de)serialization and the monomial text syntax `x1^2*x3`.
// nlohmann::ordered_json keeps key order stable, so identical values print
// byte-identically.  Vertices are 1-based on the wire.

namespace micert::io {

using json = nlohmann::ordered_json;

// product of powers over the declared names; "1" is the unit monomial;
// whitespace is insignificant.  Errors carry the offending position.
Monomial parse_monomial(const std::string& text, const Ring& ring);
std::string format_monomial(const Monomial& m, const Ring& ring);

Ring ring_from_json(const json& doc);  // reads "vars"

MonomialIdeal ideal_from_json(const json& doc);  // {"vars": [...], "gens": [...]}
json ideal_to_json(const MonomialIdeal& I);

// {"vertices": n, "facets": [[1-based vertex lists]]}
SimplicialComplex complex_from_json(const json& doc,
                                    VertexPolicy policy = VertexPolicy::Reject);
json complex_to_json(const SimplicialComplex& delta);

// complex document plus "intervals": [[[lower], [upper]], ...], 1-based
IntervalPartition partition_from_json(const json& doc);
json partition_to_json(const IntervalPartition& P);

// steps / pieces as [monomial, [variable names]] pairs
json filtration_to_json(const PrettyCleanFiltration& F);
PrettyCleanFiltration filtration_from_json(const json& doc);
json stanley_to_json(const StanleyDecomposition& D, const Ring& ring);
StanleyDecomposition stanley_from_json(const json& doc, const Ring& ring);

json hilbert_to_json(const HilbertSeries& H);

// {"i:e1,e2,...": value}
json betti_to_json(const BettiTable& T);
BettiTable betti_from_json(const json& doc);

json incidence_to_json(const IncidenceMatrix& M);

json order_to_json(const AdmissibleOrder& sigma);
json shelling_to_json(const Shelling& s);

}  // namespace micert::io
