#pragma once

#include "mpa/combinatorics.hpp"
#include "mpa/multiset_algebra.hpp"
#include "mpa/partition_algebra.hpp"
#include "mpa/poly.hpp"
#include "mpa/rsk.hpp"
#include "mpa/schur_weyl.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace mpa {

using Json = nlohmann::json;

// Every *_from_json throws ParseError naming the offending path, e.g. "edges[2][0]".

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& field);

/// Coefficient array, constant term first.
Json to_json(const Poly& p);
/// Accepts a coefficient array or a single rational.
Poly poly_from_json(const Json& j, const std::string& field);

/// {"lambda":[2,1],"edges":[[[0,1],[1,1]],...]}
Json to_json(const MultisetDiagram& g);
/// Zero edges and weight mismatches are rejected.
MultisetDiagram multiset_diagram_from_json(const Json& j, const std::string& field = "");

/// {"k":5,"blocks":[[1,2,-1,-3],...]}; negative j is j'.
Json to_json(const SetPartitionDiagram& d);
SetPartitionDiagram set_partition_from_json(const Json& j, const std::string& field = "");

/// {"lambda":[...],"terms":[{"edges":...,"coeff":[...]},...]}
Json to_json(const MPElement& a);
/// Accepts the object form, a bare list of {"edges","coeff"} (needs `lambda`), or a single diagram.
MPElement mp_element_from_json(const Json& j, const std::optional<std::vector<int>>& lambda = std::nullopt,
                               const std::string& field = "");

/// {"k":2,"basis":"orbit","terms":[{"blocks":...,"coeff":[...]},...]}
Json to_json(const PAElement& a);
PAElement pa_element_from_json(const Json& j, const std::string& field = "");

Json to_json(const Multiset& m);
Multiset multiset_from_json(const Json& j, const std::string& field);

Json to_json(const IntegerPartition& p);
IntegerPartition partition_from_json(const Json& j, const std::string& field);

/// {"shape":[3,2],"rows":[[[],[],[1]],[[1],[]]]}
Json to_json(const MultisetTableau& t);
MultisetTableau tableau_from_json(const Json& j, const std::string& field = "");

/// {"T":...,"S":...}
Json to_json(const RSKPair& p);
RSKPair rsk_pair_from_json(const Json& j, const std::string& field = "");

/// {"n":3,"lambda":[2],"basis":[[[2,0,0]],...],"rows":[["1","0",...],...]}
Json to_json(const OperatorMatrix& m);
OperatorMatrix operator_matrix_from_json(const Json& j, const std::string& field = "");
/// Plain CSV of the entries, one matrix row per line.
std::string to_csv(const OperatorMatrix& m);

/// Parses text as JSON; syntax errors become ParseError(field, ...).
Json parse_json_text(const std::string& text, const std::string& field);

}  // namespace mpa
