#pragma once

#include <map>
#include <optional>

#include "json.hpp"

#include "tropid/checker.hpp"
#include "tropid/models.hpp"
#include "tropid/poset.hpp"
#include "tropid/witness.hpp"

namespace tropid {

using Json = nlohmann::ordered_json;

/// "-inf" or "p/q". Reading also accepts JSON integers. Throws ParseError.
Json to_json(const TropScalar& value);
TropScalar scalar_from_json(const Json& j);

/// Row-major array of rows.
Json to_json(const TropMatrix& m);
/// Throws ParseError unless `j` is a dim x dim array of scalars.
TropMatrix matrix_from_json(const Json& j, const PosetPtr& index);

/// {"elements": [...], "leq": [[a, b], ...]} with every strict pair of the closure.
Json to_json(const Poset& poset);
/// Reads the same shape; "leq" may be any generating relation. Throws ParseError
/// on a malformed document and InvalidArgument on a cyclic relation.
Poset poset_from_json(const Json& j);

Json to_json(const Bicyclic& x);  // {"i", "j"}; big values as decimal strings
Json to_json(const Fmim& x);      // {"i", "j", "k"}

Json to_json(const TropPoly& f);
Json to_json(const Witness& w);

/// Verdict with its failure details and, when given, the falsifying witness.
Json to_json(const Verdict& v, const std::optional<Witness>& witness = std::nullopt);

/// Every compared pair of the UT_n check, optionally reduced to essential terms.
Json polys_to_json(const Identity& id, std::size_t n, bool essential);

/// Letter assignments, as {"a": value, ...}, [{"letter": "a", "value": ...}],
/// or either of those under an "assignment" key (so witness output reads back).
/// Bicyclic values are {"i","j"} or [i, j]; fmim values {"i","j","k"} or [i, j, k].
std::map<Letter, TropMatrix> matrix_assignment_from_json(const Json& j, const PosetPtr& index);
std::map<Letter, Bicyclic> bicyclic_assignment_from_json(const Json& j);
std::map<Letter, Fmim> fmim_assignment_from_json(const Json& j);

} // namespace tropid
