#pragma once

#include "tetra/objects.hpp"
#include "tetra/qpoly.hpp"
#include "tetra/sparse_poly.hpp"
#include "tetra/staircase_array.hpp"
#include "tetra/tetra_poset.hpp"

#include <json.hpp>

namespace tetra {

using Json = nlohmann::ordered_json;

// Object formats: ASM and TSSCPP as row-major matrices, monotone triangles and
// staircase arrays as ragged row lists (arrays include the j = 0 column),
// tournaments as [i, j, winner] triples, ideals as sorted [c1, c2, c3] lists.
// Every from_json throws InvalidInput on malformed data.

Json to_json(const Asm& a);
Json to_json(const MonotoneTriangle& m);
Json to_json(const Tsscpp& t);
Json to_json(const Tournament& t);
Json to_json(const StaircaseArray& x);
Json ideal_to_json(const TetraPoset& t, const OrderIdeal& ideal);
/// {"n", "colors", "vertices", "edges"}; edges grouped by color letter.
Json poset_to_json(const Subposet& p);

/// [{"lambda": e, "x": {"k": e_k}, "coeff": "decimal"}, ...] in graded lex order.
Json to_json(const SparsePoly& p);
/// Coefficients as decimal strings, lowest degree first.
Json to_json(const QPoly& p);

Asm asm_from_json(const Json& j);
MonotoneTriangle mt_from_json(const Json& j);
Tsscpp tsscpp_from_json(const Json& j);
/// n is inferred from the number of games (n = 1 for an empty list).
Tournament tournament_from_json(const Json& j);
StaircaseArray array_from_json(const Json& j);
OrderIdeal ideal_from_json(const Subposet& p, const Json& j);
SparsePoly sparse_poly_from_json(const Json& j);

}  // namespace tetra
