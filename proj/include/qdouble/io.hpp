#pragma once

// JSON encodings.
//
//   scalar   0 | integer | "p/q" | {"root": [N, k]} | {"order": N, "num": [...], "den": [...]}
//   group    "zn:4" | {"label": ..., "size": n, "mul": [[...], ...]}
//   cocycle  "trivial" | "std:zn:N:p=k" | {"group": ..., "label": ..., "values": [[[s, ...], ...], ...]}
//   tensor   [{"idx": [i, j, k], "val": s}, ...]
//   algebra  {"provenance": {...}, "dim", "order", "mul" (dense [i][j][k]), "unit", "coproduct",
//             "counit", "associator", ["antipode", "alpha", "beta", "rmatrix"]}
//   object   {"group": ..., "cocycle": ..., "label": ..., "grading": [...], "action": [[vector, ...], ...]}
//
// Big integers are written as decimal strings.

#include <string>

#include "json.hpp"
#include "qdouble/cochain.hpp"
#include "qdouble/crossedmod.hpp"
#include "qdouble/tensor.hpp"

namespace qdouble {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const CycScalar& c);
/// Parses a scalar at its own order.
CycScalar scalar_from_json(const Json& j);
/// Parses and embeds into Q(zeta_order); the scalar's order must divide it.
CycScalar scalar_from_json(const Json& j, unsigned order);
/// Order of the field a scalar literal lives in (1 for rationals).
unsigned scalar_json_order(const Json& j);

Json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j, int arity, int dim, unsigned order);

Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);

/// A group table that has not been validated (for corrupted-table checks).
struct RawGroupTable {
  std::string label;
  int size = 0;
  std::vector<int> table;
};
RawGroupTable raw_group_from_json(const Json& j);

Json cocycle_to_json(const Cochain3& phi);
/// Values at mixed orders are embedded into their lcm. If `group` is given
/// and the file names a different table, throws invalid_argument.
Cochain3 cocycle_from_json(const Json& j, GroupPtr group = nullptr);
/// "trivial", "std:zn:N:p=k", a JSON file path, or inline JSON text.
Cochain3 resolve_cocycle(const std::string& descriptor, GroupPtr group);

Json qhopf_to_json(const QuasiHopfData& H, const Json& provenance = Json::object());
QuasiHopfData qhopf_from_json(const Json& j);

Json object_to_json(const CrossedGModule& V);
/// The object's cocycle must match `phi` when given.
CrossedGModule object_from_json(const Json& j, std::shared_ptr<const Cochain3> phi = nullptr);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Parses JSON text, mapping syntax errors to ErrorCode::parse_error.
Json parse_json(const std::string& text);

}  // namespace qdouble
