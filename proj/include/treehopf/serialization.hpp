#pragma once

#include <string>

#include <json.hpp>

#include "treehopf/comodule.hpp"
#include "treehopf/morphisms.hpp"
#include "treehopf/renorm.hpp"

namespace treehopf {

using Json = nlohmann::json;

/// Raised for malformed records.
class FormatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class MatrixKind { Primitive, Structure };

/// {"format": "treehopf.matrix", "version": 1, "kind": ..., "n": ...,
///  "entries": [{"i", "j", "element"}]}. Primitive entries use the family
/// indices 1 <= i <= j <= n; structure entries use 0 <= j < i <= n.
Json matrix_to_json(const ElementMatrix &m, MatrixKind kind);
struct MatrixRecord {
  MatrixKind kind;
  ElementMatrix matrix;
};
MatrixRecord matrix_from_json(const Json &j);

/// {"format": "treehopf.family", "version": 1, "values": {tree: element}}.
Json family_to_json(const TreeFamily &family);
/// Accepts the record above or a bare {tree: element} object.
TreeFamily family_from_json(const Json &j);

/// Rational matrix as rows of strings; numbers are accepted on input.
Json rational_matrix_to_json(const Matrix &m);
Matrix rational_matrix_from_json(const Json &j);

Json element_to_json(const AlgebraElement &x);
Json tensor_to_json(const TensorElement &t);
Json gr_to_json(const GrElement &x);
Json renorm_to_json(const RenormExpression &e);

} // namespace treehopf
