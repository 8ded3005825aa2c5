#include "treehopf/serialization.hpp"

namespace treehopf {

namespace {

constexpr const char *kMatrixFormat = "treehopf.matrix";
constexpr const char *kFamilyFormat = "treehopf.family";

const Json &field(const Json &j, const char *name) {
  if (!j.is_object() || !j.contains(name))
    throw FormatError(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json &j, const char *name) {
  const Json &v = field(j, name);
  if (!v.is_number_integer())
    throw FormatError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json &j, const char *name) {
  const Json &v = field(j, name);
  if (!v.is_string())
    throw FormatError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

void check_header(const Json &j, const char *format) {
  if (string_field(j, "format") != format)
    throw FormatError(std::string("expected format '") + format + "'");
  if (int_field(j, "version") != 1)
    throw FormatError("unsupported version");
}

Rational rational_from(const Json &v) {
  if (v.is_number_integer())
    return Rational(v.get<long>());
  if (v.is_string())
    return parse_rational(v.get<std::string>());
  throw FormatError("expected a rational as integer or string");
}

} // namespace

Json matrix_to_json(const ElementMatrix &m, MatrixKind kind) {
  int n = m.dim() - 1;
  Json entries = Json::array();
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      const AlgebraElement &e = m.at(r, c);
      if (e.is_zero() || (kind == MatrixKind::Structure && r == c))
        continue;
      int i = kind == MatrixKind::Primitive ? r + 1 : r;
      entries.push_back({{"i", i}, {"j", c}, {"element", e.str()}});
    }
  return {{"format", kMatrixFormat},
          {"version", 1},
          {"kind", kind == MatrixKind::Primitive ? "primitive" : "structure"},
          {"n", n},
          {"entries", entries}};
}

MatrixRecord matrix_from_json(const Json &j) {
  check_header(j, kMatrixFormat);
  std::string kind_name = string_field(j, "kind");
  MatrixKind kind;
  if (kind_name == "primitive")
    kind = MatrixKind::Primitive;
  else if (kind_name == "structure")
    kind = MatrixKind::Structure;
  else
    throw FormatError("kind must be 'primitive' or 'structure'");
  int n = int_field(j, "n");
  if (n < 0)
    throw FormatError("n must be >= 0");
  MatrixRecord out{kind, ElementMatrix(n + 1)};
  if (kind == MatrixKind::Structure)
    for (int i = 0; i <= n; ++i)
      out.matrix.at(i, i) = AlgebraElement::scalar(1);
  const Json &entries = field(j, "entries");
  if (!entries.is_array())
    throw FormatError("entries must be an array");
  for (const auto &e : entries) {
    int i = int_field(e, "i");
    int c = int_field(e, "j");
    AlgebraElement value = AlgebraElement::parse(string_field(e, "element"));
    if (kind == MatrixKind::Primitive) {
      if (i < 1 || i > c || c > n)
        throw FormatError("primitive entry needs 1 <= i <= j <= n");
      out.matrix.at(i - 1, c) = std::move(value);
    } else {
      if (c < 0 || c >= i || i > n)
        throw FormatError("structure entry needs 0 <= j < i <= n");
      out.matrix.at(i, c) = std::move(value);
    }
  }
  return out;
}

Json family_to_json(const TreeFamily &family) {
  Json values = Json::object();
  for (const auto &[t, p] : family)
    values[t.str()] = p.str();
  return {{"format", kFamilyFormat}, {"version", 1}, {"values", values}};
}

TreeFamily family_from_json(const Json &j) {
  const Json *values = &j;
  if (j.is_object() && j.contains("format")) {
    check_header(j, kFamilyFormat);
    values = &field(j, "values");
  }
  if (!values->is_object())
    throw FormatError("family values must be an object");
  TreeFamily out;
  for (const auto &[tree, element] : values->items()) {
    if (!element.is_string())
      throw FormatError("family value for " + tree + " must be a string");
    out[RootedTree::parse(tree)] = AlgebraElement::parse(element.get<std::string>());
  }
  return out;
}

Json rational_matrix_to_json(const Matrix &m) {
  Json rows = Json::array();
  for (const auto &row : m) {
    Json r = Json::array();
    for (const auto &v : row)
      r.push_back(to_string(v));
    rows.push_back(r);
  }
  return rows;
}

Matrix rational_matrix_from_json(const Json &j) {
  if (!j.is_array())
    throw FormatError("matrix must be an array of rows");
  Matrix out;
  for (const auto &row : j) {
    if (!row.is_array() || row.size() != j.size())
      throw FormatError("matrix must be square");
    std::vector<Rational> r;
    for (const auto &v : row)
      r.push_back(rational_from(v));
    out.push_back(std::move(r));
  }
  return out;
}

Json element_to_json(const AlgebraElement &x) {
  Json terms = Json::array();
  for (const auto &[f, c] : x.terms())
    terms.push_back({{"coefficient", to_string(c)}, {"forest", f.str()}});
  return {{"text", x.str()}, {"terms", terms}};
}

Json tensor_to_json(const TensorElement &t) {
  Json terms = Json::array();
  for (const auto &[key, c] : t.terms()) {
    Json factors = Json::array();
    for (const auto &f : key)
      factors.push_back(f.str());
    terms.push_back({{"coefficient", to_string(c)}, {"factors", factors}});
  }
  return {{"text", t.str()}, {"rank", t.rank()}, {"terms", terms}};
}

Json gr_to_json(const GrElement &x) {
  Json terms = Json::array();
  for (const auto &[key, c] : x) {
    Json chain = Json::array();
    for (const auto &[w, idx] : key)
      chain.push_back({{"weight", w}, {"index", idx}});
    terms.push_back({{"coefficient", to_string(c)}, {"chain", chain}});
  }
  return {{"text", gr_str(x)}, {"terms", terms}};
}

namespace {

Json monomial_to_json(const Monomial &m) {
  Json factors = Json::array();
  for (const auto &f : m.factors) {
    if (f.is_bracket())
      factors.push_back({{"bracket", monomial_to_json(*f.bracket)}});
    else
      factors.push_back({{"symbol", f.symbol.str()}});
  }
  return factors;
}

} // namespace

Json renorm_to_json(const RenormExpression &e) {
  Json terms = Json::array();
  for (const auto &[c, m] : e.terms())
    terms.push_back({{"coefficient", to_string(c)}, {"factors", monomial_to_json(m)}});
  return {{"text", e.str()}, {"terms", terms}};
}

} // namespace treehopf
