#include "treehopf/comodule.hpp"

#include <algorithm>
#include <stdexcept>

#include "treehopf/growth.hpp"
#include "treehopf/hopf.hpp"

namespace treehopf {

ElementMatrix::ElementMatrix(int dim)
    : dim_(dim), entries_(dim, std::vector<AlgebraElement>(dim)) {
  if (dim < 0)
    throw std::invalid_argument("matrix size must be >= 0");
}

const AlgebraElement &family_entry(const PrimitiveMatrix &p, int i, int j) {
  return p.at(i - 1, j);
}

void set_family_entry(PrimitiveMatrix &p, int i, int j, AlgebraElement value) {
  if (i < 1 || i > j || j >= p.dim())
    throw std::out_of_range("family entry out of range");
  p.at(i - 1, j) = std::move(value);
}

std::vector<std::vector<Interval>> decompositions(int i, int j) {
  if (i > j)
    throw std::invalid_argument("decompositions: i > j");
  std::vector<std::vector<Interval>> out;
  // Bit b set means a break after position i + b.
  int gaps = j - i;
  for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
    std::vector<Interval> parts;
    int start = i;
    for (int b = 0; b < gaps; ++b)
      if (mask & (1u << b)) {
        parts.emplace_back(start, i + b);
        start = i + b + 1;
      }
    parts.emplace_back(start, j);
    out.push_back(std::move(parts));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto &a, const auto &b) { return a.size() < b.size(); });
  return out;
}

namespace {

AlgebraElement chain_of(const PrimitiveMatrix &p, const std::vector<Interval> &parts) {
  std::vector<AlgebraElement> top_first;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it)
    top_first.push_back(family_entry(p, it->first, it->second));
  for (const auto &x : top_first)
    if (x.is_zero())
      return {};
  return chain_unchecked(top_first);
}

void check_family_shape(const PrimitiveMatrix &p) {
  for (int r = 0; r < p.dim(); ++r)
    for (int c = 0; c <= r; ++c)
      if (!p.at(r, c).is_zero())
        throw std::invalid_argument("family matrix must be strictly upper triangular");
}

void check_structure_shape(const StructureMatrix &q) {
  for (int r = 0; r < q.dim(); ++r)
    for (int c = r; c < q.dim(); ++c)
      if (!(q.at(r, c) == (r == c ? AlgebraElement::scalar(1) : AlgebraElement())))
        throw std::invalid_argument("structure matrix must be lower unitriangular");
}

} // namespace

StructureMatrix build_comodule(const PrimitiveMatrix &p) {
  check_family_shape(p);
  int n = p.dim() - 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (!is_primitive(family_entry(p, i, j)))
        throw std::invalid_argument("family entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is not primitive");
  StructureMatrix q(n + 1);
  for (int i = 0; i <= n; ++i) {
    q.at(i, i) = AlgebraElement::scalar(1);
    for (int j = 0; j < i; ++j)
      for (const auto &parts : decompositions(j + 1, i))
        q.at(i, j) += chain_of(p, parts);
  }
  return q;
}

bool verify_coassociative(const StructureMatrix &q) {
  int size = q.dim();
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      if (counit(q.at(i, j)) != (i == j ? 1 : 0))
        return false;
      TensorElement rhs(2);
      for (int l = 0; l < size; ++l)
        if (!q.at(i, l).is_zero() && !q.at(l, j).is_zero())
          rhs += TensorElement::tensor({q.at(i, l), q.at(l, j)});
      if (!(coproduct(q.at(i, j)) == rhs))
        return false;
    }
  return true;
}

PrimitiveMatrix extract_family(const StructureMatrix &q) {
  check_structure_shape(q);
  if (!verify_coassociative(q))
    throw std::invalid_argument("structure matrix is not coassociative");
  int n = q.dim() - 1;
  PrimitiveMatrix p(n + 1);
  for (int len = 0; len < n; ++len)
    for (int i = 1; i + len <= n; ++i) {
      int j = i + len;
      AlgebraElement value = q.at(j, i - 1);
      for (const auto &parts : decompositions(i, j))
        if (parts.size() > 1)
          value -= chain_of(p, parts);
      set_family_entry(p, i, j, std::move(value));
    }
  return p;
}

PrimitiveMatrix extract_family_by_projection(const StructureMatrix &q) {
  check_structure_shape(q);
  int n = q.dim() - 1;
  PrimitiveMatrix p(n + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      set_family_entry(p, i, j, pi1(q.at(j, i - 1)));
  return p;
}

// ---------------------------------------------------------------------------
// Flags

namespace {

// m[F][i][j] = coefficient of F in Q(i,j) - δ_ij, over every forest F present.
std::vector<Matrix> coefficient_slices(const StructureMatrix &q) {
  int size = q.dim();
  ForestIndex index;
  std::vector<Matrix> slices;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      AlgebraElement e = q.at(i, j);
      if (i == j)
        e.add_term(Forest(), -1);
      for (const auto &[f, c] : e.terms()) {
        int k = index.index(f);
        if (k == static_cast<int>(slices.size()))
          slices.emplace_back(size, std::vector<Rational>(size, Rational(0)));
        slices[k][i][j] = c;
      }
    }
  return slices;
}

// Vectors x with A M_F^T x = 0 for every slice; A empty means no constraint
// beyond M_F^T x = 0 itself.
std::vector<std::vector<Rational>> solve_step(const std::vector<Matrix> &slices,
                                              const Matrix &annihilator, int size) {
  Matrix system;
  for (const auto &m : slices) {
    Matrix mt = transpose(m);
    Matrix rows = annihilator.empty() ? mt : multiply(annihilator, mt);
    for (auto &r : rows)
      system.push_back(std::move(r));
  }
  if (system.empty())
    system.push_back(std::vector<Rational>(size, Rational(0)));
  return kernel(system);
}

} // namespace

std::vector<std::vector<Rational>> trivial_vectors(const StructureMatrix &q) {
  return solve_step(coefficient_slices(q), {}, q.dim());
}

Flag flag(const StructureMatrix &q) {
  int size = q.dim();
  auto slices = coefficient_slices(q);
  Flag out;
  Matrix annihilator;  // rows span the annihilator of the current C_i
  std::vector<std::vector<Rational>> adapted;  // basis vectors, in flag order
  while (true) {
    auto space = solve_step(slices, annihilator, size);
    int dim = static_cast<int>(space.size());
    int prev = out.dims.empty() ? 0 : out.dims.back();
    if (dim <= prev)
      throw std::logic_error("flag does not grow: comodule axioms violated");
    // Extend the adapted basis by vectors of the new space.
    for (const auto &v : space) {
      auto trial = adapted;
      trial.push_back(v);
      if (rank(trial) == static_cast<int>(trial.size()))
        adapted.push_back(v);
    }
    out.dims.push_back(dim);
    out.type.push_back(dim - prev);
    if (dim == size)
      break;
    annihilator = kernel(space);
  }
  out.basis = transpose(adapted);
  return out;
}

// ---------------------------------------------------------------------------
// Reduced families

namespace {

bool block_zero(const PrimitiveMatrix &p, int lo, int hi) {
  for (int r = lo; r <= hi; ++r)
    for (int c = lo; c <= hi; ++c)
      if (!p.at(r, c).is_zero())
        return false;
  return true;
}

} // namespace

std::optional<std::vector<int>> is_reduced(const PrimitiveMatrix &p) {
  int size = p.dim();
  std::vector<int> starts;
  int lo = 0;
  while (lo < size) {
    int hi = lo;
    while (hi + 1 < size && block_zero(p, lo, hi + 1))
      ++hi;
    starts.push_back(lo);
    lo = hi + 1;
  }
  std::vector<int> type;
  for (std::size_t b = 0; b < starts.size(); ++b)
    type.push_back((b + 1 < starts.size() ? starts[b + 1] : size) - starts[b]);
  for (std::size_t b = 1; b < starts.size(); ++b) {
    int row_lo = starts[b - 1], row_hi = starts[b] - 1;
    int col_lo = starts[b], col_hi = starts[b] + type[b] - 1;
    // Columns as vectors in H^{rows}: flatten (row, forest) into one index.
    ForestIndex index;
    std::vector<SparseVector> columns;
    for (int c = col_lo; c <= col_hi; ++c) {
      SparseVector v;
      for (int r = row_lo; r <= row_hi; ++r)
        for (const auto &[f, coef] : p.at(r, c).terms())
          v[index.index(f) * size + (r - row_lo)] = coef;
      columns.push_back(std::move(v));
    }
    EchelonBasis echelon;
    for (std::size_t k = 0; k < columns.size(); ++k)
      if (!echelon.insert(columns[k], static_cast<int>(k)))
        return std::nullopt;
  }
  return type;
}

bool in_parabolic(const Matrix &g, const std::vector<int> &type) {
  int size = static_cast<int>(g.size());
  int total = 0;
  for (int c : type)
    total += c;
  if (total != size)
    return false;
  std::vector<int> block(size);
  int pos = 0;
  for (std::size_t b = 0; b < type.size(); ++b)
    for (int k = 0; k < type[b]; ++k)
      block[pos++] = static_cast<int>(b);
  for (int r = 0; r < size; ++r) {
    if (static_cast<int>(g[r].size()) != size)
      return false;
    for (int c = 0; c < size; ++c)
      if (block[r] > block[c] && g[r][c] != 0)
        return false;
  }
  return invert(g).has_value();
}

ElementMatrix scalar_times(const Matrix &a, const ElementMatrix &m) {
  int size = m.dim();
  ElementMatrix out(size);
  for (int r = 0; r < size; ++r)
    for (int k = 0; k < size; ++k) {
      if (a[r][k] == 0)
        continue;
      for (int c = 0; c < size; ++c)
        if (!m.at(k, c).is_zero())
          out.at(r, c) += a[r][k] * m.at(k, c);
    }
  return out;
}

ElementMatrix times_scalar(const ElementMatrix &m, const Matrix &a) {
  int size = m.dim();
  ElementMatrix out(size);
  for (int r = 0; r < size; ++r)
    for (int k = 0; k < size; ++k) {
      if (m.at(r, k).is_zero())
        continue;
      for (int c = 0; c < size; ++c)
        if (a[k][c] != 0)
          out.at(r, c) += a[k][c] * m.at(r, k);
    }
  return out;
}

PrimitiveMatrix act(const Matrix &g, const PrimitiveMatrix &p) {
  if (static_cast<int>(g.size()) != p.dim())
    throw std::invalid_argument("group element has the wrong size");
  auto type = is_reduced(p);
  if (!type)
    throw std::invalid_argument("family is not reduced");
  if (!in_parabolic(g, *type)) {
    if (!invert(g))
      throw std::invalid_argument("group element is singular");
    throw std::invalid_argument("group element does not match the type of the family");
  }
  return times_scalar(scalar_times(g, p), *invert(g));
}

bool conjugate_check(const Matrix &g, const PrimitiveMatrix &p, const PrimitiveMatrix &p2) {
  if (!(act(g, p) == p2))
    return false;
  Matrix gt = transpose(g);
  Matrix gt_inv = *invert(gt);
  StructureMatrix q = build_comodule(p);
  StructureMatrix q2 = build_comodule(p2);
  return q2 == times_scalar(scalar_times(gt_inv, q), gt);
}

} // namespace treehopf
