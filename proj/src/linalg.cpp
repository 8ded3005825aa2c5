#include "treehopf/linalg.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace treehopf {

void axpy(SparseVector &y, const Rational &a, const SparseVector &x) {
  if (a == 0)
    return;
  for (const auto &[k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0)
        y.erase(it);
    }
  }
}

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVector &v) const {
  Reduction r{v, {}};
  // Rows have their pivot as smallest key, so eliminating in increasing key
  // order never revisits a column.
  auto it = r.residual.begin();
  while (it != r.residual.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    int key = it->first;
    Rational factor = it->second;
    axpy(r.residual, -factor, row->second.vec);
    axpy(r.combination, factor, row->second.origin);
    it = r.residual.upper_bound(key);
  }
  return r;
}

bool EchelonBasis::insert(const SparseVector &v, int id) {
  Reduction r = reduce(v);
  if (r.residual.empty())
    return false;
  SparseVector origin;
  origin[id] = 1;
  axpy(origin, -1, r.combination);
  Rational inv = 1 / r.residual.begin()->second;
  for (auto &[k, c] : r.residual)
    c *= inv;
  for (auto &[k, c] : origin)
    c *= inv;
  int pivot = r.residual.begin()->first;
  rows_.emplace(pivot, Row{std::move(r.residual), std::move(origin)});
  accepted_.push_back(id);
  return true;
}

std::optional<SparseVector> EchelonBasis::solve(const SparseVector &v) const {
  Reduction r = reduce(v);
  if (!r.residual.empty())
    return std::nullopt;
  return r.combination;
}

// ---------------------------------------------------------------------------

int ForestIndex::index(const Forest &f) {
  auto [it, inserted] = ids_.try_emplace(f, static_cast<int>(forests_.size()));
  if (inserted)
    forests_.push_back(f);
  return it->second;
}

std::optional<int> ForestIndex::find(const Forest &f) const {
  auto it = ids_.find(f);
  if (it == ids_.end())
    return std::nullopt;
  return it->second;
}

SparseVector ForestIndex::to_vector(const AlgebraElement &x) {
  SparseVector v;
  for (const auto &[f, c] : x.terms())
    v[index(f)] = c;
  return v;
}

AlgebraElement ForestIndex::to_element(const SparseVector &v) const {
  AlgebraElement x;
  for (const auto &[k, c] : v)
    x.add_term(forests_.at(k), c);
  return x;
}

namespace {

struct PositionTable {
  std::mutex mutex;
  std::map<int, std::unique_ptr<std::unordered_map<Forest, int, ForestHash>>> by_weight;

  const std::unordered_map<Forest, int, ForestHash> &get(int n) {
    std::lock_guard lock(mutex);
    auto &slot = by_weight[n];
    if (!slot) {
      slot = std::make_unique<std::unordered_map<Forest, int, ForestHash>>();
      const auto &forests = enumerate_forests(n);
      for (int i = 0; i < static_cast<int>(forests.size()); ++i)
        slot->emplace(forests[i], i);
    }
    return *slot;
  }
};

PositionTable &positions() {
  static PositionTable table;
  return table;
}

} // namespace

int forest_position(const Forest &f) { return positions().get(f.weight()).at(f); }

SparseVector weight_vector(const AlgebraElement &x, int n) {
  SparseVector v;
  const auto &table = positions().get(n);
  for (const auto &[f, c] : x.terms()) {
    if (f.weight() != n)
      throw std::invalid_argument("weight_vector: term of weight " + std::to_string(f.weight()) +
                                  " in a weight " + std::to_string(n) + " vector");
    v[table.at(f)] = c;
  }
  return v;
}

AlgebraElement from_weight_vector(const SparseVector &v, int n) {
  const auto &forests = enumerate_forests(n);
  AlgebraElement x;
  for (const auto &[k, c] : v)
    x.add_term(forests.at(k), c);
  return x;
}

// ---------------------------------------------------------------------------
// Dense matrices

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix &a, const Matrix &b) {
  if (a.empty())
    return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  if (a[0].size() != inner)
    throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(a.size(), std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0)
        continue;
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix transpose(const Matrix &a) {
  if (a.empty())
    return {};
  Matrix t(a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      t[j][i] = a[i][j];
  return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix &a) {
  std::vector<int> pivots;
  if (a.empty())
    return pivots;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j)
      a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j)
        a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

int rank(Matrix a) { return static_cast<int>(rref(a).size()); }

std::vector<std::vector<Rational>> kernel(Matrix a) {
  if (a.empty())
    return {};
  int cols = static_cast<int>(a[0].size());
  auto pivots = rref(a);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots)
    is_pivot[c] = 1;
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Matrix> invert(const Matrix &a) {
  int n = static_cast<int>(a.size());
  Matrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("invert: matrix is not square");
    for (int j = 0; j < n; ++j)
      aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1))
    return std::nullopt;
  Matrix inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      inv[i][j] = aug[i][n + j];
  return inv;
}

int rank_of(const std::vector<AlgebraElement> &elements) {
  ForestIndex index;
  EchelonBasis basis;
  int id = 0;
  for (const auto &x : elements)
    basis.insert(index.to_vector(x), id++);
  return basis.rank();
}

bool independent(const std::vector<AlgebraElement> &elements) {
  return rank_of(elements) == static_cast<int>(elements.size());
}

} // namespace treehopf
