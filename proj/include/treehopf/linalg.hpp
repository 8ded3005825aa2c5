#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "treehopf/algebra.hpp"

namespace treehopf {

using SparseVector = std::map<int, Rational>;

void axpy(SparseVector &y, const Rational &a, const SparseVector &x);

/// Incremental row echelon form over Q. Every inserted vector carries an id,
/// and each stored row remembers which combination of inserted vectors it
/// equals, so membership queries can return coordinates.
class EchelonBasis {
public:
  /// Adds v if it is independent of the current span. Returns true if added.
  bool insert(const SparseVector &v, int id);

  struct Reduction {
    SparseVector residual;
    SparseVector combination; // over inserted ids
  };
  /// v = combination (in inserted vectors) + residual, residual reduced.
  Reduction reduce(const SparseVector &v) const;

  bool contains(const SparseVector &v) const { return reduce(v).residual.empty(); }
  /// Coordinates of v in the inserted (accepted) vectors, if v lies in the span.
  std::optional<SparseVector> solve(const SparseVector &v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<int> &accepted_ids() const { return accepted_; }

private:
  struct Row {
    SparseVector vec;
    SparseVector origin;
  };
  std::map<int, Row> rows_; // keyed by pivot column
  std::vector<int> accepted_;
};

/// Assigns dense column indices to forests on first sight.
class ForestIndex {
public:
  int index(const Forest &f);
  std::optional<int> find(const Forest &f) const;
  const Forest &forest(int i) const { return forests_[i]; }
  int size() const { return static_cast<int>(forests_.size()); }

  SparseVector to_vector(const AlgebraElement &x);
  AlgebraElement to_element(const SparseVector &v) const;

private:
  std::unordered_map<Forest, int, ForestHash> ids_;
  std::vector<Forest> forests_;
};

/// Coordinates of a weight-n element in enumerate_forests(n). Throws if some
/// term has another weight.
SparseVector weight_vector(const AlgebraElement &x, int n);
AlgebraElement from_weight_vector(const SparseVector &v, int n);
int forest_position(const Forest &f);

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(int n);
Matrix multiply(const Matrix &a, const Matrix &b);
Matrix transpose(const Matrix &a);
int rank(Matrix a);
/// Basis of {x : a x = 0}.
std::vector<std::vector<Rational>> kernel(Matrix a);
std::optional<Matrix> invert(const Matrix &a);

int rank_of(const std::vector<AlgebraElement> &elements);
bool independent(const std::vector<AlgebraElement> &elements);

} // namespace treehopf
