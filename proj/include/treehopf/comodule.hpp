#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treehopf/linalg.hpp"

namespace treehopf {

/// Square matrix of elements of H_R.
class ElementMatrix {
public:
  ElementMatrix() = default;
  explicit ElementMatrix(int dim);

  int dim() const { return dim_; }
  AlgebraElement &at(int r, int c) { return entries_.at(r).at(c); }
  const AlgebraElement &at(int r, int c) const { return entries_.at(r).at(c); }

  friend bool operator==(const ElementMatrix &a, const ElementMatrix &b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

private:
  int dim_ = 0;
  std::vector<std::vector<AlgebraElement>> entries_;
};

/// Strictly upper triangular, of size n+1: entry (i-1, j) holds p_{i,j},
/// 1 <= i <= j <= n.
using PrimitiveMatrix = ElementMatrix;
/// Lower unitriangular, of size n+1: Δ_C(e_i) = Σ_j Q(i,j) ⊗ e_j.
using StructureMatrix = ElementMatrix;

const AlgebraElement &family_entry(const PrimitiveMatrix &p, int i, int j);
void set_family_entry(PrimitiveMatrix &p, int i, int j, AlgebraElement value);

using Interval = std::pair<int, int>;
/// Every splitting of {i..j} into consecutive intervals, lowest first.
std::vector<std::vector<Interval>> decompositions(int i, int j);

StructureMatrix build_comodule(const PrimitiveMatrix &p);
bool verify_coassociative(const StructureMatrix &q);
/// Recursive inversion of build_comodule.
PrimitiveMatrix extract_family(const StructureMatrix &q);
/// Entrywise pi1 of the transpose.
PrimitiveMatrix extract_family_by_projection(const StructureMatrix &q);

struct Flag {
  std::vector<int> dims;  // dim C_0 < dim C_1 < ... = n + 1
  std::vector<int> type;  // successive increments
  Matrix basis;           // columns adapted to the flag
};
Flag flag(const StructureMatrix &q);
/// All vectors x with Δ_C(x) = 1 ⊗ x.
std::vector<std::vector<Rational>> trivial_vectors(const StructureMatrix &q);

/// Block sizes of a reduced family, or nothing if the family is not reduced.
std::optional<std::vector<int>> is_reduced(const PrimitiveMatrix &p);

/// Whether g is invertible and block upper triangular for the given type.
bool in_parabolic(const Matrix &g, const std::vector<int> &type);
/// g P g^-1. The family must be reduced and g must lie in its parabolic subgroup.
PrimitiveMatrix act(const Matrix &g, const PrimitiveMatrix &p);
/// P' = g P g^-1, and the structure matrices satisfy Q' = (g^T)^-1 Q g^T.
bool conjugate_check(const Matrix &g, const PrimitiveMatrix &p, const PrimitiveMatrix &p2);

/// Scalar matrix times element matrix and the reverse.
ElementMatrix scalar_times(const Matrix &a, const ElementMatrix &m);
ElementMatrix times_scalar(const ElementMatrix &m, const Matrix &a);

} // namespace treehopf
