#pragma once

#include <map>
#include <vector>

#include "treehopf/algebra.hpp"

namespace treehopf {

/// P_i from its closed form in the ladders.
AlgebraElement ladder_primitive(int i);

/// Ψ_i(values[0], ..., values[i-1]).
AlgebraElement psi_substitute(int i, const std::vector<AlgebraElement> &values);

struct PrimitiveBasis {
  int weight = 0;
  std::vector<AlgebraElement> elements;
  std::vector<Forest> sources; // elements[k] = pi1(sources[k])
};

/// Greedy basis from pi1 over the forests of weight n, skipping forests whose
/// image is known to vanish or repeat an earlier one. Cached.
const PrimitiveBasis &primitive_basis(int n);
/// Same scan over every forest.
PrimitiveBasis primitive_basis_unpruned(int n);
/// Whether the pruned scan skips f.
bool pruned(const Forest &f);

/// b with sum_j j*b_j = n, as vectors of length n (b[j-1] = b_j).
std::vector<std::vector<int>> partition_multiplicities(int n);

Integer theta(int n, const std::vector<Integer> &r);
Integer phi(int n, int k, const std::vector<Integer> &h);
/// Sum over compositions a of n of prod h[a_j].
Integer composition_count(int n, const std::vector<Integer> &h);

struct DimensionTable {
  int max_weight = 0;
  std::vector<Integer> r;              // r[n], n = 0..N
  std::vector<std::vector<Integer>> h; // h[n][k], n, k = 0..N
  bool series_identities_hold = false;
};
DimensionTable dimension_table(int max_weight);

/// Polynomial in X_1, X_2, ... over Q, for the series identities.
class Polynomial {
public:
  using Monomial = std::vector<int>; // exponents, no trailing zeros
  Polynomial() = default;
  static Polynomial constant(const Rational &c);
  static Polynomial variable(int i); // X_i, i >= 1

  const std::map<Monomial, Rational> &terms() const { return terms_; }
  void add_term(Monomial m, const Rational &c);
  Polynomial &operator+=(const Polynomial &o);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Rational &c, const Polynomial &a);
  friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.terms_ == b.terms_; }

  /// Substitutes values[i-1] for X_i.
  Polynomial substitute(const std::vector<Polynomial> &values) const;

private:
  std::map<Monomial, Rational> terms_;
};

Polynomial theta_polynomial(int n);
Polynomial phi_polynomial(int n); // the Φ_n counting all chains
bool theta_phi_identity(int k);

} // namespace treehopf
