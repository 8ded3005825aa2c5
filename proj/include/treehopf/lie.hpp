#pragma once

#include <map>
#include <string>
#include <vector>

#include "treehopf/growth.hpp"

namespace treehopf {

/// Linear combination of the generators Z_t.
class LieElement {
public:
  using Terms = std::map<RootedTree, Rational>;
  LieElement() = default;
  LieElement(RootedTree t) { terms_.emplace(t, Rational(1)); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(RootedTree t) const;
  void add_term(RootedTree t, const Rational &c);
  /// Same rendering as the element with the trees as forests.
  std::string str() const;

  LieElement &operator+=(const LieElement &o);
  LieElement &operator*=(const Rational &c);
  friend LieElement operator+(LieElement a, const LieElement &b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement &b) {
    LieElement nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend LieElement operator*(const Rational &c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement &a, const LieElement &b) { return a.terms_ == b.terms_; }

private:
  Terms terms_;
};

/// Number of single-edge cuts of t with crown t1 and trunk t2.
int n_count(RootedTree t1, RootedTree t2, RootedTree t);

/// Automorphism count of t.
Integer symmetry_factor(RootedTree t);

LieElement bracket(RootedTree a, RootedTree b);
LieElement bracket(const LieElement &a, const LieElement &b);
/// The same bracket through grafting, rescaled by symmetry factors.
LieElement bracket_by_grafting(RootedTree a, RootedTree b);

/// Z_{t1} ... Z_{tk}; the empty word is 1.
using Word = std::vector<RootedTree>;
/// Trees joined by '.', or "1" for the empty word.
Word parse_word(std::string_view text);
std::string word_str(const Word &w);
int word_weight(const Word &w);

/// <w, x>, splitting off the first letter at each step.
Rational pair(const Word &w, const AlgebraElement &x);
/// Same value, splitting off the last letter at each step.
Rational pair_right(const Word &w, const AlgebraElement &x);
/// <u ⊗ v, Δ(x)>.
Rational pair_split(const Word &u, const Word &v, const AlgebraElement &x);

/// Row I is the functional dual to chain_basis(n).keys[I], as coordinates on
/// enumerate_forests(n).
Matrix chain_dual_basis(int n);
/// (f g)(x) = (f ⊗ g)(Δ x) for functionals on weights a and b.
std::vector<Rational> functional_product(const std::vector<Rational> &f, int a,
                                         const std::vector<Rational> &g, int b);

} // namespace treehopf
