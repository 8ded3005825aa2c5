#pragma once

#include <memory>
#include <string>
#include <vector>

#include "treehopf/comodule.hpp"

namespace treehopf {

/// The comodule spanned by x_s for the trunks s of a tree.
struct SubtreeComodule {
  std::vector<RootedTree> trunks; // by weight, then by string; the tree itself last
  StructureMatrix q;
  PrimitiveMatrix p;
};
SubtreeComodule subtree_comodule(RootedTree t);

struct Monomial;

/// x_t(c), or [M] for a monomial M evaluated at c = 0.
struct Factor {
  RootedTree symbol;
  std::shared_ptr<const Monomial> bracket; // set for bracket factors
  bool is_bracket() const { return bracket != nullptr; }
  std::string str() const;
};

/// Commutative product; brackets first, then symbols, each group sorted.
struct Monomial {
  std::vector<Factor> factors;
  void normalize();
  bool is_unit() const { return factors.empty(); }
  std::string str() const;
};

struct RenormTerm {
  Rational coefficient;
  Monomial monomial;
};

class RenormExpression {
public:
  const std::vector<RenormTerm> &terms() const { return terms_; }
  void add(RenormTerm term) { terms_.push_back(std::move(term)); }
  /// Terms in display order with signs " + " and " - ".
  std::string str() const;
  /// [E], applied termwise, with [1] = 1 and [[E]] = [E].
  RenormExpression bracketed() const;
  /// Equality after merging like terms.
  friend bool operator==(const RenormExpression &a, const RenormExpression &b);

private:
  std::vector<RenormTerm> terms_;
};

Factor symbol_factor(RootedTree t);
/// [x_{t1} ... x_{tk}] for a nonempty forest, the empty monomial for 1.
Monomial forest_bracket(const Forest &f);

RenormExpression counterterm(RootedTree t);
RenormExpression renormalized(RootedTree t);

} // namespace treehopf
