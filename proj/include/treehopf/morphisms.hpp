#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "treehopf/growth.hpp"

namespace treehopf {

// ---------------------------------------------------------------------------
// gr(H_R): chains over the primitive bases; the empty key is the unit.

using GrElement = std::map<ChainKey, Rational>;
using GrTensor = std::map<std::pair<ChainKey, ChainKey>, Rational>;

GrElement gr_unit();
void gr_add(GrElement &into, const GrElement &x, const Rational &scale = 1);
std::string gr_str(const GrElement &x);
/// Coordinates of an element of H_R along the chain bases.
GrElement to_gr(const AlgebraElement &x);
/// Sum of chain values; inverse of to_gr.
AlgebraElement from_gr(const GrElement &x);

/// Interleavings of a and b keeping the order within each.
GrElement shuffle_product(const GrElement &a, const GrElement &b);
/// a * b computed in H_R through the identification with gr(H_R).
AlgebraElement star(const AlgebraElement &a, const AlgebraElement &b);
/// Deconcatenation: the upper part of a chain goes left.
GrTensor gr_coproduct(const GrElement &a);
GrElement gr_antipode(const GrElement &a);
Rational gr_counit(const GrElement &a);
/// Chain values in both slots.
TensorElement gr_tensor_to_element(const GrTensor &t);

/// pi_{j+l}(value(a) value(b)) equals the shuffle of a and b.
bool leading_term_check(const ChainKey &a, const ChainKey &b);

// ---------------------------------------------------------------------------
// Bialgebra endomorphisms from families of primitives indexed by trees

using TreeFamily = std::map<RootedTree, AlgebraElement>;

/// Φ for a family; trees missing from the family get 0. Results are
/// memoized per instance.
class FamilyEndomorphism {
public:
  FamilyEndomorphism(TreeFamily family, int weight_bound);
  int weight_bound() const { return bound_; }
  AlgebraElement operator()(const Forest &f) const;
  AlgebraElement operator()(const AlgebraElement &x) const;

private:
  AlgebraElement on_tree(RootedTree t) const;
  TreeFamily family_;
  int bound_;
  mutable std::map<RootedTree, AlgebraElement> cache_;
};

AlgebraElement phi_family(const TreeFamily &family, const AlgebraElement &x, int weight_bound);

using ForestMap = std::function<AlgebraElement(const Forest &)>;
/// Whether f is multiplicative and compatible with Δ on forests of weight <= bound.
bool is_bialgebra_morphism(const ForestMap &f, int weight_bound);
/// P_T = pi1(Ψ(T)) for every tree of weight <= bound.
TreeFamily recover_family(const ForestMap &endo, int weight_bound);

// ---------------------------------------------------------------------------
// Coalgebra endomorphisms of gr(H_R)

/// One key of a primitive basis: (weight, index).
using PrimKey = std::pair<int, int>;
using PrimCombination = std::map<PrimKey, Rational>;

/// ū_i on the chains of length i; unlisted chains map to 0.
struct UFamily {
  int max_length = 1;
  int max_weight = 1;
  std::map<ChainKey, PrimCombination> maps;
};

/// u_1 = identity, u_i = 0 otherwise.
UFamily identity_ufamily(int max_length, int max_weight);
GrElement phi_u(const UFamily &u, const GrElement &x);
/// Whether u_1 is invertible on every weight up to u.max_weight.
bool is_invertible(const UFamily &u);
/// u_1 ∘ v_1 for families with only the first map nonzero.
UFamily compose(const UFamily &u, const UFamily &v);
/// Whether every value has the weight of its argument.
bool weights_compatible(const UFamily &u);

/// Extends u_1 to a family whose Φ is multiplicative for *, setting each ū_n
/// on shuffle products from the lower maps and to zero on the other chains.
/// Throws logic_error if the constraint is inconsistent or leaves Im(F_1).
UFamily extend_to_bialgebra(const UFamily &u1);

// ---------------------------------------------------------------------------
// The isomorphism Ξ: (H_R, .) -> (H_R, *)
//
// Ξ is multiplicative from the forest product to *, so it is fixed by its
// values on trees. Each Ξ(T) solves Δ~(Ξ(T)) = (Ξ⊗Ξ)(Δ~(T)) on the chains of
// length >= 2, plus the primitive part that makes Ξ fix every primitive.

struct XiReport {
  bool weight_preserved = true;
  bool deg_p_preserved = true;
  bool coproduct_compatible = true;
  bool multiplicative = true;
  bool fixes_primitives = true;
  bool invertible = true;
  bool ok() const {
    return weight_preserved && deg_p_preserved && coproduct_compatible && multiplicative &&
           fixes_primitives && invertible;
  }
};

struct XiIsomorphism {
  int weight_bound = 0;
  /// images[w][k] = Ξ(enumerate_forests(w)[k]).
  std::map<int, std::vector<AlgebraElement>> images;

  AlgebraElement operator()(const AlgebraElement &x) const;
  /// Matrix of Ξ on weight w: column k holds the coordinates of images[w][k].
  Matrix matrix(int w) const;
  XiReport verify() const;
};

constexpr int kXiMaxWeight = 6;
XiIsomorphism xi_isomorphism(int weight_bound);

} // namespace treehopf
