#pragma once

#include "treehopf/algebra.hpp"

namespace treehopf {

TensorElement coproduct(RootedTree t);
TensorElement coproduct(const Forest &f);
TensorElement coproduct(const AlgebraElement &x);

Rational counit(const AlgebraElement &x);

/// Δ(x) - 1⊗x - x⊗1 (with the unit sent to zero).
TensorElement reduced_coproduct(const Forest &f);
TensorElement reduced_coproduct(const AlgebraElement &x);

/// Rank k+1 result; k = 0 gives x - ε(x)1 as a rank-1 tensor.
TensorElement iterated_reduced(const AlgebraElement &x, int k);

/// Signed sum over all cuts.
AlgebraElement antipode(const Forest &f);
AlgebraElement antipode(const AlgebraElement &x);
/// S(t) = -t - Σ S(P^C) R^C over admissible cuts.
AlgebraElement antipode_recursive(const AlgebraElement &x);

bool is_primitive(const AlgebraElement &x);

/// The B+ operator extended linearly to elements.
AlgebraElement b_plus(const AlgebraElement &x);

} // namespace treehopf
