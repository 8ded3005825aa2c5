#pragma once

#include <random>

#include "treehopf/comodule.hpp"
#include "treehopf/morphisms.hpp"

namespace treehopf {

using Rng = std::mt19937_64;

/// Nonzero rational with small numerator and denominator.
Rational random_coefficient(Rng &rng);
Forest random_forest(Rng &rng, int weight);
/// Up to max_terms forests of weight 0..max_weight.
AlgebraElement random_element(Rng &rng, int max_weight, int max_terms);
/// Homogeneous of weight w, in the kernel of ε when w > 0.
AlgebraElement random_homogeneous(Rng &rng, int w, int max_terms);
/// Combination of primitive_basis(w).
AlgebraElement random_primitive(Rng &rng, int w);
/// Entries of weight 1..max_weight, each zero with probability 1/4.
PrimitiveMatrix random_family(Rng &rng, int n, int max_weight);
/// One primitive of the tree's weight per tree up to max_weight.
TreeFamily random_tree_family(Rng &rng, int max_weight);
/// Invertible u_1 preserving weight, all other maps zero.
UFamily random_u1(Rng &rng, int max_weight);

} // namespace treehopf
