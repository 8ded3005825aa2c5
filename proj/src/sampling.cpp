#include "treehopf/sampling.hpp"

#include "treehopf/primitives.hpp"

namespace treehopf {

namespace {

int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

} // namespace

Rational random_coefficient(Rng &rng) {
  int num = uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1);
  int den = uniform(rng, 0, 3) == 0 ? uniform(rng, 2, 4) : 1;
  Rational c(num, den);
  c.canonicalize();
  return c;
}

Forest random_forest(Rng &rng, int weight) {
  const auto &forests = enumerate_forests(weight);
  return forests[uniform(rng, 0, static_cast<int>(forests.size()) - 1)];
}

AlgebraElement random_element(Rng &rng, int max_weight, int max_terms) {
  AlgebraElement out;
  int terms = uniform(rng, 1, max_terms);
  for (int k = 0; k < terms; ++k)
    out.add_term(random_forest(rng, uniform(rng, 0, max_weight)), random_coefficient(rng));
  return out;
}

AlgebraElement random_homogeneous(Rng &rng, int w, int max_terms) {
  AlgebraElement out;
  int terms = uniform(rng, 1, max_terms);
  for (int k = 0; k < terms; ++k)
    out.add_term(random_forest(rng, w), random_coefficient(rng));
  return out;
}

AlgebraElement random_primitive(Rng &rng, int w) {
  const auto &basis = primitive_basis(w).elements;
  AlgebraElement out;
  while (out.is_zero())
    for (const auto &p : basis)
      if (uniform(rng, 0, 2) > 0)
        out += random_coefficient(rng) * p;
  return out;
}

PrimitiveMatrix random_family(Rng &rng, int n, int max_weight) {
  PrimitiveMatrix p(n + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (uniform(rng, 0, 3) > 0)
        set_family_entry(p, i, j, random_primitive(rng, uniform(rng, 1, max_weight)));
  return p;
}

TreeFamily random_tree_family(Rng &rng, int max_weight) {
  TreeFamily out;
  for (int w = 1; w <= max_weight; ++w)
    for (auto t : enumerate_trees(w))
      out[t] = random_primitive(rng, w);
  return out;
}

UFamily random_u1(Rng &rng, int max_weight) {
  UFamily u;
  u.max_length = 1;
  u.max_weight = max_weight;
  for (int w = 1; w <= max_weight; ++w) {
    int size = static_cast<int>(primitive_basis(w).elements.size());
    // upper triangular, nonzero diagonal
    for (int c = 0; c < size; ++c) {
      PrimCombination value;
      value[{w, c}] = random_coefficient(rng);
      for (int r = 0; r < c; ++r)
        if (uniform(rng, 0, 1))
          value[{w, r}] = random_coefficient(rng);
      u.maps[ChainKey{{w, c}}] = value;
    }
  }
  return u;
}

} // namespace treehopf
