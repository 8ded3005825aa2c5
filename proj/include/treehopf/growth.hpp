#pragma once

#include <map>
#include <utility>
#include <vector>

#include "treehopf/linalg.hpp"

namespace treehopf {

/// Natural growth M ⊤ N: the average over the nodes of N of appending every
/// tree of M at that node. M ⊤ 1 = 0.
AlgebraElement graft(const Forest &m, const Forest &n);
AlgebraElement graft(const AlgebraElement &x, const AlgebraElement &y);

/// One tree per vertex of t (in preorder): t with all trees of m attached there.
std::vector<RootedTree> attachments(const Forest &m, RootedTree t);

/// p_i ⊤ ... ⊤ p_1 from the list [p_i, ..., p_1]; every entry must be primitive.
AlgebraElement chain(const std::vector<AlgebraElement> &top_first);
/// Same fold without the primitivity check.
AlgebraElement chain_unchecked(const std::vector<AlgebraElement> &top_first);

/// Projection onto primitives along the unit and the images of F_j, j >= 2.
AlgebraElement pi1(const Forest &f);
AlgebraElement pi1(const AlgebraElement &x);

int deg_p(const AlgebraElement &x);

/// A chain of primitive basis elements, top first: each entry is
/// (weight, index into primitive_basis(weight)).
using ChainKey = std::vector<std::pair<int, int>>;

int chain_weight(const ChainKey &key);
AlgebraElement chain_value(const ChainKey &key);
std::string chain_key_str(const ChainKey &key);

/// All chains of total weight n over the primitive bases, with their values
/// and an echelon form whose ids are positions in `keys`.
struct ChainBasis {
  int weight = 0;
  std::vector<ChainKey> keys;
  std::vector<AlgebraElement> values;
  EchelonBasis echelon;
};
const ChainBasis &chain_basis(int n);

/// Coordinates of a homogeneous weight-n element in the chain basis.
std::map<ChainKey, Rational> chain_coordinates(const AlgebraElement &x);

struct Decomposition {
  Rational scalar;
  std::map<int, AlgebraElement> components; // by chain length, nonzero only
};
Decomposition decompose(const AlgebraElement &x);
AlgebraElement pi_j(const AlgebraElement &x, int j);

} // namespace treehopf
