#pragma once

#include <compare>
#include <cstddef>
#include <gmpxx.h>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treehopf {

using Integer = mpz_class;

/// Thrown by every text parser in the library. `position()` is the byte
/// offset in the input where parsing stopped.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        message_(what), position_(position) {}
  const std::string &message() const { return message_; }
  std::size_t position() const { return position_; }

private:
  std::string message_;
  std::size_t position_;
};

namespace detail {
struct TreeNode;
}

/// A rooted tree up to isomorphism.
///
/// Trees are interned: two isomorphic trees share one node, so equality and
/// hashing are pointer operations. Ordering follows the canonical bracket
/// string under byte order ('[' < ']'), which is also the order in which
/// children are stored.
class RootedTree {
public:
  /// The single-vertex tree.
  RootedTree();

  /// Tree whose root has the given subtrees, in any order.
  static RootedTree from_children(std::vector<RootedTree> children);

  /// Parses the bracket grammar `T ::= "[" T* "]"`; child order may be
  /// arbitrary.
  static RootedTree parse(std::string_view text);

  const std::string &str() const;
  int weight() const;
  std::span<const RootedTree> children() const;
  int fertility() const { return static_cast<int>(children().size()); }
  bool is_ladder() const;

  std::size_t hash() const;

  friend bool operator==(RootedTree a, RootedTree b) { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(RootedTree a, RootedTree b);

private:
  explicit RootedTree(const detail::TreeNode *node) : node_(node) {}
  const detail::TreeNode *node_;
};

/// Tree with children in arbitrary order, before canonicalization.
struct RawTree {
  std::vector<RawTree> children;
};

RootedTree canonicalize(const RawTree &raw);

/// A commutative monomial in rooted trees. The empty forest is the unit 1.
class Forest {
public:
  Forest() = default;
  Forest(RootedTree tree);
  explicit Forest(std::vector<RootedTree> trees);

  /// Trees separated by single spaces, or "1".
  static Forest parse(std::string_view text);

  std::span<const RootedTree> trees() const { return trees_; }
  std::size_t size() const { return trees_.size(); }
  int weight() const { return weight_; }
  bool is_unit() const { return trees_.empty(); }
  bool is_tree() const { return trees_.size() == 1; }

  std::string str() const;
  std::size_t hash() const;

  friend Forest operator*(const Forest &a, const Forest &b);
  friend bool operator==(const Forest &a, const Forest &b) { return a.trees_ == b.trees_; }

private:
  std::vector<RootedTree> trees_;
  int weight_ = 0;
};

/// Byte order of rendered strings; the deterministic basis order.
bool forest_less(const Forest &a, const Forest &b);
struct ForestLess {
  bool operator()(const Forest &a, const Forest &b) const { return forest_less(a, b); }
};

struct TreeHash {
  std::size_t operator()(RootedTree t) const { return t.hash(); }
};
struct ForestHash {
  std::size_t operator()(const Forest &f) const { return f.hash(); }
};

RootedTree ladder(int weight);
RootedTree b_plus(const Forest &forest);

/// All trees (resp. forests) of the given weight, sorted by canonical string.
const std::vector<RootedTree> &enumerate_trees(int weight);
const std::vector<Forest> &enumerate_forests(int weight);

/// Counts by the Euler transform; no enumeration.
Integer count_trees(int weight);
Integer count_forests(int weight);

/// A set of removed edges. Edges are named by the preorder index of their
/// lower vertex in the canonical tree (the root has index 0).
struct Cut {
  std::vector<int> removed_edges;
  Forest crown;      // everything cut away
  RootedTree trunk;  // the component holding the root
  int size() const { return static_cast<int>(removed_edges.size()); }
};

/// Nonempty admissible cuts: no root-to-leaf path meets two removed edges.
std::vector<Cut> admissible_cuts(RootedTree tree);

/// Every nonempty subset of edges. For non-admissible cuts the crown holds
/// all components other than the trunk.
std::vector<Cut> all_cuts(RootedTree tree);

/// Parent of each vertex in preorder (-1 for the root).
std::vector<int> preorder_parents(RootedTree tree);

} // namespace treehopf
