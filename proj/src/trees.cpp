#include "treehopf/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace treehopf {

namespace detail {

struct TreeNode {
  std::string canon;
  std::vector<RootedTree> children;
  int weight = 1;
  std::size_t hash = 0;
};

namespace {

class TreeRegistry {
public:
  const TreeNode *intern(std::vector<RootedTree> sorted_children) {
    std::string canon = "[";
    int weight = 1;
    for (const auto &c : sorted_children) {
      canon += c.str();
      weight += c.weight();
    }
    canon += ']';
    std::lock_guard lock(mutex_);
    auto it = nodes_.find(canon);
    if (it != nodes_.end())
      return it->second.get();
    auto node = std::make_unique<TreeNode>();
    node->canon = canon;
    node->children = std::move(sorted_children);
    node->weight = weight;
    node->hash = std::hash<std::string>{}(canon);
    const TreeNode *raw = node.get();
    nodes_.emplace(canon, std::move(node));
    return raw;
  }

private:
  std::mutex mutex_;
  std::unordered_map<std::string, std::unique_ptr<TreeNode>> nodes_;
};

TreeRegistry &registry() {
  static TreeRegistry instance;
  return instance;
}

} // namespace
} // namespace detail

RootedTree::RootedTree() : node_(detail::registry().intern({})) {}

RootedTree RootedTree::from_children(std::vector<RootedTree> children) {
  std::sort(children.begin(), children.end());
  return RootedTree(detail::registry().intern(std::move(children)));
}

const std::string &RootedTree::str() const { return node_->canon; }
int RootedTree::weight() const { return node_->weight; }
std::span<const RootedTree> RootedTree::children() const { return node_->children; }
std::size_t RootedTree::hash() const { return node_->hash; }

bool RootedTree::is_ladder() const {
  RootedTree t = *this;
  while (true) {
    if (t.fertility() > 1)
      return false;
    if (t.fertility() == 0)
      return true;
    t = t.children()[0];
  }
}

std::strong_ordering operator<=>(RootedTree a, RootedTree b) {
  if (a.node_ == b.node_)
    return std::strong_ordering::equal;
  return a.str().compare(b.str()) < 0 ? std::strong_ordering::less
                                      : std::strong_ordering::greater;
}

namespace {

RootedTree parse_tree_at(std::string_view text, std::size_t &pos) {
  if (pos >= text.size() || text[pos] != '[')
    throw ParseError("expected '['", pos);
  ++pos;
  std::vector<RootedTree> children;
  while (true) {
    if (pos >= text.size())
      throw ParseError("unterminated tree, expected ']'", pos);
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    if (text[pos] != '[')
      throw ParseError(std::string("unexpected character '") + text[pos] + "' in tree", pos);
    children.push_back(parse_tree_at(text, pos));
  }
  return RootedTree::from_children(std::move(children));
}

std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  return pos;
}

} // namespace

RootedTree RootedTree::parse(std::string_view text) {
  std::size_t pos = skip_space(text, 0);
  RootedTree t = parse_tree_at(text, pos);
  pos = skip_space(text, pos);
  if (pos != text.size())
    throw ParseError("trailing characters after tree", pos);
  return t;
}

RootedTree canonicalize(const RawTree &raw) {
  std::vector<RootedTree> children;
  children.reserve(raw.children.size());
  for (const auto &c : raw.children)
    children.push_back(canonicalize(c));
  return RootedTree::from_children(std::move(children));
}

// ---------------------------------------------------------------------------
// Forest

Forest::Forest(RootedTree tree) : trees_{tree}, weight_(tree.weight()) {}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
  for (const auto &t : trees_)
    weight_ += t.weight();
}

Forest Forest::parse(std::string_view text) {
  std::size_t pos = skip_space(text, 0);
  if (pos == text.size())
    throw ParseError("empty forest", pos);
  if (text[pos] == '1') {
    ++pos;
    pos = skip_space(text, pos);
    if (pos != text.size())
      throw ParseError("trailing characters after unit forest", pos);
    return Forest();
  }
  std::vector<RootedTree> trees;
  while (pos < text.size()) {
    trees.push_back(parse_tree_at(text, pos));
    pos = skip_space(text, pos);
  }
  return Forest(std::move(trees));
}

std::string Forest::str() const {
  if (trees_.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i)
      out += ' ';
    out += trees_[i].str();
  }
  return out;
}

std::size_t Forest::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto &t : trees_)
    h ^= t.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Forest operator*(const Forest &a, const Forest &b) {
  Forest out;
  out.trees_.reserve(a.trees_.size() + b.trees_.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(),
             std::back_inserter(out.trees_));
  out.weight_ = a.weight_ + b.weight_;
  return out;
}

// No tree string is a proper prefix of another and ' ' sorts before '[', so
// comparing tree sequences agrees with comparing rendered strings.
bool forest_less(const Forest &a, const Forest &b) {
  return std::lexicographical_compare(a.trees().begin(), a.trees().end(), b.trees().begin(),
                                      b.trees().end());
}

// ---------------------------------------------------------------------------
// Constructors and enumeration

RootedTree ladder(int weight) {
  if (weight < 1)
    throw std::invalid_argument("ladder weight must be >= 1");
  RootedTree t;
  for (int i = 1; i < weight; ++i)
    t = RootedTree::from_children({t});
  return t;
}

RootedTree b_plus(const Forest &forest) {
  return RootedTree::from_children({forest.trees().begin(), forest.trees().end()});
}

namespace {

template <class T> class WeightCache {
public:
  const std::vector<T> &get(int weight, const std::function<std::vector<T>(int)> &build) {
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find(weight);
      if (it != cache_.end())
        return *it->second;
    }
    auto built = std::make_unique<std::vector<T>>(build(weight));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = cache_.emplace(weight, std::move(built));
    return *it->second;
  }

private:
  std::mutex mutex_;
  std::map<int, std::unique_ptr<std::vector<T>>> cache_;
};

std::vector<Forest> build_forests(int weight) {
  if (weight == 0)
    return {Forest()};
  // Multisets as nondecreasing index sequences into the pool of smaller trees.
  std::vector<RootedTree> pool;
  for (int w = 1; w <= weight; ++w)
    for (const auto &t : enumerate_trees(w))
      pool.push_back(t);
  std::vector<Forest> out;
  std::vector<RootedTree> current;
  std::function<void(std::size_t, int)> extend = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (pool[i].weight() > remaining)
        continue;
      current.push_back(pool[i]);
      extend(i, remaining - pool[i].weight());
      current.pop_back();
    }
  };
  extend(0, weight);
  std::sort(out.begin(), out.end(), forest_less);
  return out;
}

std::vector<RootedTree> build_trees(int weight) {
  std::vector<RootedTree> out;
  for (const auto &f : enumerate_forests(weight - 1))
    out.push_back(b_plus(f));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

const std::vector<RootedTree> &enumerate_trees(int weight) {
  static WeightCache<RootedTree> cache;
  if (weight < 1)
    throw std::invalid_argument("tree weight must be >= 1");
  return cache.get(weight, build_trees);
}

const std::vector<Forest> &enumerate_forests(int weight) {
  static WeightCache<Forest> cache;
  if (weight < 0)
    throw std::invalid_argument("forest weight must be >= 0");
  return cache.get(weight, build_forests);
}

namespace {

// forests[n] = number of forests of weight n; trees[n] = forests[n-1].
struct CountTable {
  std::mutex mutex;
  std::vector<Integer> forests{1};
  std::vector<Integer> trees{0};

  void extend_to(int n) {
    while (static_cast<int>(forests.size()) <= n) {
      int m = static_cast<int>(forests.size());
      trees.push_back(forests[m - 1]);
      Integer sum = 0;
      for (int k = 1; k <= m; ++k) {
        Integer c = 0;
        for (int d = 1; d <= k; ++d)
          if (k % d == 0)
            c += d * trees[d];
        sum += c * forests[m - k];
      }
      forests.push_back(sum / m);
    }
  }
};

CountTable &count_table() {
  static CountTable table;
  return table;
}

} // namespace

Integer count_forests(int weight) {
  if (weight < 0)
    throw std::invalid_argument("weight must be >= 0");
  auto &table = count_table();
  std::lock_guard lock(table.mutex);
  table.extend_to(weight);
  return table.forests[weight];
}

Integer count_trees(int weight) {
  if (weight < 0)
    throw std::invalid_argument("weight must be >= 0");
  if (weight == 0)
    return 0;
  return count_forests(weight - 1);
}

// ---------------------------------------------------------------------------
// Cuts

namespace {

struct Flat {
  std::vector<int> parent;
  std::vector<std::vector<int>> kids;
  std::vector<RootedTree> subtree;
};

void flatten(RootedTree t, int parent, Flat &flat) {
  int index = static_cast<int>(flat.parent.size());
  flat.parent.push_back(parent);
  flat.kids.emplace_back();
  flat.subtree.push_back(t);
  if (parent >= 0)
    flat.kids[parent].push_back(index);
  for (const auto &c : t.children())
    flatten(c, index, flat);
}

Flat flatten(RootedTree t) {
  Flat flat;
  flatten(t, -1, flat);
  return flat;
}

RootedTree component(const Flat &flat, const std::vector<char> &removed, int v) {
  std::vector<RootedTree> children;
  for (int c : flat.kids[v])
    if (!removed[c])
      children.push_back(component(flat, removed, c));
  return RootedTree::from_children(std::move(children));
}

Cut make_cut(const Flat &flat, const std::vector<char> &removed) {
  Cut cut;
  std::vector<RootedTree> crown;
  for (int v = 1; v < static_cast<int>(flat.parent.size()); ++v) {
    if (!removed[v])
      continue;
    cut.removed_edges.push_back(v);
    crown.push_back(component(flat, removed, v));
  }
  cut.crown = Forest(std::move(crown));
  cut.trunk = component(flat, removed, 0);
  return cut;
}

} // namespace

std::vector<int> preorder_parents(RootedTree tree) { return flatten(tree).parent; }

std::vector<Cut> admissible_cuts(RootedTree tree) {
  Flat flat = flatten(tree);
  int n = static_cast<int>(flat.parent.size());
  std::vector<Cut> out;
  std::vector<char> removed(n, 0);
  // Vertices are visited in preorder; a vertex may be removed only when no
  // ancestor edge is already removed.
  std::vector<int> blocked(n, 0);
  std::function<void(int)> visit = [&](int v) {
    if (v == n) {
      if (std::find(removed.begin(), removed.end(), 1) != removed.end())
        out.push_back(make_cut(flat, removed));
      return;
    }
    int p = flat.parent[v];
    blocked[v] = blocked[p] || removed[p];
    visit(v + 1);
    if (!blocked[v]) {
      removed[v] = 1;
      visit(v + 1);
      removed[v] = 0;
    }
  };
  if (n > 1)
    visit(1);
  return out;
}

std::vector<Cut> all_cuts(RootedTree tree) {
  Flat flat = flatten(tree);
  int edges = static_cast<int>(flat.parent.size()) - 1;
  if (edges >= 31)
    throw std::length_error("all_cuts: tree too large to enumerate");
  std::vector<Cut> out;
  std::vector<char> removed(edges + 1, 0);
  for (unsigned mask = 1; mask < (1u << edges); ++mask) {
    for (int e = 0; e < edges; ++e)
      removed[e + 1] = (mask >> e) & 1u;
    out.push_back(make_cut(flat, removed));
  }
  return out;
}

} // namespace treehopf
