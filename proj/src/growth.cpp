#include "treehopf/growth.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "treehopf/hopf.hpp"
#include "treehopf/primitives.hpp"

namespace treehopf {

std::vector<RootedTree> attachments(const Forest &m, RootedTree t) {
  std::vector<RootedTree> out;
  std::vector<RootedTree> kids(t.children().begin(), t.children().end());
  {
    auto with_m = kids;
    with_m.insert(with_m.end(), m.trees().begin(), m.trees().end());
    out.push_back(RootedTree::from_children(std::move(with_m)));
  }
  for (std::size_t i = 0; i < kids.size(); ++i) {
    for (auto r : attachments(m, kids[i])) {
      auto replaced = kids;
      replaced[i] = r;
      out.push_back(RootedTree::from_children(std::move(replaced)));
    }
  }
  return out;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Forest, Forest> &p) const {
    return p.first.hash() * 1000003u ^ p.second.hash();
  }
};

class GraftMemo {
public:
  AlgebraElement get(const Forest &m, const Forest &n) {
    auto key = std::make_pair(m, n);
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end())
        return it->second;
    }
    AlgebraElement value = compute(m, n);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(std::move(key), std::move(value)).first->second;
  }

private:
  static AlgebraElement compute(const Forest &m, const Forest &n) {
    AlgebraElement out;
    if (n.is_unit())
      return out;
    Rational share(1, n.weight());
    auto trees = n.trees();
    for (std::size_t i = 0; i < trees.size(); ++i) {
      // Equal trees give equal summands; handle each distinct tree once.
      if (i > 0 && trees[i] == trees[i - 1])
        continue;
      std::size_t mult = 1;
      while (i + mult < trees.size() && trees[i + mult] == trees[i])
        ++mult;
      std::vector<RootedTree> rest(trees.begin(), trees.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      Forest others(std::move(rest));
      for (auto r : attachments(m, trees[i]))
        out.add_term(others * Forest(r), share * static_cast<unsigned long>(mult));
    }
    return out;
  }

  std::mutex mutex_;
  std::unordered_map<std::pair<Forest, Forest>, AlgebraElement, PairHash> cache_;
};

GraftMemo &graft_memo() {
  static GraftMemo memo;
  return memo;
}

} // namespace

AlgebraElement graft(const Forest &m, const Forest &n) { return graft_memo().get(m, n); }

AlgebraElement graft(const AlgebraElement &x, const AlgebraElement &y) {
  AlgebraElement out;
  for (const auto &[fx, cx] : x.terms())
    for (const auto &[fy, cy] : y.terms()) {
      AlgebraElement g = graft(fx, fy);
      g *= cx * cy;
      out += g;
    }
  return out;
}

AlgebraElement chain_unchecked(const std::vector<AlgebraElement> &top_first) {
  if (top_first.empty())
    throw std::invalid_argument("chain needs at least one factor");
  AlgebraElement out = top_first[0];
  for (std::size_t i = 1; i < top_first.size(); ++i)
    out = graft(out, top_first[i]);
  return out;
}

AlgebraElement chain(const std::vector<AlgebraElement> &top_first) {
  for (const auto &p : top_first)
    if (!is_primitive(p))
      throw std::invalid_argument("chain factor is not primitive: " + p.str());
  return chain_unchecked(top_first);
}

// ---------------------------------------------------------------------------

AlgebraElement pi1(const Forest &f) {
  static std::mutex mutex;
  static std::unordered_map<Forest, AlgebraElement, ForestHash> cache;
  if (f.is_unit())
    return {};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(f);
    if (it != cache.end())
      return it->second;
  }
  AlgebraElement out(f);
  TensorElement split = reduced_coproduct(f);
  for (const auto &[key, c] : split.terms()) {
    AlgebraElement g = graft(AlgebraElement(key[0]), pi1(key[1]));
    g *= c;
    out -= g;
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(f, std::move(out)).first->second;
}

AlgebraElement pi1(const AlgebraElement &x) {
  return apply_linear(x, [](const Forest &f) { return pi1(f); });
}

int deg_p(const AlgebraElement &x) {
  if (x.is_zero())
    throw std::invalid_argument("deg_p of zero is undefined");
  AlgebraElement y = x;
  y.add_term(Forest(), -counit(x));
  if (y.is_zero())
    return 0;
  TensorElement t = TensorElement::tensor({y});
  auto step = [](const Forest &f) { return reduced_coproduct(f); };
  int k = 0;
  while (!t.is_zero()) {
    t = expand_slot(t, step, 0);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Chain bases

int chain_weight(const ChainKey &key) {
  int w = 0;
  for (const auto &[weight, index] : key)
    w += weight;
  return w;
}

std::string chain_key_str(const ChainKey &key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i)
      out += " T ";
    out += "p" + std::to_string(key[i].first) + "." + std::to_string(key[i].second);
  }
  return out;
}

AlgebraElement chain_value(const ChainKey &key) {
  static std::mutex mutex;
  static std::map<ChainKey, AlgebraElement> cache;
  if (key.empty())
    throw std::invalid_argument("empty chain");
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }
  const auto &[w, idx] = key.back();
  const AlgebraElement &last = primitive_basis(w).elements.at(idx);
  AlgebraElement value =
      key.size() == 1 ? last : graft(chain_value(ChainKey(key.begin(), key.end() - 1)), last);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

namespace {

void compositions(int n, std::vector<int> &current, std::vector<std::vector<int>> &out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int a = 1; a <= n; ++a) {
    current.push_back(a);
    compositions(n - a, current, out);
    current.pop_back();
  }
}

std::unique_ptr<ChainBasis> build_chain_basis(int n) {
  auto basis = std::make_unique<ChainBasis>();
  basis->weight = n;
  std::vector<std::vector<int>> comps;
  std::vector<int> current;
  compositions(n, current, comps);
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto &a, const auto &b) { return a.size() < b.size(); });
  for (const auto &comp : comps) {
    ChainKey key(comp.size());
    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
      if (pos == comp.size()) {
        basis->keys.push_back(key);
        return;
      }
      int size = static_cast<int>(primitive_basis(comp[pos]).elements.size());
      for (int i = 0; i < size; ++i) {
        key[pos] = {comp[pos], i};
        fill(pos + 1);
      }
    };
    fill(0);
  }
  for (std::size_t i = 0; i < basis->keys.size(); ++i) {
    basis->values.push_back(chain_value(basis->keys[i]));
    if (!basis->echelon.insert(weight_vector(basis->values.back(), n), static_cast<int>(i)))
      throw std::logic_error("chain values of weight " + std::to_string(n) +
                             " are linearly dependent");
  }
  if (basis->keys.size() != enumerate_forests(n).size())
    throw std::logic_error("chain basis of weight " + std::to_string(n) +
                           " does not span the homogeneous component");
  return basis;
}

} // namespace

const ChainBasis &chain_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ChainBasis>> cache;
  if (n < 1)
    throw std::invalid_argument("chain basis weight must be >= 1");
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
      return *it->second;
  }
  auto built = build_chain_basis(n);
  std::lock_guard lock(mutex);
  return *cache.try_emplace(n, std::move(built)).first->second;
}

std::map<ChainKey, Rational> chain_coordinates(const AlgebraElement &x) {
  std::map<ChainKey, Rational> out;
  for (const auto &[n, component] : weight_split(x)) {
    if (n == 0)
      throw std::invalid_argument("chain_coordinates: element has a scalar part");
    const ChainBasis &basis = chain_basis(n);
    auto coords = basis.echelon.solve(weight_vector(component, n));
    if (!coords)
      throw std::logic_error("element outside the chain span");
    for (const auto &[id, c] : *coords)
      out[basis.keys[id]] += c;
  }
  return out;
}

Decomposition decompose(const AlgebraElement &x) {
  Decomposition d;
  d.scalar = counit(x);
  AlgebraElement rest = x;
  rest.add_term(Forest(), -d.scalar);
  for (const auto &[key, c] : chain_coordinates(rest)) {
    AlgebraElement v = chain_value(key);
    v *= c;
    d.components[static_cast<int>(key.size())] += v;
  }
  for (auto it = d.components.begin(); it != d.components.end();)
    it = it->second.is_zero() ? d.components.erase(it) : std::next(it);
  return d;
}

AlgebraElement pi_j(const AlgebraElement &x, int j) {
  auto d = decompose(x);
  auto it = d.components.find(j);
  return it == d.components.end() ? AlgebraElement() : it->second;
}

} // namespace treehopf
