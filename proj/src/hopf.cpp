#include "treehopf/hopf.hpp"

#include <mutex>
#include <unordered_map>

namespace treehopf {

namespace {

template <class V> class TreeMemo {
public:
  template <class F> V get(RootedTree t, F &&compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find(t);
      if (it != cache_.end())
        return it->second;
    }
    V value = compute(t);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(t, std::move(value)).first->second;
  }

private:
  std::mutex mutex_;
  std::unordered_map<RootedTree, V, TreeHash> cache_;
};

TensorElement unit_tensor() {
  TensorElement one(2);
  one.add_term({Forest(), Forest()}, 1);
  return one;
}

} // namespace

TensorElement coproduct(RootedTree t) {
  static TreeMemo<TensorElement> memo;
  return memo.get(t, [](RootedTree tree) {
    TensorElement out(2);
    out.add_term({Forest(), Forest(tree)}, 1);
    out.add_term({Forest(tree), Forest()}, 1);
    for (const auto &cut : admissible_cuts(tree))
      out.add_term({cut.crown, Forest(cut.trunk)}, 1);
    return out;
  });
}

TensorElement coproduct(const Forest &f) {
  TensorElement out = unit_tensor();
  for (const auto &t : f.trees())
    out = out * coproduct(t);
  return out;
}

TensorElement coproduct(const AlgebraElement &x) {
  TensorElement out(2);
  for (const auto &[f, c] : x.terms()) {
    TensorElement d = coproduct(f);
    d *= c;
    out += d;
  }
  return out;
}

Rational counit(const AlgebraElement &x) { return x.coefficient(Forest()); }

TensorElement reduced_coproduct(const Forest &f) {
  TensorElement out = coproduct(f);
  if (f.is_unit())
    return TensorElement(2);
  out.add_term({Forest(), f}, -1);
  out.add_term({f, Forest()}, -1);
  return out;
}

TensorElement reduced_coproduct(const AlgebraElement &x) {
  TensorElement out(2);
  for (const auto &[f, c] : x.terms()) {
    if (f.is_unit())
      continue;
    TensorElement d = reduced_coproduct(f);
    d *= c;
    out += d;
  }
  return out;
}

TensorElement iterated_reduced(const AlgebraElement &x, int k) {
  if (k < 0)
    throw std::invalid_argument("iterated_reduced: k must be >= 0");
  AlgebraElement y = x;
  y.add_term(Forest(), -counit(x));
  if (k == 0)
    return TensorElement::tensor({y});
  TensorElement out = reduced_coproduct(y);
  auto step = [](const Forest &f) { return reduced_coproduct(f); };
  for (int i = 1; i < k && !out.is_zero(); ++i)
    out = expand_slot(out, step, 0);
  if (out.is_zero())
    return TensorElement(k + 1);
  return out;
}

namespace {

AlgebraElement tree_antipode(RootedTree t) {
  static TreeMemo<AlgebraElement> memo;
  return memo.get(t, [](RootedTree tree) {
    AlgebraElement out;
    out.add_term(Forest(tree), -1);
    for (const auto &cut : all_cuts(tree)) {
      Rational sign = (cut.size() % 2 == 1) ? 1 : -1;
      out.add_term(cut.crown * Forest(cut.trunk), sign);
    }
    return out;
  });
}

AlgebraElement tree_antipode_recursive(RootedTree t) {
  static TreeMemo<AlgebraElement> memo;
  return memo.get(t, [](RootedTree tree) {
    AlgebraElement out;
    out.add_term(Forest(tree), -1);
    for (const auto &cut : admissible_cuts(tree)) {
      AlgebraElement crown = AlgebraElement::scalar(1);
      for (const auto &c : cut.crown.trees())
        crown = crown * tree_antipode_recursive(c);
      out -= crown * AlgebraElement(Forest(cut.trunk));
    }
    return out;
  });
}

AlgebraElement multiplicative(const AlgebraElement &x, AlgebraElement (*on_tree)(RootedTree)) {
  return apply_linear(x, [on_tree](const Forest &f) {
    AlgebraElement out = AlgebraElement::scalar(1);
    for (const auto &t : f.trees())
      out = out * on_tree(t);
    return out;
  });
}

} // namespace

AlgebraElement antipode(const Forest &f) { return multiplicative(AlgebraElement(f), tree_antipode); }

AlgebraElement antipode(const AlgebraElement &x) { return multiplicative(x, tree_antipode); }

AlgebraElement antipode_recursive(const AlgebraElement &x) {
  return multiplicative(x, tree_antipode_recursive);
}

bool is_primitive(const AlgebraElement &x) {
  return counit(x) == 0 && reduced_coproduct(x).is_zero();
}

AlgebraElement b_plus(const AlgebraElement &x) {
  return apply_linear(x, [](const Forest &f) { return AlgebraElement(b_plus(f)); });
}

} // namespace treehopf
