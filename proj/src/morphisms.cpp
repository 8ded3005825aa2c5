#include "treehopf/morphisms.hpp"

#include <stdexcept>

#include "treehopf/hopf.hpp"
#include "treehopf/primitives.hpp"

namespace treehopf {

GrElement gr_unit() { return GrElement{{ChainKey{}, Rational(1)}}; }

void gr_add(GrElement &into, const GrElement &x, const Rational &scale) {
  if (scale == 0)
    return;
  for (const auto &[k, c] : x) {
    Rational &slot = into[k];
    slot += scale * c;
    if (slot == 0)
      into.erase(k);
  }
}

std::string gr_str(const GrElement &x) {
  if (x.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[k, c] : x) {
    if (!first)
      out += " + ";
    first = false;
    if (c != 1)
      out += to_string(c) + " ";
    out += k.empty() ? "1" : chain_key_str(k);
  }
  return out;
}

GrElement to_gr(const AlgebraElement &x) {
  GrElement out;
  Rational s = counit(x);
  if (s != 0)
    out[ChainKey{}] = s;
  AlgebraElement rest = x;
  rest.add_term(Forest(), -s);
  for (const auto &[k, c] : chain_coordinates(rest))
    if (c != 0)
      out[k] += c;
  return out;
}

AlgebraElement from_gr(const GrElement &x) {
  AlgebraElement out;
  for (const auto &[k, c] : x) {
    if (k.empty()) {
      out.add_term(Forest(), c);
      continue;
    }
    AlgebraElement v = chain_value(k);
    v *= c;
    out += v;
  }
  return out;
}

namespace {

void interleave(const ChainKey &a, std::size_t i, const ChainKey &b, std::size_t j,
                ChainKey &current, GrElement &out, const Rational &c) {
  if (i == a.size() && j == b.size()) {
    out[current] += c;
    return;
  }
  if (i < a.size()) {
    current.push_back(a[i]);
    interleave(a, i + 1, b, j, current, out, c);
    current.pop_back();
  }
  if (j < b.size()) {
    current.push_back(b[j]);
    interleave(a, i, b, j + 1, current, out, c);
    current.pop_back();
  }
}

} // namespace

GrElement shuffle_product(const GrElement &a, const GrElement &b) {
  GrElement out;
  for (const auto &[ka, ca] : a)
    for (const auto &[kb, cb] : b) {
      ChainKey current;
      interleave(ka, 0, kb, 0, current, out, ca * cb);
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

AlgebraElement star(const AlgebraElement &a, const AlgebraElement &b) {
  return from_gr(shuffle_product(to_gr(a), to_gr(b)));
}

GrTensor gr_coproduct(const GrElement &a) {
  GrTensor out;
  for (const auto &[k, c] : a)
    for (std::size_t cut = 0; cut <= k.size(); ++cut) {
      ChainKey upper(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(cut));
      ChainKey lower(k.begin() + static_cast<std::ptrdiff_t>(cut), k.end());
      Rational &slot = out[{std::move(upper), std::move(lower)}];
      slot += c;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

GrElement gr_antipode(const GrElement &a) {
  GrElement out;
  for (const auto &[k, c] : a) {
    ChainKey rev(k.rbegin(), k.rend());
    out[rev] += (k.size() % 2 ? -c : c);
  }
  return out;
}

Rational gr_counit(const GrElement &a) {
  auto it = a.find(ChainKey{});
  return it == a.end() ? Rational(0) : it->second;
}

TensorElement gr_tensor_to_element(const GrTensor &t) {
  TensorElement out(2);
  for (const auto &[keys, c] : t) {
    TensorElement term =
        TensorElement::tensor({from_gr(GrElement{{keys.first, Rational(1)}}),
                               from_gr(GrElement{{keys.second, Rational(1)}})});
    term *= c;
    out += term;
  }
  return out;
}

bool leading_term_check(const ChainKey &a, const ChainKey &b) {
  AlgebraElement product = chain_value(a) * chain_value(b);
  AlgebraElement lead = pi_j(product, static_cast<int>(a.size() + b.size()));
  GrElement s = shuffle_product(GrElement{{a, Rational(1)}}, GrElement{{b, Rational(1)}});
  return lead == from_gr(s);
}

// ---------------------------------------------------------------------------

FamilyEndomorphism::FamilyEndomorphism(TreeFamily family, int weight_bound)
    : family_(std::move(family)), bound_(weight_bound) {
  for (const auto &[t, p] : family_)
    if (!is_primitive(p))
      throw std::invalid_argument("family value for " + t.str() + " is not primitive");
}

AlgebraElement FamilyEndomorphism::on_tree(RootedTree t) const {
  auto it = cache_.find(t);
  if (it != cache_.end())
    return it->second;
  auto own = family_.find(t);
  AlgebraElement out = own == family_.end() ? AlgebraElement() : own->second;
  for (const auto &cut : admissible_cuts(t)) {
    auto p = family_.find(cut.trunk);
    if (p == family_.end() || p->second.is_zero())
      continue;
    out += graft((*this)(cut.crown), p->second);
  }
  return cache_.emplace(t, std::move(out)).first->second;
}

AlgebraElement FamilyEndomorphism::operator()(const Forest &f) const {
  if (f.weight() > bound_)
    throw std::invalid_argument("weight " + std::to_string(f.weight()) +
                                " exceeds the bound " + std::to_string(bound_));
  AlgebraElement out = AlgebraElement::scalar(1);
  for (auto t : f.trees())
    out = out * on_tree(t);
  return out;
}

AlgebraElement FamilyEndomorphism::operator()(const AlgebraElement &x) const {
  return apply_linear(x, [this](const Forest &f) { return (*this)(f); });
}

AlgebraElement phi_family(const TreeFamily &family, const AlgebraElement &x, int weight_bound) {
  return FamilyEndomorphism(family, weight_bound)(x);
}

namespace {

TensorElement apply_both(const ForestMap &f, const TensorElement &t) {
  TensorElement out(2);
  for (const auto &[key, c] : t.terms()) {
    TensorElement term = TensorElement::tensor({f(key[0]), f(key[1])});
    term *= c;
    out += term;
  }
  return out;
}

} // namespace

bool is_bialgebra_morphism(const ForestMap &f, int weight_bound) {
  if (!(f(Forest()) == AlgebraElement::scalar(1)))
    return false;
  for (int w = 1; w <= weight_bound; ++w)
    for (const auto &forest : enumerate_forests(w)) {
      AlgebraElement image = f(forest);
      if (!forest.is_tree()) {
        AlgebraElement product = AlgebraElement::scalar(1);
        for (auto t : forest.trees())
          product = product * f(Forest(t));
        if (!(product == image))
          return false;
      }
      if (!(coproduct(image) == apply_both(f, coproduct(forest))))
        return false;
    }
  return true;
}

TreeFamily recover_family(const ForestMap &endo, int weight_bound) {
  if (!is_bialgebra_morphism(endo, weight_bound))
    throw std::invalid_argument("map is not a bialgebra endomorphism up to weight " +
                                std::to_string(weight_bound));
  TreeFamily out;
  for (int w = 1; w <= weight_bound; ++w)
    for (auto t : enumerate_trees(w)) {
      AlgebraElement p = pi1(endo(Forest(t)));
      if (!p.is_zero())
        out.emplace(t, std::move(p));
    }
  return out;
}

// ---------------------------------------------------------------------------

UFamily identity_ufamily(int max_length, int max_weight) {
  UFamily u;
  u.max_length = max_length;
  u.max_weight = max_weight;
  for (int w = 1; w <= max_weight; ++w) {
    int size = static_cast<int>(primitive_basis(w).elements.size());
    for (int i = 0; i < size; ++i)
      u.maps[ChainKey{{w, i}}] = PrimCombination{{{w, i}, Rational(1)}};
  }
  return u;
}

namespace {

// Every split of `key` into consecutive nonempty blocks.
void block_splits(const ChainKey &key, std::size_t start, std::vector<ChainKey> &blocks,
                  const std::function<void(const std::vector<ChainKey> &)> &visit) {
  if (start == key.size()) {
    visit(blocks);
    return;
  }
  for (std::size_t end = start + 1; end <= key.size(); ++end) {
    blocks.emplace_back(key.begin() + static_cast<std::ptrdiff_t>(start),
                        key.begin() + static_cast<std::ptrdiff_t>(end));
    block_splits(key, end, blocks, visit);
    blocks.pop_back();
  }
}

void expand_blocks(const std::vector<const PrimCombination *> &values, std::size_t pos,
                   ChainKey &current, const Rational &c, GrElement &out) {
  if (pos == values.size()) {
    out[current] += c;
    return;
  }
  for (const auto &[k, v] : *values[pos]) {
    current.push_back(k);
    expand_blocks(values, pos + 1, current, c * v, out);
    current.pop_back();
  }
}

} // namespace

GrElement phi_u(const UFamily &u, const GrElement &x) {
  GrElement out;
  for (const auto &[key, c] : x) {
    if (key.empty()) {
      out[key] += c;
      continue;
    }
    if (chain_weight(key) > u.max_weight)
      throw std::invalid_argument("chain weight exceeds the family bound");
    std::vector<ChainKey> blocks;
    block_splits(key, 0, blocks, [&](const std::vector<ChainKey> &split) {
      std::vector<const PrimCombination *> values;
      for (const auto &b : split) {
        if (static_cast<int>(b.size()) > u.max_length)
          return;
        auto it = u.maps.find(b);
        if (it == u.maps.end())
          return;
        values.push_back(&it->second);
      }
      ChainKey current;
      expand_blocks(values, 0, current, c, out);
    });
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

bool is_invertible(const UFamily &u) {
  for (int w = 1; w <= u.max_weight; ++w) {
    int size = static_cast<int>(primitive_basis(w).elements.size());
    Matrix m(size, std::vector<Rational>(size, Rational(0)));
    for (int c = 0; c < size; ++c) {
      auto it = u.maps.find(ChainKey{{w, c}});
      if (it == u.maps.end())
        continue;
      for (const auto &[k, v] : it->second)
        if (k.first == w)
          m[k.second][c] = v;
    }
    if (!invert(m))
      return false;
  }
  return true;
}

UFamily compose(const UFamily &u, const UFamily &v) {
  for (const auto *f : {&u, &v})
    for (const auto &[k, val] : f->maps)
      if (k.size() != 1 && !val.empty())
        throw std::invalid_argument("compose needs families with only the first map nonzero");
  UFamily out;
  out.max_length = std::max(u.max_length, v.max_length);
  out.max_weight = std::min(u.max_weight, v.max_weight);
  for (const auto &[k, val] : v.maps) {
    PrimCombination result;
    for (const auto &[mid, c] : val) {
      auto it = u.maps.find(ChainKey{mid});
      if (it == u.maps.end())
        continue;
      for (const auto &[target, d] : it->second) {
        Rational &slot = result[target];
        slot += c * d;
        if (slot == 0)
          result.erase(target);
      }
    }
    if (!result.empty())
      out.maps[k] = std::move(result);
  }
  return out;
}

bool weights_compatible(const UFamily &u) {
  for (const auto &[k, val] : u.maps)
    for (const auto &[target, c] : val)
      if (c != 0 && target.first != chain_weight(k))
        return false;
  return true;
}

namespace {

std::map<ChainKey, int> key_positions(int w) {
  std::map<ChainKey, int> out;
  const auto &keys = chain_basis(w).keys;
  for (int i = 0; i < static_cast<int>(keys.size()); ++i)
    out[keys[i]] = i;
  return out;
}

SparseVector gr_vector(const GrElement &x, const std::map<ChainKey, int> &positions) {
  SparseVector v;
  for (const auto &[k, c] : x)
    v[positions.at(k)] = c;
  return v;
}

PrimCombination as_primitive(const GrElement &x) {
  PrimCombination out;
  for (const auto &[k, c] : x) {
    if (k.size() != 1)
      throw std::logic_error("extension value leaves Im(F_1): " + gr_str(x));
    out[k[0]] = c;
  }
  return out;
}

} // namespace

UFamily extend_to_bialgebra(const UFamily &u1) {
  UFamily out;
  out.max_weight = u1.max_weight;
  out.max_length = 1;
  for (const auto &[k, v] : u1.maps)
    if (k.size() == 1)
      out.maps[k] = v;
  for (int n = 2; n <= u1.max_weight; ++n) {
    UFamily lower = out;  // Φ^{(n-1)}
    for (int w = n; w <= u1.max_weight; ++w) {
      auto positions = key_positions(w);
      EchelonBasis echelon;
      std::vector<GrElement> values;
      for (int i = 1; i < n; ++i)
        for (int a = i; a + (n - i) <= w; ++a)
          for (const auto &ka : chain_basis(a).keys) {
            if (static_cast<int>(ka.size()) != i)
              continue;
            for (const auto &kb : chain_basis(w - a).keys) {
              if (static_cast<int>(kb.size()) != n - i)
                continue;
              GrElement xa{{ka, Rational(1)}}, xb{{kb, Rational(1)}};
              GrElement s = shuffle_product(xa, xb);
              GrElement value = shuffle_product(phi_u(lower, xa), phi_u(lower, xb));
              gr_add(value, phi_u(lower, s), -1);
              as_primitive(value);
              SparseVector sv = gr_vector(s, positions);
              int id = static_cast<int>(values.size());
              if (echelon.insert(sv, id)) {
                values.push_back(std::move(value));
                continue;
              }
              auto coords = echelon.solve(sv);
              GrElement predicted;
              for (const auto &[j, c] : *coords)
                gr_add(predicted, values[j], c);
              if (predicted != value)
                throw std::logic_error("inconsistent extension constraint at weight " +
                                       std::to_string(w));
            }
          }
      for (const auto &[key, pos] : positions) {
        if (static_cast<int>(key.size()) != n)
          continue;
        auto red = echelon.reduce(SparseVector{{pos, Rational(1)}});
        GrElement image;
        for (const auto &[j, c] : red.combination)
          gr_add(image, values[j], c);
        if (!image.empty())
          out.maps[key] = as_primitive(image);
      }
    }
    out.max_length = n;
  }
  return out;
}

// ---------------------------------------------------------------------------

AlgebraElement XiIsomorphism::operator()(const AlgebraElement &x) const {
  return apply_linear(x, [this](const Forest &f) {
    if (f.is_unit())
      return AlgebraElement::scalar(1);
    auto it = images.find(f.weight());
    if (it == images.end())
      throw std::invalid_argument("weight exceeds the bound of the isomorphism");
    return it->second[forest_position(f)];
  });
}

Matrix XiIsomorphism::matrix(int w) const {
  const auto &cols = images.at(w);
  int size = static_cast<int>(cols.size());
  Matrix m(size, std::vector<Rational>(size, Rational(0)));
  for (int c = 0; c < size; ++c)
    for (const auto &[r, v] : weight_vector(cols[c], w))
      m[r][c] = v;
  return m;
}

XiReport XiIsomorphism::verify() const {
  XiReport report;
  ForestMap xi = [this](const Forest &f) { return (*this)(AlgebraElement(f)); };
  for (int w = 1; w <= weight_bound; ++w) {
    const auto &forests = enumerate_forests(w);
    for (std::size_t k = 0; k < forests.size(); ++k) {
      const AlgebraElement &image = images.at(w)[k];
      if (is_homogeneous(image) != w)
        report.weight_preserved = false;
      else if (deg_p(image) != deg_p(AlgebraElement(forests[k])))
        report.deg_p_preserved = false;
      if (!(coproduct(image) == apply_both(xi, coproduct(forests[k]))))
        report.coproduct_compatible = false;
      if (!forests[k].is_tree()) {
        // Multiply in the reverse order to exercise commutativity of *.
        AlgebraElement product = AlgebraElement::scalar(1);
        auto trees = forests[k].trees();
        for (auto it = trees.rbegin(); it != trees.rend(); ++it)
          product = star(product, xi(Forest(*it)));
        if (!(product == image))
          report.multiplicative = false;
      }
    }
    for (const auto &p : primitive_basis(w).elements)
      if (!((*this)(p) == p))
        report.fixes_primitives = false;
    if (rank(matrix(w)) != static_cast<int>(forests.size()))
      report.invertible = false;
  }
  return report;
}

XiIsomorphism xi_isomorphism(int weight_bound) {
  if (weight_bound < 1 || weight_bound > kXiMaxWeight)
    throw std::invalid_argument("weight bound must be between 1 and " +
                                std::to_string(kXiMaxWeight));
  XiIsomorphism xi;
  xi.weight_bound = weight_bound;
  ForestMap known = [&xi](const Forest &f) { return xi(AlgebraElement(f)); };
  for (int w = 1; w <= weight_bound; ++w) {
    const auto &forests = enumerate_forests(w);
    const ChainBasis &basis = chain_basis(w);
    int count = static_cast<int>(forests.size());
    auto &images = xi.images[w];
    images.assign(count, AlgebraElement());
    for (int k = 0; k < count; ++k) {
      if (forests[k].is_tree())
        continue;
      AlgebraElement product = AlgebraElement::scalar(1);
      for (auto t : forests[k].trees())
        product = star(product, xi(AlgebraElement(t)));
      images[k] = std::move(product);
    }
    // Δ~ is injective on the chains of length >= 2; index their reduced
    // coproducts once per weight.
    std::map<TensorElement::Key, int, TensorKeyLess> rows;
    auto to_vector = [&rows](const TensorElement &t) {
      SparseVector v;
      for (const auto &[key, c] : t.terms())
        v[rows.try_emplace(key, static_cast<int>(rows.size())).first->second] = c;
      return v;
    };
    EchelonBasis echelon;
    for (int c = 0; c < static_cast<int>(basis.keys.size()); ++c)
      if (basis.keys[c].size() >= 2 &&
          !echelon.insert(to_vector(reduced_coproduct(basis.values[c])), c))
        throw std::logic_error("reduced coproduct is not injective on long chains");
    // The primitive part: p ↦ p on the tree parts of the primitives, 0 on
    // the remaining trees.
    const auto &prims = primitive_basis(w).elements;
    EchelonBasis tree_parts;
    for (int i = 0; i < static_cast<int>(prims.size()); ++i)
      if (!tree_parts.insert(weight_vector(pi_c(prims[i]), w), i))
        throw std::logic_error("primitives with dependent tree parts at weight " +
                               std::to_string(w));
    for (int k = 0; k < count; ++k) {
      if (!forests[k].is_tree())
        continue;
      TensorElement target = apply_both(known, reduced_coproduct(forests[k]));
      auto coords = echelon.solve(to_vector(target));
      if (!coords)
        throw std::logic_error("no coproduct-compatible image for " + forests[k].str());
      AlgebraElement image;
      for (const auto &[i, c] : tree_parts.reduce(SparseVector{{k, Rational(1)}}).combination)
        image += c * prims[i];
      for (const auto &[c, v] : *coords)
        image += v * basis.values[c];
      images[k] = std::move(image);
    }
  }
  return xi;
}

} // namespace treehopf
