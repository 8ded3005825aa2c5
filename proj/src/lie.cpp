#include "treehopf/lie.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "treehopf/hopf.hpp"

namespace treehopf {

Rational LieElement::coefficient(RootedTree t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(RootedTree t, const Rational &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

std::string LieElement::str() const {
  AlgebraElement x;
  for (const auto &[t, c] : terms_)
    x.add_term(Forest(t), c);
  return x.str();
}

LieElement &LieElement::operator+=(const LieElement &o) {
  for (const auto &[t, c] : o.terms_)
    add_term(t, c);
  return *this;
}

LieElement &LieElement::operator*=(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[t, v] : terms_)
    v *= c;
  return *this;
}

int n_count(RootedTree t1, RootedTree t2, RootedTree t) {
  if (t1.weight() + t2.weight() != t.weight())
    return 0;
  int count = 0;
  Forest crown(t1);
  for (const auto &cut : admissible_cuts(t))
    if (cut.size() == 1 && cut.crown == crown && cut.trunk == t2)
      ++count;
  return count;
}

Integer symmetry_factor(RootedTree t) {
  Integer out = 1;
  auto kids = t.children();
  std::size_t i = 0;
  while (i < kids.size()) {
    std::size_t j = i;
    while (j < kids.size() && kids[j] == kids[i])
      ++j;
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), j - i);
    Integer sub = symmetry_factor(kids[i]);
    Integer subpow;
    mpz_pow_ui(subpow.get_mpz_t(), sub.get_mpz_t(), j - i);
    out *= fact * subpow;
    i = j;
  }
  return out;
}

namespace {

// Σ_t n(a, b; t) Z_t, with candidates t from attaching a to each vertex of b.
LieElement cut_sum(RootedTree a, RootedTree b) {
  LieElement out;
  auto candidates = attachments(Forest(a), b);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (auto t : candidates)
    out.add_term(t, n_count(a, b, t));
  return out;
}

} // namespace

LieElement bracket(RootedTree a, RootedTree b) { return cut_sum(a, b) - cut_sum(b, a); }

LieElement bracket(const LieElement &a, const LieElement &b) {
  LieElement out;
  for (const auto &[ta, ca] : a.terms())
    for (const auto &[tb, cb] : b.terms())
      out += (ca * cb) * bracket(ta, tb);
  return out;
}

LieElement bracket_by_grafting(RootedTree a, RootedTree b) {
  AlgebraElement g = Rational(b.weight()) * graft(AlgebraElement(a), AlgebraElement(b)) -
                     Rational(a.weight()) * graft(AlgebraElement(b), AlgebraElement(a));
  Rational base = Rational(symmetry_factor(a)) * Rational(symmetry_factor(b));
  LieElement out;
  for (const auto &[f, c] : g.terms())
    out.add_term(f.trees()[0], c * Rational(symmetry_factor(f.trees()[0])) / base);
  return out;
}

// ---------------------------------------------------------------------------
// Pairing

Word parse_word(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty())
    throw ParseError("empty word", begin);
  if (body == "1")
    return {};
  Word w;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = body.find('.', start);
    std::string_view piece = body.substr(start, dot == std::string_view::npos ? body.npos : dot - start);
    try {
      w.push_back(RootedTree::parse(piece));
    } catch (const ParseError &e) {
      throw ParseError(e.message(), begin + start + e.position());
    }
    if (dot == std::string_view::npos)
      break;
    start = dot + 1;
  }
  return w;
}

std::string word_str(const Word &w) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += '.';
    out += w[i].str();
  }
  return out;
}

int word_weight(const Word &w) {
  int s = 0;
  for (auto t : w)
    s += t.weight();
  return s;
}

namespace {

Rational pair_forest(const Word &w, const Forest &f, bool from_left) {
  if (word_weight(w) != f.weight())
    return 0;
  if (w.empty())
    return f.is_unit() ? 1 : 0;
  if (w.size() == 1)
    return (f.is_tree() && f.trees()[0] == w[0]) ? 1 : 0;
  Forest letter(from_left ? w.front() : w.back());
  Word rest = from_left ? Word(w.begin() + 1, w.end()) : Word(w.begin(), w.end() - 1);
  Rational out = 0;
  TensorElement d = coproduct(f);
  for (const auto &[key, c] : d.terms()) {
    const Forest &mine = from_left ? key[0] : key[1];
    const Forest &other = from_left ? key[1] : key[0];
    if (mine == letter)
      out += c * pair_forest(rest, other, from_left);
  }
  return out;
}

} // namespace

Rational pair(const Word &w, const AlgebraElement &x) {
  Rational out = 0;
  for (const auto &[f, c] : x.terms())
    out += c * pair_forest(w, f, true);
  return out;
}

Rational pair_right(const Word &w, const AlgebraElement &x) {
  Rational out = 0;
  for (const auto &[f, c] : x.terms())
    out += c * pair_forest(w, f, false);
  return out;
}

Rational pair_split(const Word &u, const Word &v, const AlgebraElement &x) {
  Rational out = 0;
  TensorElement d = coproduct(x);
  for (const auto &[key, c] : d.terms())
    out += c * pair(u, AlgebraElement(key[0])) * pair(v, AlgebraElement(key[1]));
  return out;
}

// ---------------------------------------------------------------------------
// Dual basis of the chain basis

Matrix chain_dual_basis(int n) {
  const ChainBasis &basis = chain_basis(n);
  int size = static_cast<int>(basis.keys.size());
  Matrix c(size, std::vector<Rational>(size, Rational(0)));
  for (int j = 0; j < size; ++j)
    for (const auto &[k, v] : weight_vector(basis.values[j], n))
      c[k][j] = v;
  auto inv = invert(c);
  if (!inv)
    throw std::logic_error("chain basis matrix is singular");
  return *inv;
}

std::vector<Rational> functional_product(const std::vector<Rational> &f, int a,
                                         const std::vector<Rational> &g, int b) {
  const auto &forests = enumerate_forests(a + b);
  std::vector<Rational> out(forests.size(), Rational(0));
  for (std::size_t i = 0; i < forests.size(); ++i) {
    TensorElement d = coproduct(forests[i]);
    for (const auto &[key, c] : d.terms()) {
      if (key[0].weight() != a)
        continue;
      out[i] += c * f[forest_position(key[0])] * g[forest_position(key[1])];
    }
  }
  return out;
}

} // namespace treehopf
