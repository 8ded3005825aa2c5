#include "treehopf/renorm.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "treehopf/hopf.hpp"

namespace treehopf {

SubtreeComodule subtree_comodule(RootedTree t) {
  std::set<RootedTree> seen{t};
  for (const auto &cut : admissible_cuts(t))
    seen.insert(cut.trunk);
  SubtreeComodule out;
  out.trunks.assign(seen.begin(), seen.end());
  std::stable_sort(out.trunks.begin(), out.trunks.end(), [](RootedTree a, RootedTree b) {
    if (a.weight() != b.weight())
      return a.weight() < b.weight();
    return a.str() < b.str();
  });
  int m = static_cast<int>(out.trunks.size());
  std::map<RootedTree, int> position;
  for (int k = 0; k < m; ++k)
    position[out.trunks[k]] = k;
  out.q = StructureMatrix(m);
  for (int i = 0; i < m; ++i) {
    out.q.at(i, i) = AlgebraElement::scalar(1);
    for (const auto &cut : admissible_cuts(out.trunks[i]))
      out.q.at(i, position.at(cut.trunk)) += AlgebraElement(cut.crown);
  }
  out.p = extract_family(out.q);
  return out;
}

// ---------------------------------------------------------------------------
// Expressions

namespace {

std::string factor_key(const Factor &f) { return f.str(); }

} // namespace

std::string Factor::str() const {
  if (bracket)
    return "[" + bracket->str() + "]";
  return "x_{" + symbol.str() + "}(c)";
}

void Monomial::normalize() {
  std::stable_sort(factors.begin(), factors.end(), [](const Factor &a, const Factor &b) {
    if (a.is_bracket() != b.is_bracket())
      return a.is_bracket();
    if (a.is_bracket())
      return factor_key(a) < factor_key(b);
    return a.symbol.str() < b.symbol.str();
  });
}

std::string Monomial::str() const {
  if (factors.empty())
    return "1";
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k > 0 && !factors[k - 1].is_bracket())
      out += ' ';
    out += factors[k].str();
  }
  return out;
}

Factor symbol_factor(RootedTree t) { return Factor{t, nullptr}; }

Monomial forest_bracket(const Forest &f) {
  Monomial out;
  if (f.is_unit())
    return out;
  auto inner = std::make_shared<Monomial>();
  for (auto t : f.trees())
    inner->factors.push_back(symbol_factor(t));
  inner->normalize();
  out.factors.push_back(Factor{RootedTree(), inner});
  return out;
}

std::string RenormExpression::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto &[c, m] = terms_[k];
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (k == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.is_unit()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1)
      out += to_string(mag) + " ";
    out += m.str();
  }
  return out;
}

RenormExpression RenormExpression::bracketed() const {
  RenormExpression out;
  for (const auto &[c, m] : terms_) {
    if (m.is_unit() || (m.factors.size() == 1 && m.factors[0].is_bracket())) {
      out.add({c, m});
      continue;
    }
    Monomial wrapped;
    wrapped.factors.push_back(Factor{RootedTree(), std::make_shared<Monomial>(m)});
    out.add({c, std::move(wrapped)});
  }
  return out;
}

bool operator==(const RenormExpression &a, const RenormExpression &b) {
  auto merged = [](const RenormExpression &e) {
    std::map<std::string, Rational> out;
    for (const auto &[c, m] : e.terms()) {
      Monomial n = m;
      n.normalize();
      Rational &slot = out[n.str()];
      slot += c;
      if (slot == 0)
        out.erase(n.str());
    }
    return out;
  };
  return merged(a) == merged(b);
}

RenormExpression counterterm(RootedTree t) {
  SubtreeComodule c = subtree_comodule(t);
  int top = static_cast<int>(c.trunks.size()) - 1;
  RenormExpression out;
  for (int j = top; j >= 0; --j) {
    const AlgebraElement &left = c.q.at(top, j);
    if (left.is_zero())
      continue;
    AlgebraElement s = antipode(left);
    for (const auto &[f, coef] : s.terms()) {
      Monomial m = forest_bracket(f);
      m.factors.push_back(symbol_factor(c.trunks[j]));
      m.normalize();
      out.add({coef, std::move(m)});
    }
  }
  return out;
}

RenormExpression renormalized(RootedTree t) {
  RenormExpression bar = counterterm(t);
  RenormExpression out = bar;
  RenormExpression wrapped = bar.bracketed();
  for (auto term : wrapped.terms()) {
    term.coefficient = -term.coefficient;
    out.add(std::move(term));
  }
  return out;
}

} // namespace treehopf
