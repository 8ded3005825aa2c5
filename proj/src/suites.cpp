#include "treehopf/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "treehopf/comodule.hpp"
#include "treehopf/growth.hpp"
#include "treehopf/hopf.hpp"
#include "treehopf/lie.hpp"
#include "treehopf/morphisms.hpp"
#include "treehopf/primitives.hpp"
#include "treehopf/renorm.hpp"
#include "treehopf/sampling.hpp"
#include "treehopf/serialization.hpp"

namespace treehopf {

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"hopf-axioms", "growth", "primitives", "tables",
                                              "lie",         "comodule", "morphisms", "renorm",
                                              "roundtrip",   "all"};
  return names;
}

int default_max_weight(const std::string &suite) {
  if (suite == "tables")
    return 29;
  if (suite == "primitives")
    return 8;
  if (suite == "morphisms")
    return 4;
  return 5;
}

const std::vector<Integer> &reference_forest_counts() {
  static const std::vector<Integer> r = [] {
    std::vector<Integer> out;
    for (const char *s :
         {"1",         "2",         "4",          "9",           "20",          "48",
          "115",       "286",       "719",        "1842",        "4766",        "12486",
          "32973",     "87811",     "235381",     "634847",      "1721159",     "4688676",
          "12826228",  "35221832",  "97055181",   "268282855",   "743724984",   "2067174645",
          "5759636510", "16083734329", "45007066269", "126186554308", "354426847597"})
      out.emplace_back(s);
    return out;
  }();
  return r;
}

const std::vector<Integer> &reference_primitive_counts() {
  static const std::vector<Integer> h = [] {
    std::vector<Integer> out;
    for (const char *s :
         {"1",        "1",        "1",         "2",          "3",          "8",
          "16",       "41",       "98",        "250",        "631",        "1646",
          "4285",     "11338",    "30135",     "80791",      "217673",     "590010",
          "1606188",  "4392219",  "12055393",  "33206321",   "91752211",   "254261363",
          "706465999", "1967743066", "5493195530", "15367129299", "43073007846"})
      out.emplace_back(s);
    return out;
  }();
  return h;
}

namespace {

/// Returns "" on success, otherwise a description of the first failure.
using Check = std::function<std::string()>;

class Runner {
public:
  explicit Runner(SuiteReport &report) : report_(report) {}
  void operator()(const std::string &name, const Check &check) {
    CheckResult result{name, false, ""};
    try {
      result.detail = check();
      result.passed = result.detail.empty();
    } catch (const std::exception &e) {
      result.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(result));
  }

private:
  SuiteReport &report_;
};

std::vector<Forest> forests_up_to(int n, int from = 0) {
  std::vector<Forest> out;
  for (int w = from; w <= n; ++w)
    for (const auto &f : enumerate_forests(w))
      out.push_back(f);
  return out;
}

std::vector<RootedTree> trees_up_to(int n) {
  std::vector<RootedTree> out;
  for (int w = 1; w <= n; ++w)
    for (auto t : enumerate_trees(w))
      out.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------

void hopf_suite(Runner &check, int n) {
  auto forests = forests_up_to(n);
  check("coassociativity", [&]() -> std::string {
    for (const auto &f : forests) {
      TensorElement d = coproduct(f);
      auto delta = [](const Forest &g) { return coproduct(g); };
      if (!(expand_slot(d, delta, 0) == expand_slot(d, delta, 1)))
        return f.str();
    }
    return "";
  });
  check("counit", [&]() -> std::string {
    auto eps = [](const Forest &g) { return AlgebraElement::scalar(counit(AlgebraElement(g))); };
    for (const auto &f : forests) {
      TensorElement d = coproduct(f);
      if (multiply_out(apply_to_slot(d, eps, 0)) != AlgebraElement(f) ||
          multiply_out(apply_to_slot(d, eps, 1)) != AlgebraElement(f))
        return f.str();
    }
    return "";
  });
  check("antipode convolution", [&]() -> std::string {
    auto s = [](const Forest &g) { return antipode(g); };
    for (const auto &f : forests) {
      TensorElement d = coproduct(f);
      AlgebraElement expected = AlgebraElement::scalar(counit(AlgebraElement(f)));
      if (multiply_out(apply_to_slot(d, s, 0)) != expected ||
          multiply_out(apply_to_slot(d, s, 1)) != expected)
        return f.str();
    }
    return "";
  });
  check("antipode recursion", [&]() -> std::string {
    for (const auto &f : forests)
      if (antipode(f) != antipode_recursive(AlgebraElement(f)))
        return f.str();
    return "";
  });
  check("antipode involution", [&]() -> std::string {
    for (const auto &f : forests)
      if (antipode(antipode(f)) != AlgebraElement(f))
        return f.str();
    return "";
  });
  check("B+ cocycle", [&]() -> std::string {
    auto bp = [](const Forest &g) { return AlgebraElement(b_plus(g)); };
    for (const auto &f : forests) {
      if (f.weight() + 1 > n)
        continue;
      TensorElement lhs = coproduct(b_plus(f));
      TensorElement rhs = TensorElement::tensor({AlgebraElement(b_plus(f)), AlgebraElement::scalar(1)});
      rhs += apply_to_slot(coproduct(f), bp, 1);
      if (!(lhs == rhs))
        return f.str();
    }
    return "";
  });
  check("grading", [&]() -> std::string {
    for (const auto &f : forests) {
      TensorElement d = coproduct(f);
      for (const auto &[key, c] : d.terms())
        if (key[0].weight() + key[1].weight() != f.weight())
          return "coproduct of " + f.str();
      if (f.weight() > 0 && is_homogeneous(antipode(f)) != f.weight())
        return "antipode of " + f.str();
    }
    return "";
  });
  check("multiplicativity", [&]() -> std::string {
    for (const auto &a : forests)
      for (const auto &b : forests) {
        if (a.weight() + b.weight() > n || forest_less(b, a))
          continue;
        if (!(coproduct(a * b) == coproduct(a) * coproduct(b)))
          return a.str() + " * " + b.str();
        if (antipode(a * b) != antipode(a) * antipode(b))
          return "antipode " + a.str() + " * " + b.str();
      }
    return "";
  });
}

// ---------------------------------------------------------------------------

std::vector<ChainKey> chain_keys_up_to(int n) {
  std::vector<ChainKey> out;
  for (int w = 1; w <= n; ++w)
    for (const auto &k : chain_basis(w).keys)
      out.push_back(k);
  return out;
}

void growth_suite(Runner &check, int n, Rng &rng) {
  check("pi1 is a projection onto primitives", [&]() -> std::string {
    for (const auto &f : forests_up_to(n, 1)) {
      AlgebraElement p = pi1(f);
      if (!is_primitive(p))
        return "not primitive: " + f.str();
      if (pi1(p) != p)
        return "not idempotent: " + f.str();
    }
    return "";
  });
  check("pi1 vanishes on longer chains", [&]() -> std::string {
    for (const auto &k : chain_keys_up_to(n))
      if (k.size() >= 2 && !pi1(chain_value(k)).is_zero())
        return chain_key_str(k);
    return "";
  });
  check("grafting coproduct identity", [&]() -> std::string {
    for (int trial = 0; trial < 20; ++trial) {
      int wx = 1 + static_cast<int>(rng() % std::min(n, 4));
      int wy = 1 + static_cast<int>(rng() % std::min(n, 3));
      AlgebraElement x = random_homogeneous(rng, wx, 3);
      AlgebraElement y = random_primitive(rng, wy);
      TensorElement expected = TensorElement::tensor({x, y});
      auto graft_y = [&](const Forest &g) { return graft(AlgebraElement(g), y); };
      expected += apply_to_slot(reduced_coproduct(x), graft_y, 1);
      if (!(reduced_coproduct(graft(x, y)) == expected))
        return x.str() + " T " + y.str();
    }
    return "";
  });
  check("ladder degrees", [&]() -> std::string {
    for (int k = 1; k <= n; ++k)
      if (deg_p(AlgebraElement(ladder(k))) != k)
        return ladder(k).str();
    return "";
  });
  check("chain vectors independent and spanning", [&]() -> std::string {
    for (int w = 1; w <= n; ++w) {
      const ChainBasis &b = chain_basis(w);
      if (b.echelon.rank() != static_cast<int>(b.keys.size()) ||
          Integer(b.echelon.rank()) != count_forests(w))
        return "weight " + std::to_string(w);
    }
    return "";
  });
  check("chain degrees", [&]() -> std::string {
    for (const auto &k : chain_keys_up_to(n)) {
      AlgebraElement v = chain_value(k);
      if (deg_p(v) != static_cast<int>(k.size()))
        return chain_key_str(k);
      if (!iterated_reduced(v, static_cast<int>(k.size())).is_zero())
        return "iterated " + chain_key_str(k);
    }
    return "";
  });
  check("decompose reconstructs and matches deg_p", [&]() -> std::string {
    for (int trial = 0; trial < 20; ++trial) {
      AlgebraElement x = random_element(rng, n, 4);
      Decomposition d = decompose(x);
      AlgebraElement sum = AlgebraElement::scalar(d.scalar);
      int top = 0;
      for (const auto &[j, c] : d.components) {
        sum += c;
        top = std::max(top, j);
        if (pi_j(x, j) != c)
          return "pi_j " + x.str();
      }
      if (sum != x)
        return "sum " + x.str();
      if (!x.is_zero() && deg_p(x) != top)
        return "deg_p " + x.str();
    }
    return "";
  });
}

// ---------------------------------------------------------------------------

std::string span_equal(const std::vector<AlgebraElement> &a, const std::vector<AlgebraElement> &b) {
  std::vector<AlgebraElement> both = a;
  both.insert(both.end(), b.begin(), b.end());
  int ra = rank_of(a), rb = rank_of(b), rab = rank_of(both);
  if (ra != rab || rb != rab)
    return "ranks " + std::to_string(ra) + ", " + std::to_string(rb) + ", " + std::to_string(rab);
  return "";
}

void primitives_suite(Runner &check, int n) {
  const auto &h = reference_primitive_counts();
  check("basis sizes", [&]() -> std::string {
    for (int w = 1; w <= n; ++w)
      if (Integer(primitive_basis(w).elements.size()) != h[w - 1])
        return "weight " + std::to_string(w);
    return "";
  });
  check("basis elements primitive with tree part", [&]() -> std::string {
    for (int w = 1; w <= n; ++w)
      for (const auto &p : primitive_basis(w).elements)
        if (!is_primitive(p) || pi_c(p).is_zero())
          return p.str();
    return "";
  });
  check("pruned scan spans the full scan", [&]() -> std::string {
    for (int w = 1; w <= std::min(n, 6); ++w) {
      std::string r = span_equal(primitive_basis(w).elements, primitive_basis_unpruned(w).elements);
      if (!r.empty())
        return "weight " + std::to_string(w) + ": " + r;
    }
    return "";
  });
  check("ladder primitives", [&]() -> std::string {
    std::vector<AlgebraElement> ps;
    for (int i = 1; i <= n; ++i) {
      ps.push_back(ladder_primitive(i));
      if (!is_primitive(ps.back()))
        return "P_" + std::to_string(i);
      if (psi_substitute(i, ps) != AlgebraElement(ladder(i)))
        return "Psi_" + std::to_string(i);
    }
    return independent(ps) ? "" : "dependent";
  });
  check("pi1 of leaf powers", [&]() -> std::string {
    AlgebraElement l1 = ladder(1), l2 = ladder(2), l3 = ladder(3);
    if (pi1(l1) != l1)
      return "l1";
    if (pi1(l1 * l1) != l1 * l1 - Rational(2) * l2)
      return "l1^2";
    if (pi1(l1 * l1 * l1) != l1 * l1 * l1 - Rational(3) * (l1 * l2) + Rational(3) * l3)
      return "l1^3";
    return "";
  });
  check("bigrading against chain spans", [&]() -> std::string {
    DimensionTable t = dimension_table(n);
    for (int w = 1; w <= std::min(n, 7); ++w) {
      std::map<int, int> by_length;
      for (const auto &k : chain_basis(w).keys)
        ++by_length[static_cast<int>(k.size())];
      for (int k = 1; k <= w; ++k) {
        std::vector<AlgebraElement> values;
        const ChainBasis &b = chain_basis(w);
        for (std::size_t i = 0; i < b.keys.size(); ++i)
          if (static_cast<int>(b.keys[i].size()) == k)
            values.push_back(b.values[i]);
        if (Integer(rank_of(values)) != t.h[w][k])
          return "h_{" + std::to_string(w) + "," + std::to_string(k) + "}";
      }
    }
    return "";
  });
}

// ---------------------------------------------------------------------------

void tables_suite(Runner &check, int n) {
  const auto &r = reference_forest_counts();
  const auto &h = reference_primitive_counts();
  int top = std::min(n, 29);
  DimensionTable t = dimension_table(top);
  check("forest counts", [&]() -> std::string {
    for (int w = 1; w <= top; ++w)
      if (count_forests(w) != r[w - 1] || t.r[w] != r[w - 1])
        return "r_" + std::to_string(w);
    return "";
  });
  check("forest counts by enumeration", [&]() -> std::string {
    for (int w = 1; w <= std::min(top, 10); ++w)
      if (Integer(enumerate_forests(w).size()) != count_forests(w))
        return "r_" + std::to_string(w);
    return "";
  });
  check("primitive counts", [&]() -> std::string {
    for (int w = 1; w <= top; ++w)
      if (theta(w, std::vector<Integer>(t.r.begin() + 1, t.r.end())) != h[w - 1] ||
          t.h[w][1] != h[w - 1])
        return "h_" + std::to_string(w);
    return "";
  });
  check("bigrading sums", [&]() -> std::string {
    for (int w = 1; w <= top; ++w) {
      Integer sum = 0;
      for (int k = 1; k <= w; ++k)
        sum += t.h[w][k];
      if (sum != t.r[w])
        return "n = " + std::to_string(w);
    }
    return "";
  });
  check("composition counts", [&]() -> std::string {
    std::vector<Integer> h1;
    for (int w = 1; w <= top; ++w)
      h1.push_back(t.h[w][1]);
    for (int w = 1; w <= top; ++w)
      if (composition_count(w, h1) != t.r[w])
        return "n = " + std::to_string(w);
    return "";
  });
  check("series identities", [&]() -> std::string {
    if (!t.series_identities_hold)
      return "table";
    for (int k = 1; k <= std::min(top, 8); ++k)
      if (!theta_phi_identity(k))
        return "k = " + std::to_string(k);
    return "";
  });
}

// ---------------------------------------------------------------------------

std::vector<Word> words_of_weight(int w) {
  std::vector<Word> out;
  if (w == 0)
    return {Word{}};
  for (int first = 1; first <= w; ++first)
    for (auto t : enumerate_trees(first))
      for (auto rest : words_of_weight(w - first)) {
        rest.insert(rest.begin(), t);
        out.push_back(std::move(rest));
      }
  return out;
}

void lie_suite(Runner &check, int n, Rng &rng) {
  auto trees = trees_up_to(n);
  check("antisymmetry", [&]() -> std::string {
    for (auto a : trees)
      for (auto b : trees)
        if (a.weight() + b.weight() <= n && bracket(a, b) != Rational(-1) * bracket(b, a))
          return a.str() + ", " + b.str();
    return "";
  });
  check("Jacobi", [&]() -> std::string {
    for (auto a : trees)
      for (auto b : trees)
        for (auto c : trees) {
          if (a.weight() + b.weight() + c.weight() > n)
            continue;
          LieElement sum = bracket(LieElement(a), bracket(b, c)) +
                           bracket(LieElement(b), bracket(c, a)) +
                           bracket(LieElement(c), bracket(a, b));
          if (!sum.is_zero())
            return a.str() + ", " + b.str() + ", " + c.str();
        }
    return "";
  });
  check("bracket through grafting", [&]() -> std::string {
    for (auto a : trees)
      for (auto b : trees)
        if (a.weight() + b.weight() <= n && bracket(a, b) != bracket_by_grafting(a, b))
          return a.str() + ", " + b.str();
    return "";
  });
  int pw = std::min(n, 5);
  check("pairing grading", [&]() -> std::string {
    for (int a = 0; a <= pw; ++a)
      for (const auto &w : words_of_weight(a))
        for (int b = 0; b <= pw; ++b) {
          if (a == b)
            continue;
          for (const auto &f : enumerate_forests(b))
            if (pair(w, AlgebraElement(f)) != 0)
              return word_str(w) + " on " + f.str();
        }
    return "";
  });
  check("pairing parse independence", [&]() -> std::string {
    for (int trial = 0; trial < 20; ++trial) {
      int w = 1 + static_cast<int>(rng() % pw);
      AlgebraElement x = random_homogeneous(rng, w, 4);
      for (const auto &word : words_of_weight(w))
        if (pair(word, x) != pair_right(word, x))
          return word_str(word) + " on " + x.str();
    }
    return "";
  });
  check("pairing nondegenerate", [&]() -> std::string {
    for (int w = 1; w <= pw; ++w) {
      Matrix m;
      for (const auto &word : words_of_weight(w)) {
        std::vector<Rational> row;
        for (const auto &f : enumerate_forests(w))
          row.push_back(pair(word, AlgebraElement(f)));
        m.push_back(std::move(row));
      }
      if (Integer(rank(m)) != count_forests(w))
        return "weight " + std::to_string(w);
    }
    return "";
  });
  check("products of words vanish on primitives", [&]() -> std::string {
    for (int w = 1; w <= std::min(n + 1, 6); ++w)
      for (const auto &p : primitive_basis(w).elements) {
        if (pair(Word{}, p) != 0)
          return "unit on " + p.str();
        for (const auto &word : words_of_weight(w))
          if (word.size() >= 2 && pair(word, p) != 0)
            return word_str(word) + " on " + p.str();
      }
    return "";
  });
  check("dual basis concatenation", [&]() -> std::string {
    for (int total = 2; total <= pw; ++total) {
      Matrix whole = chain_dual_basis(total);
      std::map<ChainKey, int> position;
      const auto &keys = chain_basis(total).keys;
      for (std::size_t i = 0; i < keys.size(); ++i)
        position[keys[i]] = static_cast<int>(i);
      for (int a = 1; a < total; ++a) {
        int b = total - a;
        Matrix fa = chain_dual_basis(a), fb = chain_dual_basis(b);
        const auto &ka = chain_basis(a).keys;
        const auto &kb = chain_basis(b).keys;
        for (std::size_t i = 0; i < ka.size(); ++i)
          for (std::size_t j = 0; j < kb.size(); ++j) {
            ChainKey joined = ka[i];
            joined.insert(joined.end(), kb[j].begin(), kb[j].end());
            if (functional_product(fa[i], a, fb[j], b) != whole[position.at(joined)])
              return chain_key_str(ka[i]) + " | " + chain_key_str(kb[j]);
          }
      }
    }
    return "";
  });
}

// ---------------------------------------------------------------------------

std::string comodule_roundtrip(const PrimitiveMatrix &p) {
  StructureMatrix q = build_comodule(p);
  if (!verify_coassociative(q))
    return "not coassociative";
  if (!(extract_family(q) == p))
    return "extract differs";
  if (!(extract_family_by_projection(q) == p))
    return "projection differs";
  Flag fl = flag(q);
  for (std::size_t k = 1; k < fl.dims.size(); ++k)
    if (fl.dims[k] <= fl.dims[k - 1])
      return "flag not increasing";
  if (fl.dims.empty() || fl.dims.back() != q.dim())
    return "flag incomplete";
  if (auto type = is_reduced(p); type && *type != fl.type)
    return "reduced type differs from flag type";
  return "";
}

PrimitiveMatrix worked_example() {
  AlgebraElement l1 = ladder(1);
  AlgebraElement w2 = primitive_basis(2).elements[0];
  AlgebraElement w3 = primitive_basis(3).elements[0];
  PrimitiveMatrix p(5);
  set_family_entry(p, 1, 1, l1);
  set_family_entry(p, 1, 2, w2);
  set_family_entry(p, 1, 3, w3);
  set_family_entry(p, 1, 4, l1 + w3);
  set_family_entry(p, 2, 3, l1);
  set_family_entry(p, 3, 3, w2);
  set_family_entry(p, 2, 4, w2);
  set_family_entry(p, 3, 4, l1);
  return p;
}

void comodule_suite(Runner &check, int n, Rng &rng) {
  int size = std::min(n, 4);
  check("random families roundtrip", [&]() -> std::string {
    for (int trial = 0; trial < 100; ++trial) {
      int dim = 1 + static_cast<int>(rng() % size);
      PrimitiveMatrix p = random_family(rng, dim, 3);
      std::string r = comodule_roundtrip(p);
      if (!r.empty())
        return "trial " + std::to_string(trial) + ": " + r;
    }
    return "";
  });
  check("worked example type", [&]() -> std::string {
    PrimitiveMatrix p = worked_example();
    auto type = is_reduced(p);
    if (!type || *type != std::vector<int>{1, 2, 2})
      return "is_reduced";
    if (flag(build_comodule(p)).type != std::vector<int>{1, 2, 2})
      return "flag";
    return comodule_roundtrip(p);
  });
  check("small types", [&]() -> std::string {
    PrimitiveMatrix two(2);
    set_family_entry(two, 1, 1, ladder(1));
    if (flag(build_comodule(two)).type != std::vector<int>{1, 1})
      return "(1,1)";
    if (flag(build_comodule(PrimitiveMatrix(3))).type != std::vector<int>{3})
      return "(3)";
    return "";
  });
  check("conjugation", [&]() -> std::string {
    for (int trial = 0; trial < 20; ++trial) {
      PrimitiveMatrix p = random_family(rng, 1 + static_cast<int>(rng() % size), 3);
      auto type = is_reduced(p);
      if (!type)
        continue;
      int dim = p.dim();
      Matrix g = identity_matrix(dim);
      int start = 0;
      for (int block : *type) {
        for (int r = start; r < start + block; ++r) {
          g[r][r] = random_coefficient(rng);
          for (int c = start + block; c < dim; ++c)
            if (rng() % 2)
              g[r][c] = random_coefficient(rng);
        }
        start += block;
      }
      PrimitiveMatrix p2 = act(g, p);
      if (!conjugate_check(g, p, p2))
        return "conjugate_check";
      if (flag(build_comodule(p2)).type != flag(build_comodule(p)).type)
        return "types differ";
    }
    return "";
  });
}

// ---------------------------------------------------------------------------

void morphisms_suite(Runner &check, int n, Rng &rng) {
  check("leading term of products", [&]() -> std::string {
    std::vector<ChainKey> keys{{}};
    for (int len = 1; len < std::min(n, 4); ++len) {
      std::vector<ChainKey> next;
      for (const auto &k : keys)
        for (PrimKey p : {PrimKey{1, 0}, PrimKey{2, 0}}) {
          ChainKey e = k;
          e.push_back(p);
          next.push_back(e);
        }
      keys.insert(keys.end(), next.begin(), next.end());
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    }
    for (const auto &a : keys)
      for (const auto &b : keys)
        if (!a.empty() && !b.empty() && static_cast<int>(a.size() + b.size()) <= std::min(n, 4) &&
            !leading_term_check(a, b))
          return chain_key_str(a) + " * " + chain_key_str(b);
    return "";
  });
  check("shuffle algebra", [&]() -> std::string {
    std::vector<ChainKey> keys = chain_keys_up_to(std::min(n, 3));
    for (const auto &a : keys)
      for (const auto &b : keys) {
        GrElement ga{{a, 1}}, gb{{b, 1}};
        if (shuffle_product(ga, gb) != shuffle_product(gb, ga))
          return "commutativity";
        for (const auto &c : keys) {
          if (a.size() + b.size() + c.size() > 5)
            continue;
          GrElement gc{{c, 1}};
          if (shuffle_product(shuffle_product(ga, gb), gc) !=
              shuffle_product(ga, shuffle_product(gb, gc)))
            return "associativity";
        }
      }
    return "";
  });
  check("gr coproduct is the transported coproduct", [&]() -> std::string {
    for (const auto &k : chain_keys_up_to(n))
      if (!(gr_tensor_to_element(gr_coproduct(GrElement{{k, 1}})) == coproduct(chain_value(k))))
        return chain_key_str(k);
    return "";
  });
  check("star is associative and commutative", [&]() -> std::string {
    for (int trial = 0; trial < 10; ++trial) {
      AlgebraElement a = random_element(rng, 2, 2), b = random_element(rng, 2, 2);
      AlgebraElement c = random_element(rng, std::max(1, n - 4), 2);
      if (star(a, b) != star(b, a))
        return "commutativity";
      if (star(star(a, b), c) != star(a, star(b, c)))
        return "associativity";
    }
    return "";
  });
  check("family endomorphisms", [&]() -> std::string {
    for (int trial = 0; trial < 3; ++trial) {
      TreeFamily family = random_tree_family(rng, n);
      FamilyEndomorphism phi(family, n);
      ForestMap f = [&](const Forest &g) { return phi(g); };
      if (!is_bialgebra_morphism(f, n))
        return "not a morphism";
      for (const auto &g : forests_up_to(n))
        if (phi(antipode(g)) != antipode(phi(g)))
          return "antipode on " + g.str();
      if (recover_family(f, n) != family)
        return "recover";
    }
    return "";
  });
  check("composition of u-families", [&]() -> std::string {
    for (int trial = 0; trial < 5; ++trial) {
      UFamily u = random_u1(rng, n), v = random_u1(rng, n);
      UFamily uv = compose(u, v);
      if (!is_invertible(uv) || !weights_compatible(uv))
        return "composite";
      for (const auto &k : chain_keys_up_to(n)) {
        GrElement x{{k, 1}};
        if (phi_u(u, phi_u(v, x)) != phi_u(uv, x))
          return chain_key_str(k);
      }
    }
    return "";
  });
  check("bialgebra extension", [&]() -> std::string {
    UFamily u = extend_to_bialgebra(random_u1(rng, n));
    std::vector<ChainKey> keys = chain_keys_up_to(n);
    for (const auto &a : keys)
      for (const auto &b : keys) {
        if (chain_weight(a) + chain_weight(b) > n)
          continue;
        GrElement ga{{a, 1}}, gb{{b, 1}};
        if (phi_u(u, shuffle_product(ga, gb)) != shuffle_product(phi_u(u, ga), phi_u(u, gb)))
          return chain_key_str(a) + " * " + chain_key_str(b);
      }
    return "";
  });
  check("xi isomorphism", [&]() -> std::string {
    XiReport r = xi_isomorphism(std::min(n, kXiMaxWeight)).verify();
    if (!r.weight_preserved)
      return "weight";
    if (!r.deg_p_preserved)
      return "deg_p";
    if (!r.coproduct_compatible)
      return "coproduct";
    if (!r.multiplicative)
      return "multiplicative";
    if (!r.fixes_primitives)
      return "primitives";
    if (!r.invertible)
      return "invertible";
    return "";
  });
}

// ---------------------------------------------------------------------------

const char *kRenormalizedL3 =
    "x_{[[[]]]}(c) - [x_{[]}(c)]x_{[[]]}(c) - [x_{[[]]}(c)]x_{[]}(c) + "
    "[x_{[]}(c) x_{[]}(c)]x_{[]}(c) - [x_{[[[]]]}(c)] + [[x_{[]}(c)]x_{[[]]}(c)] + "
    "[[x_{[[]]}(c)]x_{[]}(c)] - [[x_{[]}(c) x_{[]}(c)]x_{[]}(c)]";

void renorm_suite(Runner &check, int n) {
  check("ladder golden", [&]() -> std::string {
    std::string got = renormalized(ladder(3)).str();
    return got == kRenormalizedL3 ? "" : got;
  });
  check("subtree comodules", [&]() -> std::string {
    for (auto t : trees_up_to(n)) {
      SubtreeComodule c = subtree_comodule(t);
      if (c.trunks.back() != t || !verify_coassociative(c.q) || !(build_comodule(c.p) == c.q))
        return t.str();
    }
    return "";
  });
  check("counterterm coefficients follow the antipode", [&]() -> std::string {
    for (auto t : trees_up_to(n)) {
      SubtreeComodule c = subtree_comodule(t);
      int top = static_cast<int>(c.trunks.size()) - 1;
      RenormExpression expected;
      for (int j = 0; j <= top; ++j) {
        AlgebraElement s = antipode(c.q.at(top, j));
        for (const auto &[f, coef] : s.terms()) {
          Monomial m = forest_bracket(f);
          m.factors.push_back(symbol_factor(c.trunks[j]));
          expected.add({coef, m});
        }
      }
      if (!(counterterm(t) == expected))
        return t.str();
    }
    return "";
  });
  check("renormalized subtracts its bracket", [&]() -> std::string {
    for (auto t : trees_up_to(n)) {
      RenormExpression r = renormalized(t);
      if (!(r.bracketed() == RenormExpression()))
        return t.str();
    }
    return "";
  });
}

// ---------------------------------------------------------------------------

void roundtrip_suite(Runner &check, int n, Rng &rng) {
  check("trees", [&]() -> std::string {
    for (auto t : trees_up_to(n))
      if (RootedTree::parse(t.str()) != t)
        return t.str();
    return "";
  });
  check("elements", [&]() -> std::string {
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement x = random_element(rng, n, 5);
      if (AlgebraElement::parse(x.str()) != x)
        return x.str();
    }
    return "";
  });
  check("tensors", [&]() -> std::string {
    for (int trial = 0; trial < 30; ++trial) {
      TensorElement t = coproduct(random_element(rng, n, 3));
      if (!(TensorElement::parse(t.str(), 2) == t))
        return t.str();
    }
    return "";
  });
  check("matrix records", [&]() -> std::string {
    for (int trial = 0; trial < 20; ++trial) {
      PrimitiveMatrix p = random_family(rng, 1 + static_cast<int>(rng() % 4), 3);
      if (!(matrix_from_json(Json::parse(matrix_to_json(p, MatrixKind::Primitive).dump())).matrix == p))
        return "primitive";
      StructureMatrix q = build_comodule(p);
      if (!(matrix_from_json(Json::parse(matrix_to_json(q, MatrixKind::Structure).dump())).matrix == q))
        return "structure";
    }
    return "";
  });
  check("family records", [&]() -> std::string {
    TreeFamily f = random_tree_family(rng, std::min(n, 4));
    return family_from_json(Json::parse(family_to_json(f).dump())) == f ? "" : "family";
  });
}

} // namespace

SuiteReport run_suite(const std::string &suite, int max_weight, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  SuiteReport report;
  report.suite = suite;
  report.seed = seed;
  report.max_weight = max_weight > 0 ? max_weight : default_max_weight(suite);
  Rng rng(seed);
  Runner check(report);
  int n = report.max_weight;
  if (suite == "hopf-axioms")
    hopf_suite(check, n);
  else if (suite == "growth")
    growth_suite(check, n, rng);
  else if (suite == "primitives")
    primitives_suite(check, n);
  else if (suite == "tables")
    tables_suite(check, n);
  else if (suite == "lie")
    lie_suite(check, n, rng);
  else if (suite == "comodule")
    comodule_suite(check, n, rng);
  else if (suite == "morphisms")
    morphisms_suite(check, n, rng);
  else if (suite == "renorm")
    renorm_suite(check, n);
  else if (suite == "roundtrip")
    roundtrip_suite(check, n, rng);
  else {
    for (const auto &name : suite_names()) {
      if (name == "all")
        continue;
      int w = default_max_weight(name);
      if (max_weight > 0)
        w = std::min(w, max_weight);
      SuiteReport sub = run_suite(name, w, seed);
      for (auto &c : sub.checks) {
        c.name = name + ": " + c.name;
        report.checks.push_back(std::move(c));
      }
    }
  }
  return report;
}

} // namespace treehopf
