// Acceptance criteria: one PASS/FAIL line each, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "treehopf/comodule.hpp"
#include "treehopf/growth.hpp"
#include "treehopf/hopf.hpp"
#include "treehopf/lie.hpp"
#include "treehopf/morphisms.hpp"
#include "treehopf/primitives.hpp"
#include "treehopf/renorm.hpp"
#include "treehopf/suites.hpp"

using namespace treehopf;

namespace {

struct Criterion {
  int id;
  std::string title;
  double seconds_limit; // 0 for no limit
  std::function<std::string()> run; // "" on success
};

AlgebraElement el(const char *s) { return AlgebraElement::parse(s); }

std::string failures(const SuiteReport &r, const std::vector<std::string> &only = {}) {
  std::string out;
  for (const auto &c : r.checks) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end())
      continue;
    if (!c.passed)
      out += (out.empty() ? "" : "; ") + c.name + ": " + c.detail;
  }
  return out;
}

std::vector<std::vector<mpq_class>> rows_of(const std::vector<AlgebraElement> &xs, int n) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto &x : xs) {
    std::vector<mpq_class> row(enumerate_forests(n).size());
    for (const auto &[f, c] : x.terms())
      row[forest_position(f)] = c;
    rows.push_back(row);
  }
  return rows;
}

std::string forest_table() {
  const auto &r = reference_forest_counts();
  for (int n = 1; n <= 29; ++n)
    if (count_forests(n) != r[n - 1])
      return "r_" + std::to_string(n) + " = " + count_forests(n).get_str();
  return "";
}

std::string primitive_table() {
  const auto &h = reference_primitive_counts();
  std::vector<Integer> r;
  for (int n = 1; n <= 29; ++n)
    r.push_back(count_forests(n));
  for (int n = 1; n <= 29; ++n)
    if (theta(n, r) != h[n - 1])
      return "h_" + std::to_string(n) + "1 = " + theta(n, r).get_str();
  return "";
}

std::string constructive_primitives() {
  const auto &h = reference_primitive_counts();
  for (int n = 1; n <= 8; ++n) {
    std::vector<AlgebraElement> images;
    for (const auto &f : enumerate_forests(n))
      images.push_back(pi1(f));
    int r = oracle::rank(rows_of(images, n));
    if (Integer(r) != h[n - 1])
      return "weight " + std::to_string(n) + ": rank " + std::to_string(r);
  }
  return "";
}

std::string bigrading() {
  DimensionTable t = dimension_table(12);
  for (int n = 1; n <= 7; ++n) {
    const ChainBasis &b = chain_basis(n);
    for (int k = 1; k <= n; ++k) {
      std::vector<AlgebraElement> values;
      for (std::size_t i = 0; i < b.keys.size(); ++i)
        if (static_cast<int>(b.keys[i].size()) == k)
          values.push_back(b.values[i]);
      if (Integer(oracle::rank(rows_of(values, n))) != t.h[n][k])
        return "h_{" + std::to_string(n) + "," + std::to_string(k) + "}";
    }
  }
  for (int n = 1; n <= 12; ++n) {
    Integer sum = 0;
    for (int k = 1; k <= n; ++k)
      sum += t.h[n][k];
    if (sum != t.r[n])
      return "sum at n = " + std::to_string(n);
  }
  return "";
}

std::string pi1_goldens() {
  AlgebraElement l1 = el("[]"), l2 = el("[[]]"), l3 = el("[[[]]]");
  if (pi1(l1) != l1)
    return "l1";
  if (pi1(l1 * l1) != l1 * l1 - Rational(2) * l2)
    return "l1^2";
  if (pi1(l1 * l1 * l1) != l1 * l1 * l1 - Rational(3) * (l1 * l2) + Rational(3) * l3)
    return "l1^3";
  return "";
}

std::string small_tree_goldens() {
  RootedTree t = RootedTree::parse("[[[][]]]");
  // six summands: T(x)1, l1(x)l3 twice, l1 l1(x)l2, cherry(x)l1, 1(x)T
  TensorElement d = coproduct(t);
  TensorElement expected = TensorElement::parse(
      "[[[][]]] (x) 1 + [] (x) [[[]]] + [] (x) [[[]]] + [] [] (x) [[]] + [[][]] (x) [] + 1 (x) [[[][]]]",
      2);
  if (!(d == expected))
    return "coproduct: " + d.str();
  AlgebraElement s = antipode(Forest(t));
  AlgebraElement s_expected = el("-[[[][]]] + [[[]]] [] + [[[]]] [] + [[][]] [] - [[]] [] [] - [[]] [] [] - "
                                 "[[]] [] [] + [] [] [] []");
  if (s != s_expected)
    return "antipode: " + s.str();
  Rational multiplicity = 0;
  for (const auto &[f, c] : s.terms())
    multiplicity += abs(c);
  if (multiplicity != 8)
    return "antipode term count";
  AlgebraElement g1 = graft(el("[[]]"), el("[[][]]"));
  if (g1 != el("1/3 [[[[]]][]] + 1/3 [[[[]]][]] + 1/3 [[[]][][]]"))
    return "graft 1: " + g1.str();
  AlgebraElement g2 = graft(el("[] []"), el("[[[]]]"));
  if (g2 != el("1/3 [[[]][][]] + 1/3 [[[][][]]] + 1/3 [[[[][]]]]"))
    return "graft 2: " + g2.str();
  AlgebraElement g3 = graft(el("[]"), el("[] []"));
  if (g3 != el("1/2 [[]] [] + 1/2 [] [[]]"))
    return "graft 3: " + g3.str();
  return "";
}

std::string ladder_primitives() {
  std::vector<AlgebraElement> ps;
  for (int i = 1; i <= 8; ++i) {
    ps.push_back(ladder_primitive(i));
    if (!is_primitive(ps.back()))
      return "P_" + std::to_string(i) + " not primitive";
    if (psi_substitute(i, ps) != AlgebraElement(ladder(i)))
      return "Psi_" + std::to_string(i);
  }
  return "";
}

std::string lie_suite() {
  std::string out = failures(run_suite("lie", 9, 1));
  return out;
}

std::string comodule_suite() {
  SuiteReport r = run_suite("comodule", 4, 2024);
  return failures(r, {"random families roundtrip", "worked example type", "small types"});
}

std::string morphism_suite() {
  SuiteReport r = run_suite("morphisms", 4, 2024);
  return failures(r, {"leading term of products", "family endomorphisms",
                      "composition of u-families", "xi isomorphism"});
}

std::string renorm_golden() {
  std::string got = renormalized(ladder(3)).str();
  const std::string expected =
      "x_{[[[]]]}(c) - [x_{[]}(c)]x_{[[]]}(c) - [x_{[[]]}(c)]x_{[]}(c) + "
      "[x_{[]}(c) x_{[]}(c)]x_{[]}(c) - [x_{[[[]]]}(c)] + [[x_{[]}(c)]x_{[[]]}(c)] + "
      "[[x_{[[]]}(c)]x_{[]}(c)] - [[x_{[]}(c) x_{[]}(c)]x_{[]}(c)]";
  if (got != expected)
    return got;
  if (renormalized(ladder(3)).terms().size() != 8)
    return "term count";
  return "";
}

} // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "forest counts r_n for n = 1..29", 1.0, forest_table},
      {2, "primitive counts h_{n,1} for n = 1..29", 1.0, primitive_table},
      {3, "rank of pi1 images equals h_{n,1} for n = 1..8", 60.0, constructive_primitives},
      {4, "bigraded dimensions against chain spans", 0, bigrading},
      {5, "pi1 of l1, l1^2, l1^3", 0, pi1_goldens},
      {6, "Hopf axioms on forests of weight <= 6", 120.0,
       [] { return failures(run_suite("hopf-axioms", 6, 1)); }},
      {7, "coproduct, antipode and grafting of small trees", 0, small_tree_goldens},
      {8, "ladder primitives and Psi_i for i <= 8", 0, ladder_primitives},
      {9, "Lie bracket and pairing suite", 0, lie_suite},
      {10, "comodule suite", 0, comodule_suite},
      {11, "gr and morphism suite", 300.0, morphism_suite},
      {12, "renormalized l3 golden", 0, renorm_golden},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception &e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && c.seconds_limit > 0 && seconds >= c.seconds_limit)
      detail = "took " + std::to_string(seconds) + " s";
    bool ok = detail.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
              << std::fixed << std::setprecision(2) << seconds << " s)";
    if (!ok)
      std::cout << " -- " << detail;
    std::cout << "\n";
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 12" : "ALL 12 PASSED") << "\n";
  return failed ? 1 : 0;
}
