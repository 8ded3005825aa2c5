#include <doctest.h>

#include "oracles.hpp"
#include "treehopf/hopf.hpp"
#include "treehopf/lie.hpp"
#include "treehopf/primitives.hpp"
#include "treehopf/sampling.hpp"

using namespace treehopf;

namespace {

RootedTree tr(const char *s) { return RootedTree::parse(s); }

std::vector<RootedTree> trees_up_to(int n) {
  std::vector<RootedTree> out;
  for (int w = 1; w <= n; ++w)
    for (auto t : enumerate_trees(w))
      out.push_back(t);
  return out;
}

} // namespace

TEST_CASE("elementary cut counts") {
  CHECK(n_count(tr("[]"), tr("[]"), tr("[[]]")) == 1);
  CHECK(n_count(tr("[]"), tr("[[]]"), tr("[[[]]]")) == 1);
  CHECK(n_count(tr("[]"), tr("[[]]"), tr("[[][]]")) == 2);
  CHECK(n_count(tr("[[]]"), tr("[]"), tr("[[][]]")) == 0);
}

TEST_CASE("symmetry factors") {
  for (auto t : trees_up_to(7))
    CHECK(symmetry_factor(t) == oracle::symmetry(t.str()));
}

TEST_CASE("cut counts against grafting") {
  // n(t1,t2;t) sym(t1) sym(t2) / sym(t), summed over t, is weight(t2) (t1 T t2)
  for (auto a : trees_up_to(3))
    for (auto b : trees_up_to(3)) {
      AlgebraElement lhs;
      for (auto t : enumerate_trees(a.weight() + b.weight())) {
        Rational c(Integer(n_count(a, b, t)) * symmetry_factor(a) * symmetry_factor(b),
                   symmetry_factor(t));
        c.canonicalize();
        lhs += c * AlgebraElement(t);
      }
      CHECK(lhs == Rational(b.weight()) * graft(AlgebraElement(a), AlgebraElement(b)));
    }
}

TEST_CASE("brackets") {
  CHECK(bracket(tr("[]"), tr("[]")).is_zero());
  CHECK(bracket(tr("[]"), tr("[[]]")).str() == "2 [[][]]");
  for (auto a : trees_up_to(4))
    for (auto b : trees_up_to(4)) {
      CHECK(bracket(a, b) == Rational(-1) * bracket(b, a));
      CHECK(bracket(a, b) == bracket_by_grafting(a, b));
    }
}

TEST_CASE("Jacobi identity") {
  auto ts = trees_up_to(5);
  for (auto a : ts)
    for (auto b : ts)
      for (auto c : ts) {
        if (a.weight() + b.weight() + c.weight() > 7)
          continue;
        LieElement sum = bracket(LieElement(a), bracket(b, c)) + bracket(LieElement(b), bracket(c, a)) +
                         bracket(LieElement(c), bracket(a, b));
        CHECK(sum.is_zero());
      }
}

TEST_CASE("words") {
  Word w = parse_word("[].[[]].[]");
  CHECK(w.size() == 3);
  CHECK(word_str(w) == "[].[[]].[]");
  CHECK(word_weight(w) == 4);
  CHECK(parse_word("1").empty());
  CHECK_THROWS_AS((void)parse_word("[].[x]"), ParseError);
}

TEST_CASE("pairing values") {
  AlgebraElement l1 = AlgebraElement::parse("[]");
  CHECK(pair(parse_word("[]"), l1) == 1);
  CHECK(pair(parse_word("[].[]"), l1 * l1) == 2);
  CHECK(pair(Word{}, AlgebraElement::parse("3 + []")) == 3);
  CHECK(pair(parse_word("[[]]"), AlgebraElement::parse("[[]] + 5 [] []")) == 1);
  CHECK(pair(parse_word("[].[]"), AlgebraElement::parse("[[]]")) == 1);
  CHECK(pair_split(parse_word("[]"), parse_word("[]"), AlgebraElement::parse("[[]]")) == 1);
}

TEST_CASE("pairing is graded") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      if (a == b)
        continue;
      for (auto t : trees_up_to(a))
        if (t.weight() == a)
          for (const auto &f : enumerate_forests(b))
            CHECK(pair(Word{t}, AlgebraElement(f)) == 0);
    }
}

TEST_CASE("pairing does not depend on the split order") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraElement x = random_homogeneous(rng, 5, 4);
    Word w{tr("[]"), tr("[[]]"), tr("[[]]")};
    CHECK(pair(w, x) == pair_right(w, x));
  }
}

TEST_CASE("words of length two vanish on primitives") {
  for (int n = 2; n <= 6; ++n)
    for (const auto &p : primitive_basis(n).elements)
      for (int a = 1; a < n; ++a)
        for (auto s : enumerate_trees(a))
          for (auto t : enumerate_trees(n - a))
            CHECK(pair(Word{s, t}, p) == 0);
}

TEST_CASE("dual basis concatenation") {
  for (int total = 2; total <= 4; ++total) {
    Matrix whole = chain_dual_basis(total);
    const auto &keys = chain_basis(total).keys;
    for (int a = 1; a < total; ++a) {
      int b = total - a;
      Matrix fa = chain_dual_basis(a), fb = chain_dual_basis(b);
      for (std::size_t i = 0; i < chain_basis(a).keys.size(); ++i)
        for (std::size_t j = 0; j < chain_basis(b).keys.size(); ++j) {
          ChainKey joined = chain_basis(a).keys[i];
          for (const auto &k : chain_basis(b).keys[j])
            joined.push_back(k);
          auto pos = std::find(keys.begin(), keys.end(), joined) - keys.begin();
          CHECK(functional_product(fa[i], a, fb[j], b) == whole[pos]);
        }
    }
  }
}
