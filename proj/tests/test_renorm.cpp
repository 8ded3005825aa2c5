#include <doctest.h>

#include "treehopf/hopf.hpp"
#include "treehopf/renorm.hpp"

using namespace treehopf;

TEST_CASE("subtree comodule of the ladder") {
  SubtreeComodule c = subtree_comodule(ladder(3));
  REQUIRE(c.trunks.size() == 3);
  CHECK(c.trunks[0] == ladder(1));
  CHECK(c.trunks[2] == ladder(3));
  CHECK(c.q.at(2, 2) == AlgebraElement::scalar(1));
  CHECK(c.q.at(2, 1) == AlgebraElement(ladder(1)));
  CHECK(c.q.at(2, 0) == AlgebraElement(ladder(2)));
  CHECK(verify_coassociative(c.q));
}

TEST_CASE("subtree comodules are comodules") {
  for (int n = 1; n <= 5; ++n)
    for (auto t : enumerate_trees(n)) {
      SubtreeComodule c = subtree_comodule(t);
      CHECK(c.trunks.back() == t);
      CHECK(verify_coassociative(c.q));
      CHECK(build_comodule(c.p) == c.q);
    }
}

TEST_CASE("counterterms") {
  CHECK(counterterm(ladder(1)).str() == "x_{[]}(c)");
  CHECK(counterterm(ladder(3)).str() ==
        "x_{[[[]]]}(c) - [x_{[]}(c)]x_{[[]]}(c) - [x_{[[]]}(c)]x_{[]}(c) + "
        "[x_{[]}(c) x_{[]}(c)]x_{[]}(c)");
  CHECK(counterterm(RootedTree::parse("[[][]]")).str() ==
        "x_{[[][]]}(c) - 2 [x_{[]}(c)]x_{[[]]}(c) + [x_{[]}(c) x_{[]}(c)]x_{[]}(c)");
}

TEST_CASE("renormalized expressions") {
  CHECK(renormalized(ladder(1)).str() == "x_{[]}(c) - [x_{[]}(c)]");
  CHECK(renormalized(ladder(3)).str() ==
        "x_{[[[]]]}(c) - [x_{[]}(c)]x_{[[]]}(c) - [x_{[[]]}(c)]x_{[]}(c) + "
        "[x_{[]}(c) x_{[]}(c)]x_{[]}(c) - [x_{[[[]]]}(c)] + [[x_{[]}(c)]x_{[[]]}(c)] + "
        "[[x_{[[]]}(c)]x_{[]}(c)] - [[x_{[]}(c) x_{[]}(c)]x_{[]}(c)]");
}

TEST_CASE("renormalized expressions have no bracket part") {
  for (int n = 1; n <= 5; ++n)
    for (auto t : enumerate_trees(n))
      CHECK(renormalized(t).bracketed() == RenormExpression());
}

TEST_CASE("expression equality merges terms") {
  RenormExpression a, b;
  a.add({1, Monomial{{symbol_factor(ladder(1)), symbol_factor(ladder(2))}}});
  a.add({1, Monomial{{symbol_factor(ladder(2)), symbol_factor(ladder(1))}}});
  b.add({2, Monomial{{symbol_factor(ladder(1)), symbol_factor(ladder(2))}}});
  CHECK(a == b);
  CHECK(RenormExpression().str() == "0");
}
