#include <doctest.h>

#include "oracles.hpp"
#include "treehopf/hopf.hpp"
#include "treehopf/sampling.hpp"

using namespace treehopf;

TEST_CASE("coproduct matches edge subsets") {
  for (int n = 1; n <= 7; ++n)
    for (auto t : enumerate_trees(n)) {
      std::map<std::pair<std::string, std::string>, int> ours;
      TensorElement d = coproduct(t);
      for (const auto &[key, c] : d.terms()) {
        CHECK(c.get_den() == 1);
        ours[{key[0].str(), key[1].str()}] = static_cast<int>(c.get_num().get_si());
      }
      CHECK(ours == oracle::coproduct(t.str()));
    }
}

TEST_CASE("ladder coproduct") {
  CHECK(coproduct(AlgebraElement::parse("[[]]")).str() == "1 (x) [[]] + [[]] (x) 1 + [] (x) []");
  CHECK(coproduct(AlgebraElement::scalar(3)).str() == "3 1 (x) 1");
}

TEST_CASE("coproduct of the four-vertex tree with a fork on top") {
  CHECK(coproduct(RootedTree::parse("[[[][]]]")).str() ==
        "1 (x) [[[][]]] + [[[][]]] (x) 1 + [[][]] (x) [] + 2 [] (x) [[[]]] + [] [] (x) [[]]");
}

TEST_CASE("antipode of the four-vertex tree with a fork on top") {
  CHECK(antipode(Forest::parse("[[[][]]]")).str() ==
        "-1 [[[][]]] + 2 [[[]]] [] + [[][]] [] + -3 [[]] [] [] + [] [] [] []");
}

TEST_CASE("small antipodes") {
  CHECK(antipode(Forest::parse("[]")).str() == "-1 []");
  CHECK(antipode(Forest::parse("[[]]")) == AlgebraElement::parse("-[[]] + [] []"));
  CHECK(antipode(Forest()) == AlgebraElement::scalar(1));
}

TEST_CASE("antipode is the convolution inverse on random elements") {
  Rng rng(5);
  auto s = [](const Forest &g) { return antipode(g); };
  for (int trial = 0; trial < 40; ++trial) {
    AlgebraElement x = random_element(rng, 6, 4);
    AlgebraElement e = AlgebraElement::scalar(counit(x));
    CHECK(multiply_out(apply_to_slot(coproduct(x), s, 0)) == e);
    CHECK(multiply_out(apply_to_slot(coproduct(x), s, 1)) == e);
    CHECK(antipode(x) == antipode_recursive(x));
  }
}

TEST_CASE("coassociativity on random elements") {
  Rng rng(6);
  auto delta = [](const Forest &g) { return coproduct(g); };
  for (int trial = 0; trial < 30; ++trial) {
    AlgebraElement x = random_element(rng, 6, 3);
    TensorElement d = coproduct(x);
    CHECK(expand_slot(d, delta, 0) == expand_slot(d, delta, 1));
  }
}

TEST_CASE("B+ is a Hochschild cocycle") {
  for (int n = 0; n <= 5; ++n)
    for (const auto &f : enumerate_forests(n)) {
      TensorElement rhs = TensorElement::tensor({AlgebraElement(b_plus(f)), AlgebraElement::scalar(1)});
      rhs += apply_to_slot(coproduct(f), [](const Forest &g) { return b_plus(AlgebraElement(g)); }, 1);
      CHECK(coproduct(b_plus(f)) == rhs);
    }
}

TEST_CASE("reduced and iterated coproducts") {
  AlgebraElement l3 = AlgebraElement::parse("[[[]]]");
  CHECK(reduced_coproduct(l3).str() == "[[]] (x) [] + [] (x) [[]]");
  CHECK(iterated_reduced(l3, 2).str() == "[] (x) [] (x) []");
  CHECK(iterated_reduced(l3, 3).is_zero());
  CHECK(is_primitive(AlgebraElement::parse("[]")));
  CHECK(is_primitive(AlgebraElement::parse("[] [] - 2 [[]]")));
  CHECK_FALSE(is_primitive(AlgebraElement::parse("[[]]")));
  CHECK(counit(AlgebraElement::parse("3 + [[]]")) == 3);
}
