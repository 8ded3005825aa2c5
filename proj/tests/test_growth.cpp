#include <doctest.h>

#include "oracles.hpp"
#include "treehopf/growth.hpp"
#include "treehopf/hopf.hpp"
#include "treehopf/primitives.hpp"
#include "treehopf/sampling.hpp"

using namespace treehopf;

namespace {

AlgebraElement el(const char *s) { return AlgebraElement::parse(s); }

} // namespace

TEST_CASE("grafting examples") {
  CHECK(graft(el("[]"), el("[]")) == el("[[]]"));
  CHECK(graft(el("[]"), el("[[]]")) == el("1/2 [[][]] + 1/2 [[[]]]"));
  CHECK(graft(el("[[]]"), el("[[][]]")) == el("2/3 [[[[]]][]] + 1/3 [[[]][][]]"));
  CHECK(graft(el("[] []"), el("[[[]]]")) ==
        el("1/3 [[[]][][]] + 1/3 [[[][][]]] + 1/3 [[[[][]]]]"));
  CHECK(graft(el("[]"), el("[] []")) == el("[[]] []"));
}

TEST_CASE("grafting with the unit") {
  CHECK(graft(el("[[]]"), el("1")).is_zero());
  CHECK(graft(el("1"), el("[[]] []")) == el("[[]] []"));
}

TEST_CASE("every attachment keeps the weight") {
  auto a = attachments(Forest::parse("[] []"), RootedTree::parse("[[]]"));
  CHECK(a.size() == 2);
  CHECK(a[0].str() == "[[][][]]");
  CHECK(a[1].str() == "[[[][]]]");
}

TEST_CASE("chains") {
  CHECK(chain({el("[]"), el("[]")}) == el("[[]]"));
  CHECK(chain({el("[]"), el("[]"), el("[]")}) == el("[[[]]]"));
  CHECK_THROWS((void)chain({el("[[]]"), el("[]")}));
  CHECK(chain_unchecked({el("[[]]"), el("[]")}) == el("[[[]]]"));
}

TEST_CASE("projection onto primitives") {
  AlgebraElement l1 = el("[]"), l2 = el("[[]]"), l3 = el("[[[]]]");
  CHECK(pi1(l1) == l1);
  CHECK(pi1(l1 * l1) == l1 * l1 - Rational(2) * l2);
  CHECK(pi1(l1 * l1 * l1) == l1 * l1 * l1 - Rational(3) * (l1 * l2) + Rational(3) * l3);
  CHECK(pi1(l2).is_zero());
  CHECK(pi1(AlgebraElement::scalar(1)).is_zero());
}

TEST_CASE("trees of weight at least two project to zero") {
  for (int n = 2; n <= 6; ++n)
    for (auto t : enumerate_trees(n))
      CHECK(pi1(Forest(t)).is_zero());
}

TEST_CASE("pi1 is idempotent and lands in the primitives") {
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    AlgebraElement x = random_element(rng, 6, 3);
    AlgebraElement p = pi1(x);
    CHECK(is_primitive(p));
    CHECK(pi1(p) == p);
  }
}

TEST_CASE("products of two primitives") {
  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    int a = 1 + static_cast<int>(rng() % 4), b = 1 + static_cast<int>(rng() % 4);
    AlgebraElement p = random_primitive(rng, a), q = random_primitive(rng, b);
    CHECK(pi1(p * q) == p * q - graft(p, q) - graft(q, p));
  }
}

TEST_CASE("grafting coproduct identity") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraElement x = random_homogeneous(rng, 1 + static_cast<int>(rng() % 4), 3);
    AlgebraElement y = random_primitive(rng, 1 + static_cast<int>(rng() % 3));
    TensorElement expected = TensorElement::tensor({x, y});
    expected += apply_to_slot(reduced_coproduct(x),
                              [&](const Forest &g) { return graft(AlgebraElement(g), y); }, 1);
    CHECK(reduced_coproduct(graft(x, y)) == expected);
  }
}

TEST_CASE("iterated coproducts invert chains") {
  Rng rng(13);
  for (int i = 1; i <= 4; ++i)
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<AlgebraElement> ps;
      for (int k = 0; k < i; ++k)
        ps.push_back(random_primitive(rng, 1 + static_cast<int>(rng() % 2)));
      AlgebraElement c = chain(ps);
      CHECK(iterated_reduced(c, i - 1) == TensorElement::tensor(ps));
      CHECK(iterated_reduced(c, i).is_zero());
    }
}

TEST_CASE("primitive filtration degree") {
  CHECK(deg_p(el("[]")) == 1);
  CHECK(deg_p(el("[] []")) == 2);
  CHECK(deg_p(el("1")) == 0);
  for (int n = 1; n <= 8; ++n)
    CHECK(deg_p(AlgebraElement(ladder(n))) == n);
  CHECK_THROWS((void)deg_p(AlgebraElement()));
}

TEST_CASE("chain bases are bases") {
  std::vector<int> expected{1, 2, 4, 9, 20, 48, 115};
  for (int n = 1; n <= 7; ++n) {
    const ChainBasis &b = chain_basis(n);
    CHECK(static_cast<int>(b.keys.size()) == expected[n - 1]);
    std::vector<std::vector<mpq_class>> rows;
    for (const auto &v : b.values) {
      std::vector<mpq_class> row(enumerate_forests(n).size());
      for (const auto &[f, c] : v.terms())
        row[forest_position(f)] = c;
      rows.push_back(row);
    }
    CHECK(oracle::rank(rows) == expected[n - 1]);
  }
}

TEST_CASE("decomposition") {
  Decomposition d = decompose(el("[[]]"));
  CHECK(d.scalar == 0);
  REQUIRE(d.components.size() == 1);
  CHECK(d.components.at(2) == el("[[]]"));
  d = decompose(el("1 + []"));
  CHECK(d.scalar == 1);
  CHECK(d.components.at(1) == el("[]"));
  CHECK(pi_j(el("[[]]"), 1).is_zero());
  CHECK(pi_j(el("[[]]"), 2) == el("[[]]"));
  AlgebraElement p = el("[] [] - 2 [[]]");
  CHECK(pi_j(p, 1) == p);
}

TEST_CASE("decomposition agrees with the degree") {
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    AlgebraElement x = random_element(rng, 6, 4);
    if (x.is_zero())
      continue;
    Decomposition d = decompose(x);
    AlgebraElement sum = AlgebraElement::scalar(d.scalar);
    int top = 0;
    for (const auto &[j, c] : d.components) {
      sum += c;
      top = j;
    }
    CHECK(sum == x);
    CHECK(deg_p(x) == top);
  }
}

TEST_CASE("chain keys render top first") {
  CHECK(chain_key_str({{2, 0}, {1, 0}}) == "p2.0 T p1.0");
  CHECK(chain_weight({{2, 0}, {1, 0}}) == 3);
  CHECK(chain_value({{1, 0}, {1, 0}}) == el("[[]]"));
}
