#include <doctest.h>

#include "treehopf/hopf.hpp"
#include "treehopf/morphisms.hpp"
#include "treehopf/primitives.hpp"
#include "treehopf/sampling.hpp"

using namespace treehopf;

namespace {

AlgebraElement el(const char *s) { return AlgebraElement::parse(s); }
const ChainKey kA{{1, 0}};
const ChainKey kB{{2, 0}};

std::vector<Forest> forests_up_to(int n) {
  std::vector<Forest> out;
  for (int w = 0; w <= n; ++w)
    for (const auto &f : enumerate_forests(w))
      out.push_back(f);
  return out;
}

} // namespace

TEST_CASE("shuffles") {
  GrElement s = shuffle_product({{kA, 1}}, {{kB, 1}});
  CHECK(s == GrElement{{{{1, 0}, {2, 0}}, 1}, {{{2, 0}, {1, 0}}, 1}});
  CHECK(shuffle_product({{kA, 1}}, {{kA, 1}}) == GrElement{{{{1, 0}, {1, 0}}, 2}});
  CHECK(shuffle_product(gr_unit(), {{kB, 3}}) == GrElement{{kB, 3}});
}

TEST_CASE("star product") {
  CHECK(star(el("[]"), el("[]")) == el("2 [[]]"));
  CHECK(star(el("1"), el("[[]] []")) == el("[[]] []"));
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraElement a = random_element(rng, 3, 2), b = random_element(rng, 3, 2);
    CHECK(star(a, b) == star(b, a));
  }
}

TEST_CASE("gr coalgebra") {
  ChainKey ab{{1, 0}, {2, 0}};
  GrTensor d = gr_coproduct({{ab, 1}});
  CHECK(d.size() == 3);
  CHECK(d.at({kA, kB}) == 1);
  CHECK(gr_antipode({{ab, 1}}) == GrElement{{{{2, 0}, {1, 0}}, 1}});
  CHECK(gr_counit({{ChainKey{}, 4}, {kA, 1}}) == 4);
  for (int w = 1; w <= 4; ++w)
    for (const auto &k : chain_basis(w).keys)
      CHECK(gr_tensor_to_element(gr_coproduct({{k, 1}})) == coproduct(chain_value(k)));
}

TEST_CASE("gr coordinates") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraElement x = random_element(rng, 5, 4);
    CHECK(from_gr(to_gr(x)) == x);
  }
  CHECK(to_gr(el("[[]]")) == GrElement{{{{1, 0}, {1, 0}}, 1}});
}

TEST_CASE("leading terms of products are shuffles") {
  std::vector<ChainKey> keys{kA, kB, {{1, 0}, {1, 0}}, {{1, 0}, {2, 0}}, {{2, 0}, {1, 0}}};
  for (const auto &a : keys)
    for (const auto &b : keys)
      if (a.size() + b.size() <= 4)
        CHECK(leading_term_check(a, b));
}

TEST_CASE("the family of the leaf gives the identity") {
  FamilyEndomorphism phi({{RootedTree(), el("[]")}}, 5);
  for (const auto &f : forests_up_to(5))
    CHECK(phi(f) == AlgebraElement(f));
  CHECK_THROWS((void)phi(Forest::parse("[[[[[[]]]]]]")));
  TreeFamily rec = recover_family([&](const Forest &f) { return phi(f); }, 4);
  for (const auto &[t, p] : rec)
    CHECK(p == (t == RootedTree() ? el("[]") : AlgebraElement()));
}

TEST_CASE("family endomorphisms are bialgebra maps") {
  Rng rng(43);
  for (int trial = 0; trial < 3; ++trial) {
    TreeFamily family = random_tree_family(rng, 4);
    FamilyEndomorphism phi(family, 4);
    ForestMap f = [&](const Forest &g) { return phi(g); };
    CHECK(is_bialgebra_morphism(f, 4));
    for (const auto &g : forests_up_to(4))
      CHECK(phi(antipode(g)) == antipode(phi(g)));
    CHECK(recover_family(f, 4) == family);
  }
}

TEST_CASE("non-morphisms are detected") {
  ForestMap doubling = [](const Forest &g) { return Rational(2) * AlgebraElement(g); };
  CHECK_FALSE(is_bialgebra_morphism(doubling, 3));
  CHECK_THROWS((void)recover_family(doubling, 3));
  CHECK_THROWS((void)FamilyEndomorphism({{RootedTree(), el("[[]]")}}, 3));
}

TEST_CASE("u-families") {
  UFamily id = identity_ufamily(3, 4);
  CHECK(is_invertible(id));
  CHECK(weights_compatible(id));
  GrElement x{{{{1, 0}, {2, 0}}, 3}};
  CHECK(phi_u(id, x) == x);
  Rng rng(44);
  UFamily u = random_u1(rng, 4), v = random_u1(rng, 4);
  UFamily uv = compose(u, v);
  for (int w = 1; w <= 4; ++w)
    for (const auto &k : chain_basis(w).keys) {
      GrElement y{{k, 1}};
      CHECK(phi_u(u, phi_u(v, y)) == phi_u(uv, y));
    }
  CHECK_THROWS((void)phi_u(id, GrElement{{{{2, 0}, {2, 0}, {1, 0}}, 1}}));
  UFamily zero;
  zero.max_weight = 2;
  CHECK_FALSE(is_invertible(zero));
}

TEST_CASE("bialgebra extension") {
  Rng rng(45);
  UFamily u = extend_to_bialgebra(random_u1(rng, 4));
  for (int a = 1; a <= 3; ++a)
    for (const auto &ka : chain_basis(a).keys)
      for (int b = 1; a + b <= 4; ++b)
        for (const auto &kb : chain_basis(b).keys) {
          GrElement x{{ka, 1}}, y{{kb, 1}};
          CHECK(phi_u(u, shuffle_product(x, y)) == shuffle_product(phi_u(u, x), phi_u(u, y)));
        }
  UFamily id = extend_to_bialgebra(identity_ufamily(1, 4));
  for (const auto &k : chain_basis(4).keys)
    CHECK(phi_u(id, {{k, 1}}) == GrElement{{k, 1}});
}

TEST_CASE("xi isomorphism") {
  XiIsomorphism xi = xi_isomorphism(4);
  CHECK(xi(el("[]")) == el("[]"));
  CHECK(xi(el("[] []")) == el("2 [[]]"));
  for (int w = 1; w <= 4; ++w)
    for (const auto &p : primitive_basis(w).elements)
      CHECK(xi(p) == p);
  XiReport r = xi.verify();
  CHECK(r.weight_preserved);
  CHECK(r.deg_p_preserved);
  CHECK(r.coproduct_compatible);
  CHECK(r.multiplicative);
  CHECK(r.fixes_primitives);
  CHECK(r.invertible);
  CHECK(xi.matrix(1) == identity_matrix(1));
  CHECK_THROWS((void)xi_isomorphism(kXiMaxWeight + 1));
}
