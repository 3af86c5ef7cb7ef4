#include <doctest.h>

#include <algorithm>

#include "ortholat/builders.hpp"
#include "ortholat/modularity.hpp"

using namespace ortholat;

TEST_CASE("generator shapes and bounds") {
  CHECK(gen_pentagon().size() == 5);
  CHECK(gen_hexagon().size() == 6);
  CHECK(gen_boolean(3).size() == 8);
  CHECK(gen_horizontal_sum(1).size() == 4);
  CHECK(gen_horizontal_sum(6).size() == 14);
  CHECK(gen_section3_ortho().size() == 16);

  CHECK_THROWS_AS(gen_boolean(0), Error);
  CHECK_THROWS_AS(gen_boolean(13), Error);
  CHECK_THROWS_AS(gen_horizontal_sum(0), Error);
  CHECK_THROWS_AS(gen_horizontal_sum(65), Error);
}

TEST_CASE("horizontal sum names and involution") {
  OrthoLattice L2 = gen_horizontal_sum(2);
  const Lattice& L = L2.base();
  CHECK(L.names() == std::vector<std::string>{"0", "l1", "1-l1", "l2", "1-l2", "1"});
  CHECK(L2.perp(L.require_id("l1")) == L.require_id("1-l1"));
  CHECK(L2.perp(L.require_id("l2")) == L.require_id("1-l2"));
  // distinct middles meet at 0 and join at 1
  CHECK(L.meet(1, 3) == L.bottom());
  CHECK(L.join(1, 3) == L.top());
}

TEST_CASE("one middle pair is the 4-element boolean algebra") {
  CHECK(is_isomorphic(gen_horizontal_sum(1), gen_boolean(2)).has_value());
}

TEST_CASE("product of two 2-chains is the diamond") {
  OrthoLattice c = gen_boolean(1);
  OrthoLattice p = gen_product(c, c);
  CHECK(p.size() == 4);
  CHECK(is_isomorphic(p, gen_boolean(2)).has_value());
}

TEST_CASE("product names are componentwise tuples") {
  OrthoLattice p = gen_product(gen_boolean(1), gen_horizontal_sum(2));
  CHECK(p.size() == 12);
  const Lattice& L = p.base();
  CHECK(L.id_of("({1},l1)").has_value());
  Id e = L.require_id("({},l1)");
  CHECK(p.perp(e) == L.require_id("({1},1-l1)"));
}

TEST_CASE("product rejects oversized results and empty factor lists") {
  OrthoLattice a = gen_boolean(6);   // 64 elements
  OrthoLattice b = gen_boolean(7);   // 128: product would be 8192
  CHECK_THROWS_AS(gen_product({&a, &b}), Error);
  CHECK_THROWS_AS(gen_product({}), Error);
}

TEST_CASE("isomorphism finds maps and rejects mismatches") {
  OrthoLattice L3 = gen_horizontal_sum(3);
  auto self = is_isomorphic(L3, L3);
  REQUIRE(self.has_value());
  // the map preserves order and perp
  const Lattice& L = L3.base();
  for (Id a = 0; a < L3.size(); ++a) {
    CHECK(L3.perp((*self)[a]) == (*self)[L3.perp(a)]);
    for (Id b = 0; b < L3.size(); ++b)
      CHECK(L.leq(a, b) == L.leq((*self)[a], (*self)[b]));
  }

  CHECK_FALSE(is_isomorphic(gen_horizontal_sum(2), gen_boolean(2)).has_value());
  // same size, different structure
  CHECK_FALSE(is_isomorphic(gen_boolean(3), gen_horizontal_sum(3)).has_value());
  CHECK_THROWS_AS(is_isomorphic(gen_boolean(7), gen_boolean(7)), Error);
}

TEST_CASE("the two-generator ortholattice closes into the 4-atom boolean algebra") {
  OrthoLattice S = gen_section3_ortho();
  REQUIRE(S.size() == 16);
  CHECK(check_modular(S.base()).holds);
  CHECK(check_distributive(S.base()).holds);
  CHECK(is_abelian(S));
  CHECK(is_isomorphic(S, gen_boolean(4)).has_value());
  // the generators sit at height 2: x = x^y v x^(1-y)
  const Lattice& L = S.base();
  Id x = L.require_id("x"), y = L.require_id("y");
  CHECK(L.meet(x, y) == L.require_id("x^y"));
  CHECK(L.join(x, y) == L.require_id("xvy"));
  CHECK(S.perp(x) == L.require_id("1-x"));
  CHECK(S.perp(L.require_id("d")) == L.require_id("1-d"));
}

TEST_CASE("central decomposition of pure boolean algebras") {
  auto d = decompose_central(gen_boolean(3));
  CHECK(d.boolean_exponent == 3);
  CHECK(d.sums.empty());
  CHECK(d.central_atoms.size() == 3);
  CHECK(d.factors.size() == 3);

  auto chain = decompose_central(gen_boolean(1));
  CHECK(chain.boolean_exponent == 1);
  CHECK(chain.sums.empty());
}

TEST_CASE("central decomposition of factorial lattices is trivial") {
  auto d = decompose_central(gen_horizontal_sum(2));
  CHECK(d.boolean_exponent == 0);
  CHECK(d.sums == std::vector<unsigned>{2});
  CHECK(d.central_atoms == IdVec{gen_horizontal_sum(2).top()});
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0].size() == 6);
}

TEST_CASE("central decomposition of mixed products recovers the signature") {
  OrthoLattice p = gen_product(gen_boolean(1), gen_horizontal_sum(2));
  auto d = decompose_central(p);
  CHECK(d.boolean_exponent == 1);
  CHECK(d.sums == std::vector<unsigned>{2});

  OrthoLattice L2 = gen_horizontal_sum(2);
  OrthoLattice L3 = gen_horizontal_sum(3);
  auto dd = decompose_central(gen_product(L2, L3));
  CHECK(dd.boolean_exponent == 0);
  CHECK(dd.sums == std::vector<unsigned>{2, 3});

  // rebuild from the reported signature and compare
  OrthoLattice again = gen_product(gen_horizontal_sum(dd.sums[0]),
                                   gen_horizontal_sum(dd.sums[1]));
  CHECK(is_isomorphic(gen_product(L2, L3), again).has_value());
}

TEST_CASE("a diamond input decomposes into two chain factors") {
  auto d = decompose_central(gen_horizontal_sum(1));
  CHECK(d.boolean_exponent == 2);
  CHECK(d.sums.empty());
}

TEST_CASE("central decomposition refuses non-modular input") {
  CHECK_THROWS_AS(decompose_central(gen_hexagon()), Error);
}
