#include <doctest.h>

#include "ortholat/builders.hpp"
#include "ortholat/modularity.hpp"

using namespace ortholat;

TEST_CASE("pentagon fails the modular law at the canonical triple") {
  Lattice P = gen_pentagon();
  auto r = check_modular(P);
  REQUIRE_FALSE(r.holds);
  CHECK(P.name(r.l) == "x");
  CHECK(P.name(r.lp) == "z");
  CHECK(P.name(r.lpp) == "y");
  CHECK(P.name(r.lhs) == "y");
  CHECK(P.name(r.rhs) == "x");
  CHECK_FALSE(check_distributive(P).holds);
}

TEST_CASE("hexagon fails the modular law") {
  OrthoLattice hx = gen_hexagon();
  const Lattice& H = hx.base();
  auto r = check_modular(H);
  REQUIRE_FALSE(r.holds);
  CHECK(H.name(r.l) == "a");
  CHECK(H.name(r.lp) == "1-b");
  CHECK(H.name(r.lpp) == "b");
}

TEST_CASE("horizontal sums are modular but not distributive") {
  OrthoLattice l2 = gen_horizontal_sum(2);
  const Lattice& L = l2.base();
  CHECK(check_modular(L).holds);
  auto d = check_distributive(L);
  REQUIRE_FALSE(d.holds);
  CHECK(L.name(d.l) == "l1");
  CHECK(L.name(d.lp) == "1-l1");
  CHECK(L.name(d.lpp) == "l2");

  CHECK(check_modular(gen_horizontal_sum(5).base()).holds);
}

TEST_CASE("boolean algebras are distributive") {
  for (unsigned k = 1; k <= 4; ++k) {
    OrthoLattice bk = gen_boolean(k);
    const Lattice& B = bk.base();
    CHECK(check_modular(B).holds);
    CHECK(check_distributive(B).holds);
  }
  OrthoLattice s3 = gen_section3_ortho();
  const Lattice& S = s3.base();
  CHECK(check_modular(S).holds);
  CHECK(check_distributive(S).holds);
}

TEST_CASE("pentagon detection agrees with the modular check") {
  Lattice P = gen_pentagon();
  auto pent = find_pentagon(P);
  REQUIRE(pent.found);
  CHECK(P.lt(pent.x, pent.y));
  CHECK(P.meet(pent.x, pent.z) == pent.bot);
  CHECK(P.meet(pent.y, pent.z) == pent.bot);
  CHECK(P.join(pent.x, pent.z) == pent.top);
  CHECK(P.join(pent.y, pent.z) == pent.top);

  CHECK(find_pentagon(gen_hexagon().base()).found);
  CHECK_FALSE(find_pentagon(gen_horizontal_sum(3).base()).found);
  CHECK_FALSE(find_pentagon(gen_boolean(3).base()).found);
  CHECK_FALSE(find_pentagon(gen_section3_ortho().base()).found);
}
