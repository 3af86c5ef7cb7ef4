#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ortholat/builders.hpp"
#include "ortholat/lattice.hpp"

using namespace ortholat;

namespace {

Lattice diamond() {
  return Lattice::from_covers({"0", "a", "b", "1"},
                              {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

Lattice pentagon_raw() {
  return Lattice::from_covers(
      {"0", "x", "y", "z", "1"},
      {{"0", "x"}, {"0", "z"}, {"x", "y"}, {"y", "1"}, {"z", "1"}});
}

void cross_check_tables(const Lattice& L) {
  for (Id a = 0; a < L.size(); ++a)
    for (Id b = 0; b < L.size(); ++b) {
      auto m = oracle::slow_meet(L, a, b);
      auto j = oracle::slow_join(L, a, b);
      REQUIRE(m.has_value());
      REQUIRE(j.has_value());
      CHECK(L.meet(a, b) == *m);
      CHECK(L.join(a, b) == *j);
    }
}

}  // namespace

TEST_CASE("diamond tables match the exhaustive-scan oracle") {
  Lattice L = diamond();
  REQUIRE(L.size() == 4);
  CHECK(L.name(L.bottom()) == "0");
  CHECK(L.name(L.top()) == "1");
  cross_check_tables(L);
  CHECK(L.atoms() == oracle::slow_atoms(L));
  CHECK(L.atoms() == IdVec{1, 2});
}

TEST_CASE("pentagon tables match the oracle") {
  Lattice L = pentagon_raw();
  cross_check_tables(L);
  Id x = L.require_id("x"), y = L.require_id("y"), z = L.require_id("z");
  CHECK(L.meet(x, z) == L.bottom());
  CHECK(L.join(x, z) == L.top());
  CHECK(L.meet(y, z) == L.bottom());
  CHECK(L.join(y, z) == L.top());
  CHECK(L.lt(x, y));
  CHECK(L.down_set(y) == IdVec{0, 1, 2});
  CHECK(L.up_set(z) == IdVec{3, 4});
}

TEST_CASE("bigger generated lattices agree with the oracle") {
  cross_check_tables(gen_boolean(4).base());
  cross_check_tables(gen_horizontal_sum(5).base());
  cross_check_tables(gen_section3_ortho().base());
}

TEST_CASE("from_leq rebuilds the lattice that produced the relation") {
  Lattice L = gen_boolean(3).base();
  Lattice M = Lattice::from_leq(L.names(), L.relation());
  CHECK(L == M);
  CHECK(M.meet(3, 5) == L.meet(3, 5));

  // and covers extracted from the relation rebuild it too
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, b] : L.cover_pairs()) covers.push_back({L.name(a), L.name(b)});
  CHECK(Lattice::from_covers(L.names(), covers) == L);
}

TEST_CASE("meet_all and join_all fold with the right neutral elements") {
  Lattice L = diamond();
  CHECK(L.meet_all({}) == L.top());
  CHECK(L.join_all({}) == L.bottom());
  CHECK(L.meet_all({1, 2}) == L.bottom());
  CHECK(L.join_all({1, 2}) == L.top());
  CHECK(L.join_all({1}) == 1);
}

TEST_CASE("inverses are complements in the bounded sense") {
  Lattice L = diamond();
  CHECK(L.inverses(1) == IdVec{2});
  CHECK(L.inverses(L.bottom()) == IdVec{L.top()});
  Lattice P = pentagon_raw();
  Id z = P.require_id("z");
  CHECK(P.inverses(z) == IdVec{P.require_id("x"), P.require_id("y")});
}

TEST_CASE("id lookup") {
  Lattice L = diamond();
  CHECK(L.id_of("a") == Id{1});
  CHECK_FALSE(L.id_of("nope").has_value());
  CHECK_THROWS_AS(L.require_id("nope"), Error);
}

TEST_CASE("construction rejects a cycle in the covers") {
  try {
    Lattice::from_covers({"0", "a", "b", "1"},
                         {{"0", "a"}, {"a", "b"}, {"b", "a"}, {"b", "1"}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::CycleDetected);
  }
}

TEST_CASE("construction rejects two maximal elements") {
  try {
    Lattice::from_covers({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::NoBottomTop);
  }
}

TEST_CASE("construction rejects a non-unique meet") {
  // 0 < a,b < x,y < 1: x ∧ y has two maximal lower bounds
  try {
    Lattice::from_covers({"0", "a", "b", "x", "y", "1"},
                         {{"0", "a"},
                          {"0", "b"},
                          {"a", "x"},
                          {"b", "x"},
                          {"a", "y"},
                          {"b", "y"},
                          {"x", "1"},
                          {"y", "1"}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::NoUniqueBound);
  }
}

TEST_CASE("construction rejects unknown and duplicate inputs") {
  CHECK_THROWS_AS(Lattice::from_covers({"0", "1"}, {{"0", "q"}}), Error);
  CHECK_THROWS_AS(Lattice::from_covers({"0", "0"}, {}), Error);
}

TEST_CASE("validate_complete_lattice collects violations instead of throwing") {
  auto diag = validate_complete_lattice({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}});
  REQUIRE_FALSE(diag.ok());
  bool top_law = false;
  for (const auto& v : diag.violations)
    if (v.law.find("top") != std::string::npos) top_law = true;
  CHECK(top_law);

  auto cyc = validate_complete_lattice(
      {"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "a"}, {"b", "1"}});
  REQUIRE_FALSE(cyc.ok());
  CHECK(cyc.violations.front().law == "antisymmetry");

  auto good = validate_complete_lattice(
      {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  CHECK(good.ok());
}

TEST_CASE("one-element lattice is its own bottom and top") {
  Lattice L = Lattice::from_covers({"0"}, {});
  CHECK(L.bottom() == L.top());
  CHECK(L.meet(0, 0) == 0);
  CHECK(L.atoms().empty());
  CHECK(L.cover_pairs().empty());
}
