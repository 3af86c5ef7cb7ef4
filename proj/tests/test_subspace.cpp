#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "ortholat/laws.hpp"
#include "ortholat/subspace.hpp"

using namespace ortholat;

namespace {

std::vector<Rat> v(int a, int b, int c) { return {Rat(a), Rat(b), Rat(c)}; }

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(rat_str(Rat(3)) == "3/1");
  CHECK(rat_str(Rat(-5, 7)) == "-5/7");
  CHECK(rat_str(Rat(2, 4)) == "1/2");
  CHECK(rat_parse("4") == Rat(4));
  CHECK(rat_parse("-6/8") == Rat(-3, 4));
  CHECK(rat_parse(rat_str(Rat(22, 7))) == Rat(22, 7));
  CHECK_THROWS_AS(rat_parse("1/0"), Error);
  CHECK_THROWS_AS(rat_parse("x"), Error);
  CHECK_THROWS_AS(rat_parse(""), Error);
}

TEST_CASE("subspaces live in reduced row echelon form") {
  QnLattice q(3);
  CHECK(q.line(v(2, 4, 6)) == q.line(v(1, 2, 3)));
  CHECK(q.make({v(1, 1, 0), v(1, 1, 0)}).dim() == 1);
  // spanning rows in any order canonicalize identically
  CHECK(q.make({v(1, 1, 0), v(0, 1, 1)}) == q.make({v(0, 1, 1), v(1, 2, 1)}));
  CHECK(q.bottom().dim() == 0);
  CHECK(q.top().dim() == 3);

  CHECK_THROWS_AS(q.line({Rat(1), Rat(0)}), Error);
  CHECK_THROWS_AS(QnLattice(1), Error);
  CHECK_THROWS_AS(QnLattice(7), Error);
}

TEST_CASE("meet and join of coordinate planes") {
  QnLattice q(3);
  Subspace u = q.make({v(1, 0, 0), v(0, 1, 0)});
  Subspace w = q.make({v(0, 1, 0), v(0, 0, 1)});
  CHECK(q.meet(u, w) == q.line(v(0, 1, 0)));
  CHECK(q.join(u, w) == q.top());
  CHECK(q.leq(q.meet(u, w), u));
  CHECK(q.meet(u, q.bottom()) == q.bottom());
  CHECK(q.join(u, q.bottom()) == u);
}

TEST_CASE("orthogonal complement is exact") {
  QnLattice q(3);
  CHECK(q.perp(q.line(v(1, 0, 0))) == q.make({v(0, 1, 0), v(0, 0, 1)}));
  CHECK(q.perp(q.bottom()) == q.top());
  CHECK(q.perp(q.top()) == q.bottom());

  Subspace d = q.line(v(1, 1, 1));
  CHECK(q.perp(q.perp(d)) == d);
  CHECK(q.meet(d, q.perp(d)) == q.bottom());
  CHECK(q.join(d, q.perp(d)) == q.top());

  // anisotropy: even a self-skew-looking line meets its perp at 0
  Subspace s = q.line(v(1, 2, 2));
  CHECK(q.meet(s, q.perp(s)).dim() == 0);
}

TEST_CASE("gram-schmidt decomposition without normalization") {
  QnLattice q(3);
  Subspace u = q.make({v(1, 1, 0), v(0, 1, 1)});
  auto lines = q.ortho_decompose(u);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == q.line(v(1, 0, -1)));
  CHECK(lines[1] == q.line(v(1, 2, 1)));
  CHECK(q.join(lines[0], lines[1]) == u);

  auto rev = q.ortho_decompose(u, true);
  REQUIRE(rev.size() == 2);
  CHECK(rev[0] == q.line(v(0, 1, 1)));
  CHECK(rev != lines);
  CHECK(q.join(rev[0], rev[1]) == u);

  CHECK(q.ortho_decompose(q.bottom()).empty());
  CHECK(q.ortho_decompose(q.top()).size() == 3);
}

TEST_CASE("common complement is deterministic and verified") {
  QnLattice q(3);
  Subspace a = q.line(v(1, 0, 0));
  Subspace b = q.line(v(0, 0, 1));
  Subspace w = q.common_complement(a, b);
  CHECK(w == q.make({v(1, 0, 1), v(0, 1, 0)}));
  for (const Subspace& s : {a, b}) {
    CHECK(q.join(w, s) == q.top());
    CHECK(q.meet(w, s) == q.bottom());
  }
  // same input, same answer
  CHECK(q.common_complement(a, b) == w);

  CHECK_THROWS_AS(q.common_complement(a, q.make({v(1, 0, 0), v(0, 1, 0)})),
                  Error);
}

TEST_CASE("dimension is the rank over the ambient") {
  QnLattice q(3);
  CHECK(q.dimension(q.bottom()) == Rat(0));
  CHECK(q.dimension(q.line(v(1, 2, 3))) == Rat(1, 3));
  CHECK(q.dimension(q.make({v(1, 0, 0), v(0, 1, 0)})) == Rat(2, 3));
  CHECK(q.dimension(q.top()) == Rat(1));
}

TEST_CASE("min_below returns a line inside the subspace") {
  QnLattice q(4);
  Subspace u = q.make({{Rat(1), Rat(0), Rat(0), Rat(0)},
                       {Rat(0), Rat(1), Rat(1), Rat(0)}});
  auto lo = q.min_below(u, false);
  auto hi = q.min_below(u, true);
  REQUIRE(lo.has_value());
  REQUIRE(hi.has_value());
  CHECK(lo->dim() == 1);
  CHECK(q.leq(*lo, u));
  CHECK(q.leq(*hi, u));
  CHECK_FALSE(q.min_below(q.bottom(), false).has_value());
}

TEST_CASE("sampling is seed-deterministic") {
  QnLattice q(4);
  Rng r1(99), r2(99);
  for (int i = 0; i < 10; ++i) {
    Subspace a = sample_subspace(q, r1);
    Subspace b = sample_subspace(q, r2);
    CHECK(a == b);
    CHECK(a.dim() <= 4);
  }
  Rng r3(100);
  bool all_same = true;
  for (int i = 0; i < 10; ++i)
    all_same = all_same && sample_subspace(q, r3) == sample_subspace(q, r1);
  CHECK_FALSE(all_same);
}

TEST_CASE("sample_subspace_of stays inside and hits the requested dimension") {
  QnLattice q(4);
  Rng rng(7);
  Subspace u = q.make({{Rat(1), Rat(0), Rat(0), Rat(1)},
                       {Rat(0), Rat(1), Rat(0), Rat(0)},
                       {Rat(0), Rat(0), Rat(1), Rat(0)}});
  for (unsigned d = 0; d <= 3; ++d) {
    Subspace s = sample_subspace_of(q, rng, u, d);
    CHECK(s.dim() == d);
    CHECK(q.leq(s, u));
  }
}

TEST_CASE("sampled orthogonal line families decompose the whole space") {
  QnLattice q(3);
  Rng rng(5);
  auto fam = sample_orthogonal_lines(q, rng);
  REQUIRE(fam.size() == 3);
  Subspace j = q.bottom();
  for (const auto& l : fam) {
    CHECK(l.dim() == 1);
    j = q.join(j, l);
  }
  CHECK(j == q.top());
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t k = i + 1; k < fam.size(); ++k)
      CHECK(q.leq(fam[i], q.perp(fam[k])));
}

TEST_CASE("generic law templates run on the subspace backend") {
  QnLattice q(3);
  Subspace a = q.line(v(1, 1, 0));
  Subspace b = q.line(v(1, 1, 1));
  CHECK(commutes_with(q, a, a));
  CHECK(commutes_with(q, a, q.perp(a)));
  CHECK(modular_triple(q, a, b, q.join(a, b)));

  auto fam = greedy_minimal_decomposition(q, q.top());
  CHECK(fam.size() == 3);
  auto rfam = greedy_minimal_decomposition(q, q.top(), true);
  CHECK(rfam.size() == 3);
  CHECK(is_affine_reference(q, fam));
}

TEST_CASE("property suite passes on a short deterministic run") {
  SuiteReport rep = run_property_suite(3, 25, 7, "all");
  CHECK(rep.all_pass);
  CHECK(rep.checks.size() == 26);
  for (const auto& c : rep.checks) {
    CHECK(c.pass == 25);
    CHECK(c.fail == 0);
    CHECK(c.counterexample.empty());
  }

  SuiteReport lt = run_property_suite(2, 25, 7, "lattice");
  CHECK(lt.checks.size() == 6);
  CHECK(lt.all_pass);
  CHECK(lt.checks[0].law == "lattice/absorption");

  SuiteReport dim4 = run_property_suite(4, 10, 11, "dimension");
  CHECK(dim4.all_pass);
  CHECK(dim4.checks.size() == 7);

  CHECK_THROWS_AS(run_property_suite(3, 5, 0, "nope"), Error);
  CHECK_THROWS_AS(run_property_suite(9, 5, 0, "all"), Error);
}

TEST_CASE("law streams are independent of the suite selection") {
  // the same law sampled alone or with the full suite sees the same draws
  SuiteReport all = run_property_suite(3, 15, 123, "all");
  SuiteReport reg = run_property_suite(3, 15, 123, "regular");
  auto find = [](const SuiteReport& r, const std::string& law) {
    for (const auto& c : r.checks)
      if (c.law == law) return c;
    FAIL("law not found");
    return SuiteCheck{};
  };
  for (const char* law :
       {"regular/perspectivity-dim", "regular/domination-transfer",
        "regular/parallelogram"}) {
    auto a = find(all, law);
    auto b = find(reg, law);
    CHECK(a.pass == b.pass);
    CHECK(a.fail == b.fail);
  }
}

TEST_CASE("subspace class division is dimension arithmetic") {
  QnLattice q(4);
  Rng rng(3);
  auto d31 = s_class_divide(q, rng, 3, 1);
  CHECK(d31.quotient == 3);
  CHECK(d31.remainder_dim == 0);

  auto d32 = s_class_divide(q, rng, 3, 2);
  CHECK(d32.quotient == 1);
  CHECK(d32.remainder_dim == 1);

  auto d44 = s_class_divide(q, rng, 4, 4);
  CHECK(d44.quotient == 1);
  CHECK(d44.remainder_dim == 0);

  auto d03 = s_class_divide(q, rng, 0, 3);
  CHECK(d03.quotient == 0);
  CHECK(d03.remainder_dim == 0);

  CHECK_THROWS_AS(s_class_divide(q, rng, 3, 0), Error);
  CHECK_THROWS_AS(s_class_divide(q, rng, 5, 1), Error);
}

TEST_CASE("subspace rendering") {
  QnLattice q(3);
  CHECK(subspace_str(q.bottom()) == "span{}");
  CHECK(subspace_str(q.line(v(1, 0, -2))) == "span{(1/1, 0/1, -2/1)}");
}
