#include "ortholat/builders.hpp"

#include "ortholat/modularity.hpp"

#include <algorithm>
#include <bit>

namespace ortholat {

Lattice gen_pentagon() {
  return Lattice::from_covers({"0", "x", "y", "z", "1"},
                              {{"0", "x"}, {"x", "y"}, {"y", "1"},
                               {"0", "z"}, {"z", "1"}});
}

OrthoLattice gen_hexagon() {
  Lattice base = Lattice::from_covers(
      {"0", "a", "b", "1-b", "1-a", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"},
       {"0", "1-b"}, {"1-b", "1-a"}, {"1-a", "1"}});
  return OrthoLattice::attach(std::move(base), {{"0", "1"},
                                                {"a", "1-a"},
                                                {"b", "1-b"}});
}

namespace {

std::string subset_name(unsigned mask) {
  if (mask == 0) return "{}";
  std::string s = "{";
  for (unsigned i = 0; mask >> i; ++i)
    if (mask >> i & 1) {
      if (s.size() > 1) s += ",";
      s += std::to_string(i + 1);
    }
  return s + "}";
}

OrthoLattice boolean_with_names(unsigned k,
                                const std::vector<std::string>& names) {
  std::size_t n = std::size_t(1) << k;
  BitRel up(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((a & b) == a) up.set(a, b);
  Lattice base = Lattice::from_leq(names, std::move(up));
  IdVec perp(n);
  for (std::size_t a = 0; a < n; ++a) perp[a] = Id(~a & (n - 1));
  return OrthoLattice::attach_ids(std::move(base), std::move(perp));
}

}  // namespace

OrthoLattice gen_boolean(unsigned k) {
  if (k == 0) fail(Err::TooLarge, "need at least one generator");
  if (k > 12)
    fail(Err::TooLarge,
         "2^" + std::to_string(k) + " elements exceed the table limit");
  std::vector<std::string> names(std::size_t(1) << k);
  for (std::size_t a = 0; a < names.size(); ++a)
    names[a] = subset_name(unsigned(a));
  return boolean_with_names(k, names);
}

OrthoLattice gen_horizontal_sum(unsigned m) {
  if (m == 0) fail(Err::TooLarge, "need at least one middle pair");
  if (m > 64) fail(Err::TooLarge, "more than 64 middle pairs");
  std::size_t n = 2 * m + 2;
  std::vector<std::string> names(n);
  names[0] = "0";
  names[n - 1] = "1";
  for (unsigned i = 1; i <= m; ++i) {
    names[2 * i - 1] = "l" + std::to_string(i);
    names[2 * i] = "1-l" + std::to_string(i);
  }
  BitRel up(n);
  for (std::size_t a = 0; a < n; ++a) {
    up.set(a, a);
    up.set(0, a);
    up.set(a, n - 1);
  }
  Lattice base = Lattice::from_leq(std::move(names), std::move(up));
  IdVec perp(n);
  perp[0] = Id(n - 1);
  perp[n - 1] = 0;
  for (unsigned i = 1; i <= m; ++i) {
    perp[2 * i - 1] = Id(2 * i);
    perp[2 * i] = Id(2 * i - 1);
  }
  return OrthoLattice::attach_ids(std::move(base), std::move(perp));
}

OrthoLattice gen_section3_ortho() {
  // Atom order: x^y, x^(1-y), y^(1-x), 1-(xvy). Every element is named by
  // the meet/join expression it carries in the generated sublattice.
  std::vector<std::string> names(16);
  names[0b0000] = "0";
  names[0b0001] = "x^y";
  names[0b0010] = "x^(1-y)";
  names[0b0100] = "y^(1-x)";
  names[0b1000] = "1-(xvy)";
  names[0b0011] = "x";
  names[0b0101] = "y";
  names[0b1010] = "1-y";
  names[0b1100] = "1-x";
  names[0b1001] = "d";
  names[0b0110] = "1-d";
  names[0b0111] = "xvy";
  names[0b1011] = "1-(y^(1-x))";
  names[0b1101] = "1-(x^(1-y))";
  names[0b1110] = "1-(x^y)";
  names[0b1111] = "1";
  return boolean_with_names(4, names);
}

OrthoLattice gen_product(const std::vector<const OrthoLattice*>& factors) {
  if (factors.empty()) fail(Err::TooLarge, "empty factor list");
  std::size_t n = 1;
  for (const OrthoLattice* f : factors) {
    n *= f->size();
    if (n > Lattice::kMaxElements)
      fail(Err::TooLarge, "product exceeds " +
                              std::to_string(Lattice::kMaxElements) +
                              " elements");
  }
  std::size_t k = factors.size();

  // Mixed-radix decoding: component i of element e.
  auto part = [&](std::size_t e, std::size_t i) {
    for (std::size_t j = k; j-- > i + 1;) e /= factors[j]->size();
    return e % factors[i]->size();
  };

  std::vector<std::string> names(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += factors[i]->name(Id(part(e, i)));
    }
    names[e] = s + ")";
  }
  BitRel up(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < k && le; ++i)
        le = factors[i]->leq(Id(part(a, i)), Id(part(b, i)));
      if (le) up.set(a, b);
    }
  Lattice base = Lattice::from_leq(std::move(names), std::move(up));
  IdVec perp(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t acc = 0;
    for (std::size_t i = 0; i < k; ++i)
      acc = acc * factors[i]->size() + factors[i]->perp(Id(part(e, i)));
    perp[e] = Id(acc);
  }
  return OrthoLattice::attach_ids(std::move(base), std::move(perp));
}

OrthoLattice gen_product(const OrthoLattice& a, const OrthoLattice& b) {
  return gen_product(std::vector<const OrthoLattice*>{&a, &b});
}

namespace {

struct IsoSearch {
  const OrthoLattice& A;
  const OrthoLattice& B;
  std::vector<IdVec> cand;  // per a-id, the b-ids with matching invariants
  IdVec map_ab, map_ba;
  static constexpr Id kFree = ~Id(0);

  bool consistent(Id a, Id b) const {
    if (map_ba[b] != kFree) return false;
    // Perp image must be consistent with what is already mapped.
    Id pa = A.perp(a);
    if (map_ab[pa] != kFree && map_ab[pa] != B.perp(b)) return false;
    for (Id a2 = 0; a2 < A.size(); ++a2) {
      Id b2 = map_ab[a2];
      if (b2 == kFree) continue;
      if (A.leq(a, a2) != B.leq(b, b2)) return false;
      if (A.leq(a2, a) != B.leq(b2, b)) return false;
    }
    return true;
  }

  bool extend(Id a) {
    if (a == A.size()) return true;
    for (Id b : cand[a]) {
      if (!consistent(a, b)) continue;
      map_ab[a] = b;
      map_ba[b] = a;
      if (extend(Id(a + 1))) return true;
      map_ab[a] = kFree;
      map_ba[b] = kFree;
    }
    return false;
  }
};

}  // namespace

std::optional<IdVec> is_isomorphic(const OrthoLattice& a, const OrthoLattice& b) {
  if (a.size() > 64 || b.size() > 64)
    fail(Err::TooLarge, "isomorphism search capped at 64 elements");
  if (a.size() != b.size()) return std::nullopt;
  std::size_t n = a.size();

  // Invariant per element: (|down|, |up|, |down of perp|). Orders the
  // candidate lists and prunes most of the tree.
  auto profile = [](const OrthoLattice& L, Id e) {
    return std::array<std::size_t, 3>{L.base().down_set(e).size(),
                                      L.base().up_set(e).size(),
                                      L.base().down_set(L.perp(e)).size()};
  };
  IsoSearch s{a, b, {}, IdVec(n, IsoSearch::kFree), IdVec(n, IsoSearch::kFree)};
  s.cand.resize(n);
  for (Id x = 0; x < n; ++x) {
    auto px = profile(a, x);
    for (Id y = 0; y < n; ++y)
      if (px == profile(b, y)) s.cand[x].push_back(y);
    if (s.cand[x].empty()) return std::nullopt;
  }
  if (!s.extend(0)) return std::nullopt;
  return s.map_ab;
}

namespace {

// Factor shape test: 2-chain, or a horizontal sum of m middle pairs.
std::optional<unsigned> horizontal_sum_m(const OrthoLattice& f) {
  std::size_t n = f.size();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  for (Id x = 0; x < n; ++x) {
    if (x == f.bottom() || x == f.top()) continue;
    for (Id y = 0; y < n; ++y) {
      if (y == x || y == f.bottom() || y == f.top()) continue;
      if (f.meet(x, y) != f.bottom() || f.join(x, y) != f.top())
        return std::nullopt;
    }
  }
  return unsigned((n - 2) / 2);
}

}  // namespace

CentralDecomposition decompose_central(const OrthoLattice& ol) {
  const Lattice& L = ol.base();
  if (!check_modular(L).holds)
    fail(Err::NotDecomposable, "base lattice not modular");

  IdVec c = center(ol);
  CentralDecomposition out;
  for (Id z : c) {
    if (z == L.bottom()) continue;
    bool atom_of_center = true;
    for (Id w : c)
      if (w != L.bottom() && w != z && L.lt(w, z)) {
        atom_of_center = false;
        break;
      }
    if (atom_of_center) out.central_atoms.push_back(z);
  }
  if (L.join_all(out.central_atoms) != L.top())
    fail(Err::NotDecomposable, "central atoms do not join to the top");
  for (std::size_t i = 0; i < out.central_atoms.size(); ++i)
    for (std::size_t j = i + 1; j < out.central_atoms.size(); ++j)
      if (L.meet(out.central_atoms[i], out.central_atoms[j]) != L.bottom())
        fail(Err::NotDecomposable, "central atoms overlap");

  // The canonical map l ↦ (l ∧ c_i) must be an order- and perp-preserving
  // bijection onto the product of the intervals [0, c_i].
  std::size_t product_size = 1;
  for (Id z : out.central_atoms) {
    Reduced red = reduced_lattice(ol, z);
    product_size *= red.ol.size();
    out.factors.push_back(std::move(red.ol));
  }
  if (product_size != L.size())
    fail(Err::NotDecomposable, "component counts do not multiply up");
  for (Id x = 0; x < L.size(); ++x)
    for (Id y = 0; y < L.size(); ++y) {
      bool all_le = true;
      for (Id z : out.central_atoms)
        if (!L.leq(L.meet(x, z), L.meet(y, z))) {
          all_le = false;
          break;
        }
      if (all_le != L.leq(x, y))
        fail(Err::NotDecomposable, "component order does not determine order");
    }
  for (Id x = 0; x < L.size(); ++x)
    for (Id z : out.central_atoms)
      if (L.meet(ol.perp(x), z) != L.meet(ol.perp(L.meet(x, z)), z))
        fail(Err::NotDecomposable, "perp is not componentwise");

  for (const OrthoLattice& f : out.factors) {
    if (f.size() == 2) {
      ++out.boolean_exponent;
      continue;
    }
    auto m = horizontal_sum_m(f);
    if (!m)
      fail(Err::NotDecomposable,
           "factor of size " + std::to_string(f.size()) +
               " is neither a 2-chain nor a horizontal sum");
    out.sums.push_back(*m);
  }
  std::sort(out.sums.begin(), out.sums.end());
  return out;
}

}  // namespace ortholat
