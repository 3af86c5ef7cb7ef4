#include "ortholat/equivalence.hpp"

#include "ortholat/modularity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ortholat {

EquivRelation EquivRelation::from_class_of(IdVec class_map) {
  EquivRelation r;
  std::size_t n = class_map.size();
  r.class_of.assign(n, 0);
  std::map<Id, Id> relabel;  // old label -> class index, first-seen order
  for (Id e = 0; e < n; ++e) {
    auto [it, fresh] = relabel.emplace(class_map[e], Id(relabel.size()));
    if (fresh) r.classes.emplace_back();
    r.class_of[e] = it->second;
    r.classes[it->second].push_back(e);
  }
  return r;
}

namespace {

struct DSU {
  IdVec parent;
  explicit DSU(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Id find(Id x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Id a, Id b) { parent[find(a)] = find(b); }
};

}  // namespace

PerspectivityResult perspectivity(const Lattice& L) {
  std::size_t n = L.size();
  std::vector<char> raw(n * n, 0);
  for (Id a = 0; a < n; ++a)
    for (Id b = a; b < n; ++b) {
      bool related = false;
      for (Id x = 0; x < n && !related; ++x)
        related = L.join(a, x) == L.top() && L.meet(a, x) == L.bottom() &&
                  L.join(b, x) == L.top() && L.meet(b, x) == L.bottom();
      raw[a * n + b] = raw[b * n + a] = related;
    }

  DSU dsu(n);
  for (Id a = 0; a < n; ++a)
    for (Id b = Id(a + 1); b < n; ++b)
      if (raw[a * n + b]) dsu.unite(a, b);

  IdVec labels(n);
  for (Id e = 0; e < n; ++e) labels[e] = dsu.find(e);
  PerspectivityResult out{EquivRelation::from_class_of(std::move(labels)), false};
  for (Id a = 0; a < n && !out.closure_needed; ++a)
    for (Id b = Id(a + 1); b < n && !out.closure_needed; ++b)
      out.closure_needed = out.rel.same(a, b) && !raw[a * n + b];
  return out;
}

bool sim_dominates(const Lattice& L, const EquivRelation& rel, Id a, Id b) {
  for (Id x : rel.classes[rel.class_of[a]])
    if (L.leq(x, b)) return true;
  return false;
}

bool sim_dominates_strict(const Lattice& L, const EquivRelation& rel, Id a, Id b) {
  for (Id x : rel.classes[rel.class_of[a]])
    if (L.lt(x, b)) return true;
  return false;
}

namespace {

// Orthogonal families for the additivity axiom, grouped by the multiset of
// classes they touch. Joins inside one group must all be equivalent.
struct FamilyCollector {
  const OrthoLattice& ol;
  const EquivRelation& rel;
  std::map<IdVec, std::pair<IdVec, Id>> buckets;  // signature -> (family, join-class)
  RegularReport* rep;

  bool add(const IdVec& family) {
    IdVec sig;
    for (Id e : family) sig.push_back(rel.class_of[e]);
    std::sort(sig.begin(), sig.end());
    Id join_class = rel.class_of[ol.base().join_all(family)];
    auto [it, fresh] = buckets.emplace(sig, std::make_pair(family, join_class));
    if (!fresh && it->second.second != join_class) {
      rep->regular = false;
      rep->failed_axiom = 4;
      rep->witness = {family[0], it->second.first[0], 0, 0};
      rep->detail = "equivalent orthogonal families with inequivalent joins";
      return false;
    }
    return true;
  }
};

bool mutually_orthogonal_with(const OrthoLattice& ol, const IdVec& fam, Id e) {
  for (Id f : fam)
    if (!ol.leq(e, ol.perp(f))) return false;
  return true;
}

}  // namespace

RegularReport verify_regular(const OrthoLattice& ol, const EquivRelation& rel,
                             std::size_t family_cap) {
  RegularReport rep;
  const Lattice& L = ol.base();
  std::size_t n = L.size();
  if (rel.class_of.size() != n) fail(Err::WidthMismatch, "partition size mismatch");

  // 1: the zero class is a singleton.
  if (rel.classes[rel.class_of[L.bottom()]].size() != 1) {
    rep.regular = false;
    rep.failed_axiom = 1;
    rep.witness = {L.bottom(), 0, 0, 0};
    rep.detail = "class of 0 is not {0}";
    return rep;
  }

  // 2: domination downward along ≥ collapses to equivalence.
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      if (!L.leq(a, b)) continue;
      if (sim_dominates(L, rel, b, a) && !rel.same(a, b)) {
        rep.regular = false;
        rep.failed_axiom = 2;
        rep.witness = {b, a, 0, 0};
        rep.detail = "b ≥ a with b ≼ a but b ≁ a";
        return rep;
      }
    }

  // 3: trichotomy with strict domination.
  for (Id a = 0; a < n; ++a)
    for (Id b = a; b < n; ++b) {
      int hits = (rel.same(a, b) ? 1 : 0) +
                 (sim_dominates_strict(L, rel, a, b) ? 1 : 0) +
                 (sim_dominates_strict(L, rel, b, a) ? 1 : 0);
      if (hits != 1) {
        rep.regular = false;
        rep.failed_axiom = 3;
        rep.witness = {a, b, 0, 0};
        rep.detail = hits == 0 ? "incomparable under ∼ and strict ≼"
                               : "simultaneous ∼ and strict ≼";
        return rep;
      }
    }

  // 4: additivity over orthogonal families.
  {
    FamilyCollector col{ol, rel, {}, &rep};
    IdVec fam;
    // Depth-first over ascending ids; nonzero elements only (a ⊥ a forces
    // a = 0, so members are automatically distinct).
    auto dfs = [&](auto&& self, Id start) -> bool {
      if (fam.size() >= 2 && !col.add(fam)) return false;
      if (fam.size() == family_cap) return true;
      for (Id e = start; e < n; ++e) {
        if (e == L.bottom()) continue;
        if (!mutually_orthogonal_with(ol, fam, e)) continue;
        fam.push_back(e);
        if (!self(self, Id(e + 1))) return false;
        fam.pop_back();
      }
      return true;
    };
    if (!dfs(dfs, 0)) return rep;
    // Greedily maximal families seeded from every element, cap-free.
    for (Id s = 0; s < n; ++s) {
      if (s == L.bottom()) continue;
      fam = {s};
      for (;;) {
        bool grew = false;
        for (Id e = 0; e < n; ++e) {
          if (e == L.bottom() ||
              std::find(fam.begin(), fam.end(), e) != fam.end())
            continue;
          if (mutually_orthogonal_with(ol, fam, e)) {
            fam.push_back(e);
            grew = true;
            break;
          }
        }
        if (!grew) break;
      }
      std::sort(fam.begin(), fam.end());
      if (fam.size() >= 2 && !col.add(fam)) return rep;
    }
  }

  // 5: finiteness, classes are antichains.
  for (const IdVec& cls : rel.classes)
    for (Id a : cls)
      for (Id b : cls)
        if (a != b && L.lt(a, b)) {
          rep.regular = false;
          rep.failed_axiom = 5;
          rep.witness = {a, b, 0, 0};
          rep.detail = "comparable pair inside one class";
          return rep;
        }

  return rep;
}

EnumerationResult enumerate_regular_relations(const OrthoLattice& ol,
                                              std::size_t size_cap) {
  std::size_t n = ol.size();
  if (n > size_cap)
    fail(Err::TooLarge, "partition scan is Bell(n); refusing n = " +
                            std::to_string(n) + " > cap " +
                            std::to_string(size_cap));
  EnumerationResult out;
  // Restricted growth strings: a[0] = 0, a[i] ≤ 1 + max(a[0..i-1]).
  IdVec a(n, 0), maxes(n, 0);
  for (;;) {
    ++out.partitions_scanned;
    EquivRelation rel = EquivRelation::from_class_of(a);
    if (verify_regular(ol, rel, n).regular) out.regular.push_back(std::move(rel));

    bool advanced = false;
    for (std::size_t i = n; i-- > 1;) {
      if (a[i] <= maxes[i - 1]) {
        ++a[i];
        maxes[i] = std::max(maxes[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          a[j] = 0;
          maxes[j] = maxes[i];
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

namespace {

std::uint64_t divide_once(const OrthoLattice& ol, const EquivRelation& rel,
                          Id b, Id a_class, bool descending, Id* remainder) {
  const Lattice& L = ol.base();
  const IdVec& as = rel.classes[a_class];
  Id r = b;
  std::uint64_t count = 0;
  for (;;) {
    std::optional<Id> pick;
    if (descending) {
      for (auto it = as.rbegin(); it != as.rend(); ++it)
        if (L.leq(*it, r)) { pick = *it; break; }
    } else {
      for (Id a : as)
        if (L.leq(a, r)) { pick = a; break; }
    }
    if (!pick) break;
    r = L.meet(ol.perp(*pick), r);
    ++count;
  }
  *remainder = r;
  return count;
}

}  // namespace

DivideResult class_divide(const OrthoLattice& ol, const EquivRelation& rel,
                          Id b_class, Id a_class) {
  const Lattice& L = ol.base();
  if (b_class >= rel.classes.size() || a_class >= rel.classes.size())
    fail(Err::UnknownElement, "class index out of range");
  auto check = verify_regular(ol, rel, 4);
  if (!check.regular)
    fail(Err::NotRegular,
         "relation fails axiom " + std::to_string(check.failed_axiom));
  if (!check_modular(L).holds) fail(Err::NotModular, "base lattice not modular");
  if (rel.class_of[L.bottom()] == a_class)
    fail(Err::AxiomFails, "division by the zero class is not unique");

  std::optional<DivideResult> result;
  for (Id b : rel.classes[b_class])
    for (bool descending : {false, true}) {
      Id rem = 0;
      std::uint64_t q = divide_once(ol, rel, b, a_class, descending, &rem);
      DivideResult here{q, rel.class_of[rem]};
      if (!result) {
        result = here;
      } else if (result->quotient != here.quotient ||
                 result->remainder_class != here.remainder_class) {
        fail(Err::NotRegular,
             "class division depends on the representative or pick order");
      }
    }
  if (!result) fail(Err::UnknownElement, "empty dividend class");
  return *result;
}

}  // namespace ortholat
