#include "ortholat/ortho.hpp"

#include <algorithm>

namespace ortholat {

namespace {

void validate_perp(const Lattice& L, const IdVec& perp) {
  std::size_t n = L.size();
  if (perp.size() != n)
    fail(Err::IncompleteInvolution, "orthocomplement map not total");
  for (Id a = 0; a < n; ++a) {
    if (perp[a] >= n) fail(Err::UnknownElement, "orthocomplement id out of range");
    if (perp[perp[a]] != a)
      fail(Err::NotInvolution, "perp(perp(" + L.name(a) + ")) = " +
                                   L.name(perp[perp[a]]) + " != " + L.name(a));
  }
  for (Id a = 0; a < n; ++a) {
    if (L.join(a, perp[a]) != L.top() || L.meet(a, perp[a]) != L.bottom())
      fail(Err::ComplementLawFails,
           L.name(a) + " and " + L.name(perp[a]) + " are not complements");
  }
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      if (L.leq(a, b) && !L.leq(perp[b], perp[a]))
        fail(Err::NotAntitone, "perp not antitone at (" + L.name(a) + ", " +
                                   L.name(b) + ")");
      // De Morgan, both directions.
      if (perp[L.join(a, b)] != L.meet(perp[a], perp[b]) ||
          perp[L.meet(a, b)] != L.join(perp[a], perp[b]))
        fail(Err::ComplementLawFails,
             "De Morgan fails at (" + L.name(a) + ", " + L.name(b) + ")");
    }
}

}  // namespace

OrthoLattice OrthoLattice::attach(
    Lattice base, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::size_t n = base.size();
  constexpr Id kUnset = ~Id(0);
  IdVec perp(n, kUnset);
  for (const auto& [a, b] : pairs) {
    Id ia = base.require_id(a);
    Id ib = base.require_id(b);
    if ((perp[ia] != kUnset && perp[ia] != ib) ||
        (perp[ib] != kUnset && perp[ib] != ia))
      fail(Err::IncompleteInvolution,
           "conflicting orthocomplement pairs at " + a);
    perp[ia] = ib;
    perp[ib] = ia;
  }
  for (Id i = 0; i < n; ++i)
    if (perp[i] == kUnset)
      fail(Err::IncompleteInvolution,
           "no orthocomplement given for " + base.name(i));
  return attach_ids(std::move(base), std::move(perp));
}

OrthoLattice OrthoLattice::attach_ids(Lattice base, IdVec perp) {
  validate_perp(base, perp);
  OrthoLattice ol;
  ol.lat_ = std::move(base);
  ol.perp_ = std::move(perp);
  return ol;
}

IdVec orthogonal_set(const OrthoLattice& ol, Id a) {
  IdVec r;
  for (Id x = 0; x < ol.size(); ++x)
    if (ol.leq(x, ol.perp(a))) r.push_back(x);
  return r;
}

bool commutes(const OrthoLattice& ol, Id a, Id b) {
  return a == ol.join(ol.meet(a, b), ol.meet(a, ol.perp(b)));
}

IdVec commutant(const OrthoLattice& ol, Id a) {
  IdVec r;
  for (Id x = 0; x < ol.size(); ++x)
    if (commutes(ol, x, a)) r.push_back(x);
  return r;
}

IdVec center(const OrthoLattice& ol) {
  IdVec r;
  for (Id z = 0; z < ol.size(); ++z) {
    bool central = true;
    for (Id l = 0; l < ol.size() && central; ++l)
      central = commutes(ol, z, l);
    if (central) r.push_back(z);
  }
  return r;
}

bool is_factorial(const OrthoLattice& ol) {
  IdVec c = center(ol);
  if (ol.size() == 1) return c.size() == 1;
  return c.size() == 2 && c[0] == std::min(ol.bottom(), ol.top()) &&
         c[1] == std::max(ol.bottom(), ol.top());
}

bool is_abelian(const OrthoLattice& ol) { return center(ol).size() == ol.size(); }

Id relative_complement(const OrthoLattice& ol, Id a, Id b) {
  if (!ol.leq(b, a))
    fail(Err::NotDominated,
         ol.name(b) + " not below " + ol.name(a));
  return ol.meet(ol.perp(b), a);
}

std::optional<Reduced> try_reduced(const OrthoLattice& ol, Id l,
                                   std::string* why) {
  const Lattice& L = ol.base();
  IdVec members = L.down_set(l);
  std::size_t m = members.size();
  IdVec pos(L.size(), 0);
  for (std::size_t i = 0; i < m; ++i) pos[members[i]] = Id(i);

  std::vector<std::string> names(m);
  BitRel up(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = L.name(members[i]);
    for (std::size_t j = 0; j < m; ++j)
      if (L.leq(members[i], members[j])) up.set(i, j);
  }
  IdVec perp(m);
  for (std::size_t i = 0; i < m; ++i)
    perp[i] = pos[L.meet(ol.perp(members[i]), l)];

  try {
    // Meets and joins of elements below l agree with the ambient ones, so
    // the interval is a lattice; only the complement map needs checking.
    Reduced red{OrthoLattice::attach_ids(Lattice::from_leq(std::move(names), std::move(up)),
                                         std::move(perp)),
                std::move(members)};
    return red;
  } catch (const Error& e) {
    if (why) *why = e.what();
    return std::nullopt;
  }
}

Reduced reduced_lattice(const OrthoLattice& ol, Id l) {
  std::string why;
  auto r = try_reduced(ol, l, &why);
  if (!r)
    fail(Err::ComplementLawFails,
         "interval [0, " + ol.name(l) + "] has no induced orthocomplement (" +
             why + "); this signals a missing modular law");
  return std::move(*r);
}

IdVec abelian_elements(const OrthoLattice& ol) {
  IdVec r;
  for (Id l = 0; l < ol.size(); ++l) {
    auto red = try_reduced(ol, l);
    if (red && is_abelian(red->ol)) r.push_back(l);
  }
  return r;
}

RPropertyReport check_r_property(const OrthoLattice& ol) {
  RPropertyReport rep;
  IdVec c = center(ol);
  for (Id l = 0; l < ol.size(); ++l) {
    std::string why;
    auto red = try_reduced(ol, l, &why);
    if (!red) {
      rep.status = RPropertyReport::Status::not_applicable;
      rep.witness = l;
      rep.detail = "no induced orthocomplement on [0, " + ol.name(l) + "]";
      return rep;
    }
    IdVec reduced_center;
    for (Id i : center(red->ol)) reduced_center.push_back(red->parent_ids[i]);
    IdVec projected;
    for (Id z : c) projected.push_back(ol.meet(z, l));
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()),
                    projected.end());
    if (reduced_center != projected) {
      rep.status = RPropertyReport::Status::fails;
      rep.witness = l;
      rep.detail = "center of [0, " + ol.name(l) +
                   "] differs from the projected center";
      return rep;
    }
  }
  return rep;
}

}  // namespace ortholat
