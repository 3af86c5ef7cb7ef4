#include "ortholat/dimension.hpp"

#include "ortholat/laws.hpp"

#include <algorithm>
#include <set>

namespace ortholat {

IdVec minimal_elements(const Lattice& L) {
  // Direct reading of minimality: every meet lands on 0 or on l itself.
  IdVec r;
  for (Id l = 0; l < L.size(); ++l) {
    if (l == L.bottom()) continue;
    bool minimal = true;
    for (Id x = 0; x < L.size() && minimal; ++x) {
      Id m = L.meet(l, x);
      minimal = (m == L.bottom() || m == l);
    }
    if (minimal) r.push_back(l);
  }
  return r;
}

std::optional<Id> min_below(const Lattice& L, Id l, bool from_high) {
  IdVec mins = minimal_elements(L);
  if (from_high) std::reverse(mins.begin(), mins.end());
  for (Id m : mins)
    if (L.leq(m, l)) return m;
  return std::nullopt;
}

bool ExplicitOps::is_minimal(Id a) const {
  const Lattice& L = ol.base();
  if (a == L.bottom()) return false;
  for (Id x = 0; x < L.size(); ++x) {
    Id m = L.meet(a, x);
    if (m != L.bottom() && m != a) return false;
  }
  return true;
}

std::optional<Id> ExplicitOps::min_below(Id a, bool reversed) const {
  return ortholat::min_below(ol.base(), a, reversed);
}

bool is_irreducible(const Lattice& L) {
  for (Id l = 0; l < L.size(); ++l) {
    if (l == L.bottom() || l == L.top()) continue;
    if (L.inverses(l).size() == 1) return false;
  }
  return true;
}

bool is_type_I(const OrthoLattice& ol) {
  if (!is_factorial(ol))
    fail(Err::NotFactorial, "center is not {0, 1}");
  for (Id l : abelian_elements(ol))
    if (l != ol.bottom()) return true;
  return false;
}

IdVec decompose_minimal_orthogonal(const OrthoLattice& ol, Id l,
                                   bool reversed) {
  return greedy_minimal_decomposition(ExplicitOps{ol}, l, reversed);
}

IdVec find_reference(const OrthoLattice& ol) {
  if (!is_type_I(ol))
    fail(Err::NoMinimalBelow, "no nonzero abelian element");
  return decompose_minimal_orthogonal(ol, ol.top());
}

namespace {

[[noreturn]] void axiom_fails(const OrthoLattice& ol, const std::string& axiom,
                              IdVec witness) {
  std::string msg = axiom + " at (";
  for (std::size_t i = 0; i < witness.size(); ++i)
    msg += (i ? ", " : "") + ol.name(witness[i]);
  fail(Err::AxiomFails, msg + ")");
}

}  // namespace

DimensionFunction dimension_function(const OrthoLattice& ol,
                                     const EquivRelation& rel) {
  const Lattice& L = ol.base();
  std::size_t n = L.size();

  if (!check_modular(L).holds) fail(Err::NotModular, "modular law fails");
  if (!is_factorial(ol)) fail(Err::NotFactorial, "center is not {0, 1}");
  if (check_r_property(ol).status != RPropertyReport::Status::holds)
    fail(Err::AxiomFails, "reduction property fails");
  if (!is_type_I(ol)) fail(Err::AxiomFails, "no nonzero abelian element");
  {
    auto check = verify_regular(ol, rel, 4);
    if (!check.regular)
      fail(Err::NotRegular,
           "relation fails axiom " + std::to_string(check.failed_axiom));
  }

  DimensionFunction D;
  D.order = decompose_minimal_orthogonal(ol, ol.top()).size();
  D.value.resize(n);

  // Well-definedness: the family size must survive flipping the greedy
  // tie-break. (All maximal orthogonal minimal families below l share one
  // cardinality; the two extreme pick orders are the cheap probe.)
  for (Id l = 0; l < n; ++l) {
    std::size_t fwd = decompose_minimal_orthogonal(ol, l, false).size();
    std::size_t rev = decompose_minimal_orthogonal(ol, l, true).size();
    if (fwd != rev) axiom_fails(ol, "well-definedness", {l});
    D.value[l] = Rat(fwd) / Rat(D.order);
  }

  if (D.value[L.bottom()] != 0 || D.value[L.top()] != 1)
    axiom_fails(ol, "D1", {L.bottom(), L.top()});

  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      if (D.value[L.join(a, b)] + D.value[L.meet(a, b)] !=
          D.value[a] + D.value[b])
        axiom_fails(ol, "D2", {a, b});
      if ((D.value[a] == D.value[b]) != rel.same(a, b))
        axiom_fails(ol, "D3", {a, b});
      if ((D.value[a] <= D.value[b]) != sim_dominates(L, rel, a, b))
        axiom_fails(ol, "D4", {a, b});
    }

  // D5 over orthogonal families: every family up to size 4 plus the
  // greedily maximal one from each seed.
  {
    auto check_family = [&](const IdVec& fam) {
      Rat sum = 0;
      for (Id e : fam) sum += D.value[e];
      if (D.value[L.join_all(fam)] != sum) axiom_fails(ol, "D5", fam);
    };
    IdVec fam;
    auto orthogonal_to_all = [&](Id e) {
      for (Id f : fam)
        if (!ol.leq(e, ol.perp(f))) return false;
      return true;
    };
    auto dfs = [&](auto&& self, Id start) -> void {
      if (fam.size() >= 2) check_family(fam);
      if (fam.size() == 4) return;
      for (Id e = start; e < n; ++e) {
        if (e == L.bottom() || !orthogonal_to_all(e)) continue;
        fam.push_back(e);
        self(self, Id(e + 1));
        fam.pop_back();
      }
    };
    dfs(dfs, 0);
    for (Id s = 0; s < n; ++s) {
      if (s == L.bottom()) continue;
      fam = {s};
      for (bool grew = true; grew;) {
        grew = false;
        for (Id e = 0; e < n; ++e)
          if (e != L.bottom() &&
              std::find(fam.begin(), fam.end(), e) == fam.end() &&
              orthogonal_to_all(e)) {
            fam.push_back(e);
            grew = true;
            break;
          }
      }
      if (fam.size() >= 2) check_family(fam);
    }
  }

  // Image must be the full grid {0, 1/n, …, 1}.
  {
    std::set<Rat> image(D.value.begin(), D.value.end());
    if (image.size() != D.order + 1) axiom_fails(ol, "image", {});
    std::size_t k = 0;
    for (const Rat& v : image)
      if (v != Rat(k++) / Rat(D.order)) axiom_fails(ol, "image", {});
  }

  return D;
}

namespace {

StageResult stage(const std::string& name, bool pass, std::string detail = "") {
  return {name, pass ? "pass" : "fail", std::move(detail)};
}

}  // namespace

TypeReport classify_type(const Lattice& L, const OrthoLattice* ol) {
  TypeReport rep;
  rep.stages.push_back(stage("lattice", true));
  rep.minimal_ids = minimal_elements(L);
  rep.irreducible = is_irreducible(L);

  rep.modular = check_modular(L);
  rep.distributive = check_distributive(L);
  if (!rep.modular.holds) {
    rep.failed_stage = "modularity";
    rep.stages.push_back(stage("modularity", false,
                               "modular law fails at (" + L.name(rep.modular.l) +
                                   ", " + L.name(rep.modular.lp) + ", " +
                                   L.name(rep.modular.lpp) + ")"));
    if (ol) rep.has_ortho = true, rep.center_ids = center(*ol);
    return rep;
  }
  rep.stages.push_back(stage("modularity", true));

  if (!ol) {
    rep.failed_stage = "orthocomplementation";
    rep.stages.push_back(
        stage("orthocomplementation", false, "no orthocomplement attached"));
    return rep;
  }
  rep.has_ortho = true;
  rep.stages.push_back(stage("orthocomplementation", true));

  rep.center_ids = center(*ol);
  rep.factorial = is_factorial(*ol);
  rep.abelian = is_abelian(*ol);
  if (!*rep.factorial) {
    rep.failed_stage = "factoriality";
    rep.stages.push_back(stage("factoriality", false,
                               "center has " +
                                   std::to_string(rep.center_ids->size()) +
                                   " elements"));
    return rep;
  }
  rep.stages.push_back(stage("factoriality", true));

  rep.rprop = check_r_property(*ol);
  if (rep.rprop->status != RPropertyReport::Status::holds) {
    rep.failed_stage = "r-property";
    rep.stages.push_back(stage("r-property", false, rep.rprop->detail));
    return rep;
  }
  rep.stages.push_back(stage("r-property", true));

  bool type_i = is_type_I(*ol);  // factorial already established
  if (!type_i) {
    rep.failed_stage = "type-I";
    rep.stages.push_back(
        stage("type-I", false, "no nonzero abelian element"));
    return rep;
  }
  rep.stages.push_back(stage("type-I", true));

  auto persp = perspectivity(L);
  auto reg = verify_regular(*ol, persp.rel, 4);
  if (!reg.regular) {
    rep.failed_stage = "regularity";
    rep.stages.push_back(stage("regularity", false,
                               "perspectivity fails axiom " +
                                   std::to_string(reg.failed_axiom)));
    return rep;
  }
  rep.stages.push_back(stage("regularity", true));

  try {
    rep.dim = dimension_function(*ol, persp.rel);
  } catch (const Error& e) {
    rep.failed_stage = "dimension";
    rep.stages.push_back(stage("dimension", false, e.what()));
    return rep;
  }
  rep.stages.push_back(stage("dimension", true));

  rep.tag = "I_" + std::to_string(rep.dim->order);
  rep.waivers.push_back("cardinality axiom: waived (finite model)");
  return rep;
}

TypeReport classify_type(const OrthoLattice& ol) {
  return classify_type(ol.base(), &ol);
}

bool is_affine_reference(const OrthoLattice& ol, const IdVec& family) {
  return is_affine_reference(ExplicitOps{ol}, family);
}

}  // namespace ortholat
