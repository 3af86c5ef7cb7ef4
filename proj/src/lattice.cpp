#include "ortholat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace ortholat {

const char* err_name(Err e) {
  switch (e) {
    case Err::CycleDetected: return "CycleDetected";
    case Err::NoUniqueBound: return "NoUniqueBound";
    case Err::NoBottomTop: return "NoBottomTop";
    case Err::UnknownElement: return "UnknownElement";
    case Err::TooLarge: return "TooLarge";
    case Err::NotInvolution: return "NotInvolution";
    case Err::NotAntitone: return "NotAntitone";
    case Err::ComplementLawFails: return "ComplementLawFails";
    case Err::NotDominated: return "NotDominated";
    case Err::NotFactorial: return "NotFactorial";
    case Err::NotModular: return "NotModular";
    case Err::NotRegular: return "NotRegular";
    case Err::NoMinimalBelow: return "NoMinimalBelow";
    case Err::NotMinimal: return "NotMinimal";
    case Err::NotDecomposable: return "NotDecomposable";
    case Err::AxiomFails: return "AxiomFails";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::WidthMismatch: return "WidthMismatch";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::ParseError: return "ParseError";
    case Err::DuplicatePair: return "DuplicatePair";
    case Err::IncompleteInvolution: return "IncompleteInvolution";
  }
  return "Error";
}

void BitRel::or_row_into(std::size_t src, std::size_t dst) {
  std::uint64_t* d = row(dst);
  const std::uint64_t* s = row(src);
  for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
}

bool BitRel::row_subset(std::size_t i, std::size_t j) const {
  const std::uint64_t* a = row(i);
  const std::uint64_t* b = row(j);
  for (std::size_t w = 0; w < words_; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

std::size_t BitRel::row_count(std::size_t i) const {
  const std::uint64_t* a = row(i);
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += std::popcount(a[w]);
  return c;
}

BitRel BitRel::transpose() const {
  BitRel t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

namespace {

std::string pair_detail(const std::vector<std::string>& names, Id a, Id b) {
  return "(" + names[a] + ", " + names[b] + ")";
}

}  // namespace

// Shared implementation behind from_covers / from_leq / the diagnostic
// entry point. In collecting mode it records violations and keeps going;
// in throwing mode the first violation aborts the build.
struct LatticeBuilder {
  std::vector<std::string> names;
  BitRel up;
  bool collect = false;
  LatticeDiagnostics diag;
  bool fatal = false;  // structure too broken to derive tables

  void violation(Err kind, const std::string& law,
                 std::vector<std::string> witness, const std::string& detail) {
    if (!collect) fail(kind, law + " " + detail);
    diag.violations.push_back({law, std::move(witness), detail});
  }

  bool closure_from_covers(
      const std::vector<std::pair<std::string, std::string>>& covers) {
    std::size_t n = names.size();
    if (n == 0) {
      violation(Err::NoBottomTop, "nonempty", {}, "no elements given");
      fatal = true;
      return false;
    }
    if (n > Lattice::kMaxElements) {
      fail(Err::TooLarge, "element count " + std::to_string(n) +
                              " exceeds table limit " +
                              std::to_string(Lattice::kMaxElements));
    }
    std::unordered_map<std::string_view, Id> index;
    for (Id i = 0; i < n; ++i) {
      auto [it, fresh] = index.emplace(names[i], i);
      if (!fresh) fail(Err::DuplicatePair, "duplicate element name " + names[i]);
    }
    up = BitRel(n);
    for (Id i = 0; i < n; ++i) up.set(i, i);
    std::unordered_set<std::uint64_t> seen;
    for (const auto& [lo, hi] : covers) {
      auto a = index.find(lo);
      auto b = index.find(hi);
      if (a == index.end() || b == index.end())
        fail(Err::UnknownElement,
             "cover references unknown element in (" + lo + ", " + hi + ")");
      if (!seen.insert(std::uint64_t(a->second) << 32 | b->second).second)
        fail(Err::DuplicatePair, "cover " + pair_detail(names, a->second, b->second) +
                                     " listed twice");
      up.set(a->second, b->second);
    }
    // Reflexive-transitive closure, word-parallel over rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (up.get(i, k)) up.or_row_into(k, i);
    return check_antisymmetry();
  }

  bool check_antisymmetry() {
    std::size_t n = names.size();
    for (Id i = 0; i < n; ++i)
      for (Id j = Id(i + 1); j < n; ++j)
        if (up.get(i, j) && up.get(j, i)) {
          violation(Err::CycleDetected, "antisymmetry",
                    {names[i], names[j]},
                    "cycle through " + pair_detail(names, i, j));
          fatal = true;
          return false;
        }
    return true;
  }

  bool check_transitivity() {
    // Holds by construction after closure; verified anyway when the
    // relation is supplied directly.
    std::size_t n = names.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i != k && up.get(i, k) && !up.row_subset(k, i)) {
          violation(Err::CycleDetected, "transitivity",
                    {names[i], names[k]},
                    "relation not transitive at " + pair_detail(names, i, k));
          fatal = true;
          return false;
        }
      }
      if (!up.get(i, i)) {
        violation(Err::CycleDetected, "reflexivity", {names[i]},
                  "relation not reflexive at " + names[i]);
        fatal = true;
        return false;
      }
    }
    return true;
  }

  // Fills everything below; callers read the fields out of `out`.
  Lattice out;

  bool derive() {
    std::size_t n = names.size();
    BitRel down = up.transpose();

    std::optional<Id> bottom, top;
    bool bounds_ok = true;
    for (Id i = 0; i < n; ++i) {
      if (up.row_count(i) == n) {
        if (bottom) {
          violation(Err::NoBottomTop, "unique-bottom", {names[*bottom], names[i]},
                    "two minima " + pair_detail(names, *bottom, i));
          bounds_ok = false;
        }
        bottom = i;
      }
      if (down.row_count(i) == n) {
        if (top) {
          violation(Err::NoBottomTop, "unique-top", {names[*top], names[i]},
                    "two maxima " + pair_detail(names, *top, i));
          bounds_ok = false;
        }
        top = i;
      }
    }
    if (!bottom) {
      violation(Err::NoBottomTop, "bottom-exists", {}, "no least element");
      bounds_ok = false;
    }
    if (!top) {
      violation(Err::NoBottomTop, "top-exists", {}, "no greatest element");
      bounds_ok = false;
    }
    if (!bounds_ok) {
      fatal = true;
      return false;
    }

    // Linear extension: sort by down-set size (strictly monotone along <),
    // ties by id. With down-sets re-coordinatized by rank, the candidate
    // glb of a pair is the highest set bit of the intersection, and
    // uniqueness is one subset test against the candidate's down-set.
    std::vector<Id> by_rank(n);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::vector<std::size_t> weight(n);
    for (Id i = 0; i < n; ++i) weight[i] = down.row_count(i);
    std::stable_sort(by_rank.begin(), by_rank.end(),
                     [&](Id a, Id b) { return weight[a] < weight[b]; });
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[by_rank[r]] = r;

    BitRel rdown(n), rup(n);
    for (Id i = 0; i < n; ++i)
      for (Id j = 0; j < n; ++j) {
        if (up.get(j, i)) rdown.set(i, rank[j]);
        if (up.get(i, j)) rup.set(i, rank[j]);
      }

    std::size_t words = rdown.words();
    std::vector<std::uint64_t> tmp(words);
    out.meet_.assign(n * n, 0);
    out.join_.assign(n * n, 0);
    bool bounds_unique = true;

    auto scan = [&](const BitRel& rel, Id i, Id j, bool highest,
                    const char* law) -> std::optional<Id> {
      const std::uint64_t* a = rel.row(i);
      const std::uint64_t* b = rel.row(j);
      for (std::size_t w = 0; w < words; ++w) tmp[w] = a[w] & b[w];
      std::optional<std::size_t> pos;
      if (highest) {
        for (std::size_t w = words; w-- > 0;)
          if (tmp[w]) {
            pos = w * 64 + (63 - std::countl_zero(tmp[w]));
            break;
          }
      } else {
        for (std::size_t w = 0; w < words; ++w)
          if (tmp[w]) {
            pos = w * 64 + std::countr_zero(tmp[w]);
            break;
          }
      }
      if (!pos) {
        violation(Err::NoUniqueBound, law, {names[i], names[j]},
                  "no common bound for " + pair_detail(names, i, j));
        return std::nullopt;
      }
      Id cand = by_rank[*pos];
      const std::uint64_t* c = rel.row(cand);
      for (std::size_t w = 0; w < words; ++w)
        if (tmp[w] & ~c[w]) {
          violation(Err::NoUniqueBound, law, {names[i], names[j]},
                    "bound of " + pair_detail(names, i, j) + " not unique");
          return std::nullopt;
        }
      return cand;
    };

    for (Id i = 0; i < n && (bounds_unique || collect); ++i) {
      for (Id j = i; j < n; ++j) {
        auto m = scan(rdown, i, j, true, "unique-meet");
        auto v = scan(rup, i, j, false, "unique-join");
        if (!m || !v) {
          bounds_unique = false;
          if (!collect) return false;
          continue;
        }
        out.meet_[i * n + j] = out.meet_[j * n + i] = std::uint16_t(*m);
        out.join_[i * n + j] = out.join_[j * n + i] = std::uint16_t(*v);
      }
    }
    if (!bounds_unique) {
      fatal = true;
      return false;
    }

    out.names_ = names;
    out.up_ = up;
    out.down_ = std::move(down);
    out.bottom_ = *bottom;
    out.top_ = *top;
    return true;
  }

  void check_algebra() {
    std::size_t n = names.size();
    const Lattice& L = out;
    for (Id a = 0; a < n; ++a) {
      if (L.meet(a, a) != a || L.join(a, a) != a)
        violation(Err::NoUniqueBound, "idempotence", {names[a]},
                  "meet/join not idempotent at " + names[a]);
      for (Id b = 0; b < n; ++b) {
        if (L.meet(a, b) != L.meet(b, a) || L.join(a, b) != L.join(b, a))
          violation(Err::NoUniqueBound, "commutativity", {names[a], names[b]},
                    "tables asymmetric at " + pair_detail(names, a, b));
        if (L.meet(a, L.join(a, b)) != a || L.join(a, L.meet(a, b)) != a)
          violation(Err::NoUniqueBound, "absorption", {names[a], names[b]},
                    "absorption fails at " + pair_detail(names, a, b));
        bool mle = L.meet(a, b) == a;
        if (mle != L.leq(a, b))
          violation(Err::NoUniqueBound, "order-consistency",
                    {names[a], names[b]},
                    "meet disagrees with ≤ at " + pair_detail(names, a, b));
      }
    }
    if (n <= Lattice::kAssocCheckLimit) {
      for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
          for (Id c = 0; c < n; ++c) {
            if (L.meet(a, L.meet(b, c)) != L.meet(L.meet(a, b), c) ||
                L.join(a, L.join(b, c)) != L.join(L.join(a, b), c)) {
              violation(Err::NoUniqueBound, "associativity",
                        {names[a], names[b], names[c]},
                        "associativity fails at (" + names[a] + ", " +
                            names[b] + ", " + names[c] + ")");
              return;
            }
          }
    } else {
      diag.notes.push_back(
          "associativity: implied by uniqueness of bounds (exhaustive check "
          "skipped above " + std::to_string(Lattice::kAssocCheckLimit) +
          " elements)");
    }
  }
};

Lattice Lattice::from_covers(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  LatticeBuilder b;
  b.names = names;
  b.closure_from_covers(covers);
  b.derive();
  b.check_algebra();
  return std::move(b.out);
}

Lattice Lattice::from_leq(std::vector<std::string> names, BitRel up) {
  if (names.size() != up.size())
    fail(Err::WidthMismatch, "name list and relation size differ");
  if (names.size() > kMaxElements)
    fail(Err::TooLarge, "element count " + std::to_string(names.size()) +
                            " exceeds table limit " +
                            std::to_string(kMaxElements));
  if (names.empty()) fail(Err::NoBottomTop, "no elements given");
  LatticeBuilder b;
  b.names = std::move(names);
  b.up = std::move(up);
  {
    std::unordered_set<std::string_view> seen;
    for (const auto& nm : b.names)
      if (!seen.insert(nm).second)
        fail(Err::DuplicatePair, "duplicate element name " + nm);
  }
  b.check_transitivity();
  b.check_antisymmetry();
  b.derive();
  b.check_algebra();
  return std::move(b.out);
}

LatticeDiagnostics validate_complete_lattice(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  LatticeBuilder b;
  b.names = names;
  b.collect = true;
  if (b.closure_from_covers(covers) && b.derive() && !b.fatal)
    b.check_algebra();
  b.diag.notes.push_back(
      "continuity of meet/join along monotone nets holds automatically on a "
      "finite lattice; not searched");
  return std::move(b.diag);
}

Id Lattice::meet_all(const IdVec& xs) const {
  Id acc = top_;
  for (Id x : xs) {
    if (x >= size()) fail(Err::UnknownElement, "id out of range");
    acc = meet(acc, x);
  }
  return acc;
}

Id Lattice::join_all(const IdVec& xs) const {
  Id acc = bottom_;
  for (Id x : xs) {
    if (x >= size()) fail(Err::UnknownElement, "id out of range");
    acc = join(acc, x);
  }
  return acc;
}

std::optional<Id> Lattice::id_of(std::string_view name) const {
  for (Id i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Id Lattice::require_id(std::string_view name) const {
  auto i = id_of(name);
  if (!i) fail(Err::UnknownElement, std::string(name));
  return *i;
}

IdVec Lattice::down_set(Id a) const {
  IdVec r;
  for (Id i = 0; i < size(); ++i)
    if (up_.get(i, a)) r.push_back(i);
  return r;
}

IdVec Lattice::up_set(Id a) const {
  IdVec r;
  for (Id i = 0; i < size(); ++i)
    if (up_.get(a, i)) r.push_back(i);
  return r;
}

IdVec Lattice::atoms() const {
  IdVec r;
  for (Id i = 0; i < size(); ++i)
    if (down_.row_count(i) == 2) r.push_back(i);
  return r;
}

std::vector<std::pair<Id, Id>> Lattice::cover_pairs() const {
  // (a, b) is a cover iff the interval [a, b] is exactly {a, b}.
  std::vector<std::pair<Id, Id>> r;
  std::size_t n = size(), words = up_.words();
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      if (a == b || !up_.get(a, b)) continue;
      std::size_t between = 0;
      const std::uint64_t* ua = up_.row(a);
      const std::uint64_t* db = down_.row(b);
      for (std::size_t w = 0; w < words; ++w)
        between += std::popcount(ua[w] & db[w]);
      if (between == 2) r.emplace_back(a, b);
    }
  return r;
}

IdVec Lattice::inverses(Id a) const {
  IdVec r;
  for (Id x = 0; x < size(); ++x)
    if (join(a, x) == top_ && meet(a, x) == bottom_) r.push_back(x);
  return r;
}

}  // namespace ortholat
