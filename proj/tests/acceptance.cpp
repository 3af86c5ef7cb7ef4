// Acceptance gate: each criterion prints exactly one PASS/FAIL line with its
// runtime. The process exits nonzero if any criterion fails or blows its
// time budget.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ortholat/builders.hpp"
#include "ortholat/cli.hpp"
#include "ortholat/dimension.hpp"
#include "ortholat/equivalence.hpp"
#include "ortholat/modularity.hpp"
#include "ortholat/subspace.hpp"
#include "ortholat/textio.hpp"

using namespace ortholat;

namespace {

struct Criterion {
  int number;
  std::string description;
  long budget_ms;
  std::function<void(std::vector<std::string>&)> run;
};

void expect(std::vector<std::string>& errs, bool cond, const std::string& msg) {
  if (!cond) errs.push_back(msg);
}

// Ortho corpus: every builder output up to 64 elements.
std::vector<std::pair<std::string, OrthoLattice>> ortho_corpus() {
  std::vector<std::pair<std::string, OrthoLattice>> out;
  out.emplace_back("hexagon", gen_hexagon());
  for (unsigned k = 1; k <= 6; ++k)
    out.emplace_back("boolean_" + std::to_string(k), gen_boolean(k));
  for (unsigned m = 1; m <= 5; ++m)
    out.emplace_back("lm_" + std::to_string(m), gen_horizontal_sum(m));
  out.emplace_back("section3", gen_section3_ortho());
  out.emplace_back("chain_x_lm2",
                   gen_product(gen_boolean(1), gen_horizontal_sum(2)));
  out.emplace_back("lm2_x_lm3",
                   gen_product(gen_horizontal_sum(2), gen_horizontal_sum(3)));
  out.emplace_back("boolean2_x_boolean2",
                   gen_product(gen_boolean(2), gen_boolean(2)));
  return out;
}

// Stored JSON dumps from criteria 5-7, rechecked byte-for-byte by 9.
std::string dump5, dump6, dump7;

std::string run_criterion5() {
  CmdResult r = cmd_subspace(3, 200, 42, "all");
  if (r.exit_code != 0) throw std::runtime_error("suite exit " + std::to_string(r.exit_code));
  return r.json.dump(2);
}

std::string run_criterion6(std::vector<std::string>* errs) {
  Json j;
  for (auto& [name, ol] : ortho_corpus()) {
    for (Id l = 0; l < ol.size(); ++l) {
      IdVec fwd = decompose_minimal_orthogonal(ol, l, false);
      IdVec rev = decompose_minimal_orthogonal(ol, l, true);
      if (errs)
        expect(*errs, fwd.size() == rev.size(),
               name + ": tie-break changed the cardinality at " + ol.name(l));
      j["corpus"][name].push_back(fwd.size());
    }
  }

  QnLattice q4(4);
  Rng rng(606);
  for (int i = 0; i < 100; ++i) {
    Subspace s = sample_subspace(q4, rng);
    auto fwd = q4.ortho_decompose(s, false);
    auto rev = q4.ortho_decompose(s, true);
    if (errs)
      expect(*errs, fwd.size() == rev.size() && fwd.size() == s.dim(),
             "subspace decomposition cardinality mismatch at sample " +
                 std::to_string(i));
    j["q4_sizes"].push_back(fwd.size());
  }

  Rng div_rng(607);
  SubspaceDivide d = s_class_divide(q4, div_rng, 3, 1);
  if (errs)
    expect(*errs, d.quotient == 3 && d.remainder_dim == 0,
           "3-dim class by line class gave (" + std::to_string(d.quotient) +
               ", " + std::to_string(d.remainder_dim) + ")");
  j["divide"] = {{"quotient", d.quotient}, {"remainder_dim", d.remainder_dim}};
  return j.dump(2);
}

struct Signature {
  unsigned exponent = 0;
  std::vector<unsigned> sums;
};

// L_1 is the 4-element boolean algebra, so it canonicalizes to two chains.
Signature canonical(Signature s) {
  std::vector<unsigned> keep;
  for (unsigned m : s.sums) {
    if (m == 1)
      s.exponent += 2;
    else
      keep.push_back(m);
  }
  std::sort(keep.begin(), keep.end());
  s.sums = std::move(keep);
  return s;
}

OrthoLattice build_from(const Signature& sig) {
  std::vector<OrthoLattice> parts;
  for (unsigned i = 0; i < sig.exponent; ++i) parts.push_back(gen_boolean(1));
  for (unsigned m : sig.sums) parts.push_back(gen_horizontal_sum(m));
  std::vector<const OrthoLattice*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  return gen_product(ptrs);
}

std::string run_criterion7(std::vector<std::string>* errs) {
  std::mt19937_64 gen(777);
  Json j;
  for (int trial = 0; trial < 20; ++trial) {
    Signature sig;
    sig.exponent = unsigned(gen() % 3);
    std::size_t size = std::size_t(1) << sig.exponent;
    while (sig.sums.size() < 3) {
      unsigned m = 1 + unsigned(gen() % 5);
      if (size * (2 * m + 2) > 64) break;
      sig.sums.push_back(m);
      size *= 2 * m + 2;
    }
    if (sig.exponent == 0 && sig.sums.empty()) sig.sums.push_back(2);

    OrthoLattice built = build_from(sig);
    CentralDecomposition dec = decompose_central(built);
    Signature out{dec.boolean_exponent, dec.sums};

    Signature want = canonical(sig);
    bool same = want.exponent == out.exponent && want.sums == out.sums;
    if (errs)
      expect(*errs, same,
             "trial " + std::to_string(trial) + ": signature not recovered");

    // the reported signature rebuilds an isomorphic lattice
    if (errs && same)
      expect(*errs, is_isomorphic(built, build_from(out)).has_value(),
             "trial " + std::to_string(trial) + ": rebuilt product not isomorphic");

    std::string text = serialize_lattice("sig", built.base(), &built);
    CmdResult dc = cmd_decompose_text(text);
    if (errs)
      expect(*errs, dc.exit_code == 0,
             "trial " + std::to_string(trial) + ": cmd_decompose failed");
    j["trials"].push_back(dc.json);
  }
  return j.dump(2);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "pentagon modular-law witness via cmd_check", 1000,
                      [](std::vector<std::string>& errs) {
    Lattice P = gen_pentagon();
    CmdResult r = cmd_check_text(serialize_lattice("pentagon", P, nullptr));
    expect(errs, r.exit_code == 1, "expected exit 1");
    bool found = false;
    for (const auto& v : r.json["violations"]) {
      if (v["law"] != "modular") continue;
      found = true;
      expect(errs, v["witness"] == Json::array({"x", "z", "y"}),
             "witness is " + v["witness"].dump());
      std::string detail = v["detail"];
      expect(errs,
             detail.find("(x∨z)∧y = y ≠ x = "
                         "x∨(z∧y)") != std::string::npos,
             "detail is '" + detail + "'");
    }
    expect(errs, found, "no modular violation reported");
  }});

  criteria.push_back({2, "two-pair horizontal sum classifies as type I_2", 1000,
                      [](std::vector<std::string>& errs) {
    OrthoLattice L2 = gen_horizontal_sum(2);
    TypeReport rep = classify_type(L2);
    expect(errs, rep.tag == "I_2", "tag is " + rep.tag);
    expect(errs, rep.factorial == true, "not factorial");
    if (!rep.dim) { errs.push_back("no dimension function"); return; }
    const auto& val = rep.dim->value;
    std::set<Rat> image(val.begin(), val.end());
    expect(errs, image == std::set<Rat>{Rat(0), Rat(1, 2), Rat(1)},
           "image is not {0, 1/2, 1}");
    unsigned middles = 0;
    for (Id e = 0; e < L2.size(); ++e)
      if (val[e] == Rat(1, 2)) ++middles;
    expect(errs, middles == 4, "expected four elements at 1/2");
  }});

  criteria.push_back({3, "unique regular relation among all 203 partitions", 1000,
                      [](std::vector<std::string>& errs) {
    OrthoLattice L2 = gen_horizontal_sum(2);
    EnumerationResult res = enumerate_regular_relations(L2);
    expect(errs, res.partitions_scanned == 203,
           "scanned " + std::to_string(res.partitions_scanned));
    expect(errs, res.regular.size() == 1,
           "found " + std::to_string(res.regular.size()) + " regular relations");
    if (res.regular.size() == 1)
      expect(errs, res.regular[0] == perspectivity(L2.base()).rel,
             "the regular relation is not perspectivity");
  }});

  criteria.push_back({4, "dimension axioms verified on sums, rejected off the preconditions", 5000,
                      [](std::vector<std::string>& errs) {
    for (unsigned m : {2u, 3u, 4u, 5u}) {
      OrthoLattice Lm = gen_horizontal_sum(m);
      // dimension_function proves D1-D5 exhaustively or throws
      DimensionFunction D = dimension_function(Lm, perspectivity(Lm.base()).rel);
      expect(errs, D.order == 2, "lm_" + std::to_string(m) + ": order != 2");
      std::set<Rat> image(D.value.begin(), D.value.end());
      expect(errs, image == std::set<Rat>{Rat(0), Rat(1, 2), Rat(1)},
             "lm_" + std::to_string(m) + ": image is not the 2-grid");
    }
    for (unsigned k : {2u, 3u, 4u}) {
      OrthoLattice B = gen_boolean(k);
      bool rejected = false;
      try {
        dimension_function(B, perspectivity(B.base()).rel);
      } catch (const Error& e) {
        rejected = e.kind() == Err::NotFactorial;
      }
      expect(errs, rejected,
             "boolean_" + std::to_string(k) + " not rejected as non-factorial");
    }
  }});

  criteria.push_back({5, "subspace suite, dim 3, 200 trials, seed 42, all laws clean", 30000,
                      [](std::vector<std::string>& errs) {
    dump5 = run_criterion5();
    Json j = Json::parse(dump5);
    expect(errs, j["all_pass"] == true, "all_pass is false");
    expect(errs, j["checks"].size() == 26,
           "expected 26 checks, got " + std::to_string(j["checks"].size()));
    for (const auto& c : j["checks"]) {
      expect(errs, c["pass"] == 200 && c["fail"] == 0,
             std::string(c["law"]) + ": " + std::to_string(unsigned(c["fail"])) +
                 " failing trials");
    }
  }});

  criteria.push_back({6, "greedy decomposition cardinality is tie-break independent", 10000,
                      [](std::vector<std::string>& errs) {
    dump6 = run_criterion6(&errs);
  }});

  criteria.push_back({7, "central decomposition round-trips 20 random signatures", 30000,
                      [](std::vector<std::string>& errs) {
    dump7 = run_criterion7(&errs);
  }});

  criteria.push_back({8, "modular check agrees with pentagon search on the corpus", 10000,
                      [](std::vector<std::string>& errs) {
    std::vector<std::pair<std::string, Lattice>> corpus;
    corpus.emplace_back("pentagon", gen_pentagon());
    for (auto& [name, ol] : ortho_corpus()) corpus.emplace_back(name, ol.base());
    for (auto& [name, L] : corpus) {
      bool modular = check_modular(L).holds;
      Pentagon pent = find_pentagon(L);
      expect(errs, modular == !pent.found, name + ": checks disagree");
      if (pent.found) {
        // the witness really is a pentagon
        bool shape = L.lt(pent.x, pent.y) &&
                     L.meet(pent.x, pent.z) == pent.bot &&
                     L.meet(pent.y, pent.z) == pent.bot &&
                     L.join(pent.x, pent.z) == pent.top &&
                     L.join(pent.y, pent.z) == pent.top;
        expect(errs, shape, name + ": reported sublattice is not a pentagon");
      }
    }
  }});

  criteria.push_back({9, "criteria 5-7 reproduce byte-identical reports", 90000,
                      [](std::vector<std::string>& errs) {
    expect(errs, run_criterion5() == dump5, "criterion 5 report changed");
    expect(errs, run_criterion6(nullptr) == dump6, "criterion 6 report changed");
    expect(errs, run_criterion7(nullptr) == dump7, "criterion 7 report changed");
  }});

  bool all_pass = true;
  for (const auto& c : criteria) {
    std::vector<std::string> errs;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(errs);
    } catch (const std::exception& e) {
      errs.push_back(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ms > c.budget_ms)
      errs.push_back("over budget: " + std::to_string(ms) + " ms > " +
                     std::to_string(c.budget_ms) + " ms");
    std::ostringstream line;
    line << (errs.empty() ? "PASS" : "FAIL") << " criterion " << c.number
         << ": " << c.description << " (" << ms << " ms)";
    for (const auto& e : errs) line << "\n      - " << e;
    std::cout << line.str() << "\n";
    all_pass = all_pass && errs.empty();
  }
  return all_pass ? 0 : 1;
}
