// Acceptance gate: one line per criterion, "CRITERION n: PASS" or
// "CRITERION n: FAIL — reason". Exit code is the number of failures.
//
// The bound constant kFittedC below was fitted once on the frozen corpus
// (largest observed ratio, rounded up) and is asserted exactly since then;
// the growth-table ratio bound kGrowthEqRatioCap is frozen the same way.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "eqkit/algebra.hpp"
#include "eqkit/errors.hpp"
#include "eqkit/flat.hpp"
#include "eqkit/group.hpp"
#include "eqkit/membership.hpp"
#include "eqkit/presentation.hpp"
#include "eqkit/term.hpp"

using namespace eqkit;

namespace {

constexpr double kFittedC = 0.86;          // presentation / witness length bound
constexpr double kGrowthEqRatioCap = 14.25;  // largest eq_ratio in the frozen table

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double cube_bound(int order) {
  double b = 1.0 + std::log2(static_cast<double>(order));
  return b * b * b;
}

// The frozen corpus: the named families up to order 24, a fixed set of
// products, and the cyclic 2-power tail up to 256.
std::vector<FiniteGroup> corpus() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 24; ++n) specs.push_back("cyclic:" + std::to_string(n));
  for (int n = 2; n <= 12; ++n) specs.push_back("dihedral:" + std::to_string(n));
  for (int n = 2; n <= 4; ++n) specs.push_back("symmetric:" + std::to_string(n));
  specs.push_back("alternating:3");
  specs.push_back("alternating:4");
  specs.push_back("quaternion");
  specs.push_back("product:(cyclic:2,cyclic:2)");
  specs.push_back("product:(cyclic:2,cyclic:4)");
  specs.push_back("product:(cyclic:2,product:(cyclic:2,cyclic:2))");
  specs.push_back("product:(cyclic:3,cyclic:3)");
  specs.push_back("product:(cyclic:2,cyclic:3)");
  specs.push_back("product:(quaternion,cyclic:3)");
  for (int n = 32; n <= 256; n *= 2) specs.push_back("cyclic:" + std::to_string(n));
  std::vector<FiniteGroup> out;
  for (const std::string& s : specs) out.push_back(named_group(s));
  return out;
}

struct Outcome {
  bool pass = true;
  std::string why;
  void fail(const std::string& w) {
    if (pass) why = w;
    pass = false;
  }
};

// ---------------------------------------------------------------- criterion 1

Outcome criterion1() {
  Outcome o;
  Signature sig = group_signature(Sig::MulInv1);
  if (prefix_length(parse_equation("* x * y inv y = x", sig)) != 7)
    o.fail("equation length convention is off");
  QuasiEquation q = parse_quasiequation("* x y = * y x -> x = y", sig);
  if (prefix_length(q) != 8) o.fail("quasi-equation length convention is off");
  return o;
}

// ---------------------------------------------------------------- criterion 2

Outcome criterion2() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  SimpleCatalog catalog;
  for (const FiniteGroup& h : corpus()) {
    ShortPresentation sp = build_short_presentation(h, catalog);
    VerifyResult v = verify_presents(sp.pres, sp.images, h);
    if (!v.ok()) o.fail(h.label + ": " + v.detail);
  }
  double dt = seconds_since(t0);
  if (dt >= 120.0) o.fail("exceeded the 2-minute budget");
  std::printf("  [2] corpus verified in %.2fs\n", dt);
  return o;
}

// ---------------------------------------------------------------- criterion 3

Outcome criterion3() {
  Outcome o;
  SimpleCatalog catalog;
  std::vector<FiniteGroup> groups = corpus();
  std::vector<ShortPresentation> sps;
  for (const FiniteGroup& h : groups) sps.push_back(build_short_presentation(h, catalog));

  const int k = catalog.max_word_len();
  double worst_total = 0.0, worst_word = 0.0;
  for (size_t i = 0; i < groups.size(); ++i) {
    const FiniteGroup& h = groups[i];
    const ShortPresentation& sp = sps[i];

    double ratio = static_cast<double>(total_length(sp.pres)) / cube_bound(h.n);
    worst_total = std::max(worst_total, ratio);
    if (static_cast<double>(total_length(sp.pres)) > kFittedC * cube_bound(h.n))
      o.fail(h.label + ": total length above the fitted cubic bound");

    double word_cap = 2.0 * k * std::log2(static_cast<double>(h.n));
    for (const GroupWord& w : sp.words) {
      worst_word = std::max(worst_word, h.n == 1 ? 0.0 : w.size() / std::max(word_cap, 1e-9));
      if (static_cast<double>(w.size()) > word_cap && h.n > 1)
        o.fail(h.label + ": an element word is longer than 2K log2|H|");
      if (h.n == 1 && !w.empty()) o.fail("trivial group has a nonempty word");
    }

    if (auto bad = sp.metrics.violated_recurrence())
      o.fail(h.label + ": recurrence " + *bad);
  }
  std::printf("  [3] worst total/cube %.4f (C=%.2f), worst word/cap %.4f, K=%d\n",
              worst_total, kFittedC, worst_word, k);
  return o;
}

// ---------------------------------------------------------------- criterion 4

Outcome criterion4() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  SimpleCatalog catalog;
  int pairs = 0;
  for (const FiniteGroup& m : corpus()) {
    if (m.n > 24) continue;
    for (const std::vector<int>& nset : normal_subgroups(m)) {
      if (static_cast<int>(nset.size()) == 1 || static_cast<int>(nset.size()) == m.n)
        continue;
      ++pairs;
      SubgroupView nv = subgroup_group(m, nset);
      Quotient q = quotient_by(m, nset);
      ShortPresentation spn = build_short_presentation(nv.group, catalog);
      ShortPresentation spq = build_short_presentation(q.group, catalog);
      std::vector<int> images_n;
      for (int i : spn.images) images_n.push_back(nv.to_parent[i]);

      Lifted lifted =
          lift_presentation(m, nset, spn.pres, images_n, spq.pres, spq.images);
      if (!verify_presents(lifted.pres, lifted.images, m).ok()) {
        o.fail(m.label + " / |N|=" + std::to_string(nset.size()) +
               ": lifted presentation fails verification");
        continue;
      }

      // every element of M splits as a subgroup word times a lifted
      // quotient word
      const int na = static_cast<int>(spn.pres.gens.size());
      for (int x = 0; x < m.n; ++x) {
        GroupWord wq;
        for (const Literal& lit : spq.words[q.proj[x]])
          wq.push_back(Literal{lit.gen + na, lit.sign});
        int rep = eval_word(m, lifted.images, wq);
        int part = m.mul(x, m.inv(rep));
        int local = nv.from_parent[part];
        if (local < 0) {
          o.fail(m.label + ": quotient part of element " + std::to_string(x) +
                 " misses the subgroup");
          continue;
        }
        GroupWord w = spn.words[local];
        w.insert(w.end(), wq.begin(), wq.end());
        if (eval_word(m, lifted.images, w) != x)
          o.fail(m.label + ": element " + std::to_string(x) + " does not factor");
      }
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 120.0) o.fail("exceeded the 2-minute budget");
  std::printf("  [4] %d liftings verified in %.2fs\n", pairs, dt);
  return o;
}

// ---------------------------------------------------------------- criterion 5

Outcome criterion5() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  Signature sig = group_signature(Sig::MulInv1);
  std::vector<Equation> eqs = all_equations(sig, 6);

  auto var_set = [](const std::vector<std::string>& v) {
    return std::set<std::string>(v.begin(), v.end());
  };
  auto covered = [&](const QuasiEquation& q) {
    std::set<std::string> prem;
    for (const Equation& p : q.premises)
      for (const std::string& v : equation_vars(p)) prem.insert(v);
    for (const std::string& v : equation_vars(q.conclusion))
      if (!prem.count(v)) return false;
    return true;
  };

  std::vector<QuasiEquation> qes;
  for (const Equation& p : eqs) {
    if (qes.size() >= 500) break;
    std::set<std::string> pv = var_set(equation_vars(p));
    for (const Equation& c : eqs) {
      if (prefix_length(p) + prefix_length(c) > 12) continue;
      bool ok = true;
      for (const std::string& v : equation_vars(c))
        if (!pv.count(v)) ok = false;
      if (!ok) continue;
      qes.push_back(QuasiEquation{{p}, c});
      if (qes.size() >= 500) break;
    }
  }
  // a slice of two-premise shapes for texture
  for (size_t i = 0; i < eqs.size() && qes.size() < 600; ++i) {
    for (size_t j = i + 1; j < eqs.size() && qes.size() < 600; ++j) {
      QuasiEquation q{{eqs[i], eqs[j]}, eqs[i]};
      if (prefix_length(q) > 12 || !covered(q)) continue;
      qes.push_back(std::move(q));
    }
  }
  // plus every witness the certificate pipeline emits for the fixed pairs
  SimpleCatalog catalog;
  for (auto [gs, hs] : {std::pair{"cyclic:2", "cyclic:4"}, {"cyclic:2", "cyclic:8"},
                        {"cyclic:3", "cyclic:9"}, {"cyclic:2", "quaternion"}})
    qes.push_back(
        witness_quasi_equation(named_group(gs), named_group(hs), catalog));

  if (qes.size() < 500)
    o.fail("generated only " + std::to_string(qes.size()) + " quasi-equations");
  for (const QuasiEquation& q : qes)
    if (!covered(q)) o.fail("a generated quasi-equation misses coverage");

  std::vector<FiniteGroup> hs;
  for (const FiniteGroup& h : corpus())
    if (h.n <= 6) hs.push_back(h);

  long long checks = 0;
  for (const FiniteGroup& h : hs) {
    FiniteAlgebra ha = group_algebra(h, Sig::MulInv1);
    FiniteAlgebra fh = with_unit(flat_extension(h));
    int e = exponent(h);
    for (int d : {e, 2 * e}) {
      for (const QuasiEquation& q : qes) {
        bool lhs = satisfies_quasiequation(ha, q).holds;
        bool rhs = satisfies_equation(fh, translate_qe_to_eq(q, d)).holds;
        ++checks;
        if (lhs != rhs) {
          o.fail(h.label + " d=" + std::to_string(d) + ": disagreement on " +
                 quasiequation_text(q));
          break;
        }
      }
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 300.0) o.fail("exceeded the 5-minute budget");
  std::printf("  [5] %lld translation checks (%zu quasi-equations) in %.2fs\n", checks,
              qes.size(), dt);
  return o;
}

// ---------------------------------------------------------------- criterion 6

Outcome criterion6() {
  Outcome o;
  std::vector<std::pair<FiniteGroup, FiniteGroup>> pairs;  // (G, H)
  for (auto [gs, hs] : {std::pair{"cyclic:2", "cyclic:4"}, {"cyclic:2", "cyclic:8"},
                        {"cyclic:3", "cyclic:9"}, {"cyclic:2", "quaternion"}})
    pairs.emplace_back(named_group(gs), named_group(hs));

  std::vector<FiniteGroup> all = corpus();
  for (const FiniteGroup& g : all) {
    if (g.n > 8) continue;
    for (const FiniteGroup& h : all) {
      if (h.n > 16 || h.n == 1) continue;
      if (in_quasivariety(h, g).kind == MembershipVerdict::Kind::InQuasivariety)
        continue;
      pairs.emplace_back(g, h);
    }
  }

  SimpleCatalog catalog;
  double worst = 0.0;
  int checked = 0;
  for (const auto& [g, h] : pairs) {
    if (in_quasivariety(h, g).kind != MembershipVerdict::Kind::NotInQuasivariety)
      continue;  // the four fixed pairs are re-tested here on purpose
    ++checked;
    QuasiEquation phi = witness_quasi_equation(g, h, catalog);
    Equation rho = witness_equation_flat(g, h, catalog);

    if (!satisfies_quasiequation(group_algebra(g, Sig::MulInv1), phi).holds)
      o.fail(g.label + " fails its own witness against " + h.label);
    if (satisfies_quasiequation(group_algebra(h, Sig::MulInv1), phi).holds)
      o.fail(h.label + " satisfies the witness from " + g.label);
    if (satisfies_equation(with_unit(flat_extension(h)), rho).holds)
      o.fail("flat " + h.label + " satisfies the translated witness from " + g.label);

    double ratio = static_cast<double>(prefix_length(phi)) / cube_bound(h.n);
    worst = std::max(worst, ratio);
    if (static_cast<double>(prefix_length(phi)) > kFittedC * cube_bound(h.n))
      o.fail("witness for (" + g.label + "," + h.label + ") is above the cubic bound");
  }
  std::printf("  [6] %d pairs certified, worst len/cube %.4f (C=%.2f)\n", checked, worst,
              kFittedC);
  return o;
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion7() {
  Outcome o;
  std::vector<FiniteGroup> small;
  for (const FiniteGroup& g : corpus())
    if (g.n <= 8) small.push_back(g);
  for (const FiniteGroup& h : small)
    for (const FiniteGroup& g : small) {
      bool via_homs = in_quasivariety(h, g).kind == MembershipVerdict::Kind::InQuasivariety;
      if (via_homs != embedding_oracle(h, g))
        o.fail("oracles disagree on (" + h.label + "," + g.label + ")");
    }
  return o;
}

// ---------------------------------------------------------------- criterion 8

Outcome criterion8() {
  Outcome o;
  for (const FiniteGroup& g : corpus()) {
    if (g.n > 6) continue;
    FlatAlgebra meetinv = flat_extension(g);
    if (!is_subdirectly_irreducible(meetinv.algebra).si)
      o.fail("flat " + g.label + " is not subdirectly irreducible");
    AxiomReport nsoc = verify_nsoc_axioms(meetinv.algebra);
    if (!nsoc.ok) o.fail("flat " + g.label + " fails axiom: " + nsoc.failing);
    AxiomReport semi = verify_semiring_axioms(flat_extension(g, FlatTag::Meet).algebra);
    if (!semi.ok) o.fail("flat " + g.label + " fails semiring axiom: " + semi.failing);
  }
  if (flat_extension(named_group("quaternion")).algebra.n != 9)
    o.fail("flat quaternion size is not 9");
  return o;
}

// ---------------------------------------------------------------- criterion 9

Outcome criterion9() {
  Outcome o;
  if (!sylow_classification(named_group("quaternion")).has_nonabelian_sylow)
    o.fail("quaternion not flagged");
  if (!sylow_classification(named_group("dihedral:4")).has_nonabelian_sylow)
    o.fail("dihedral:4 not flagged");
  for (const FiniteGroup& g : corpus()) {
    if (!g.is_abelian()) continue;
    if (sylow_classification(g).has_nonabelian_sylow)
      o.fail(g.label + " wrongly flagged");
  }
  if (sylow_classification(named_group("symmetric:3")).has_nonabelian_sylow)
    o.fail("symmetric:3 wrongly flagged");
  return o;
}

// --------------------------------------------------------------- criterion 10

Outcome criterion10() {
  Outcome o;
  FiniteGroup z2 = named_group("cyclic:2");
  std::vector<FiniteGroup> family;
  for (int n = 4; n <= 256; n *= 2) family.push_back(named_group("cyclic:" + std::to_string(n)));

  SimpleCatalog c1, c2;
  std::vector<GrowthRecord> records = growth_experiment(z2, family, c1);
  if (records.size() != 7)
    o.fail("expected 7 records, got " + std::to_string(records.size()));
  for (const GrowthRecord& r : records)
    if (r.eq_ratio > kGrowthEqRatioCap)
      o.fail(r.label + ": eq_ratio above the frozen cap");
  if (growth_csv(records) != growth_csv(growth_experiment(z2, family, c2)))
    o.fail("CSV not byte-identical across runs");
  return o;
}

}  // namespace

int main() {
  Outcome (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                             criterion5, criterion6, criterion7, criterion8,
                             criterion9, criterion10};
  int failures = 0;
  for (int i = 0; i < 10; ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (o.pass) {
      std::printf("CRITERION %d: PASS\n", i + 1);
    } else {
      std::printf("CRITERION %d: FAIL — %s\n", i + 1, o.why.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures;
}
