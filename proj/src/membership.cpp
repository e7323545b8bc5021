#include "eqkit/membership.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqkit/errors.hpp"

namespace eqkit {

namespace {

int eval_word(const FiniteGroup& g, const GroupWord& w, const std::vector<int>& images) {
  int acc = g.identity;
  for (const Literal& lit : w) {
    int x = images[lit.gen];
    if (lit.sign < 0) x = g.inv(x);
    acc = g.mul(acc, x);
  }
  return acc;
}

Term word_term(const Presentation& pres, const GroupWord& w) {
  if (w.empty()) return tapp("1");
  auto letter = [&pres](const Literal& lit) {
    Term t = tvar(pres.gens[lit.gen]);
    return lit.sign < 0 ? tapp("inv", {std::move(t)}) : t;
  };
  Term acc = letter(w[0]);
  for (size_t i = 1; i < w.size(); ++i) acc = tapp("*", {std::move(acc), letter(w[i])});
  return acc;
}

int eval_term(const FiniteAlgebra& a, const Term& t, const std::map<std::string, int>& env) {
  if (t.is_var) return env.at(t.head);
  int op = a.op_index(t.head);
  if (op < 0)
    throw ParseError(ParseError::Kind::UnknownSymbol,
                     "eval: operation '" + t.head + "' is not in the algebra's signature");
  switch (a.sig.ops[op].arity) {
    case 0: return a.apply0(op);
    case 1: return a.apply1(op, eval_term(a, t.args[0], env));
    default: return a.apply2(op, eval_term(a, t.args[0], env), eval_term(a, t.args[1], env));
  }
}

// Backtracking check that every generator assignment satisfying all the
// relations also maps the witness word to the identity. Relations are
// evaluated as soon as their last generator is assigned, pruning subtrees
// with a failed premise (those satisfy the quasi-equation vacuously).
bool models_witness(const FiniteGroup& g, const Presentation& pres, const GroupWord& witness,
                    long long budget) {
  const int m = static_cast<int>(pres.gens.size());
  std::vector<std::vector<const Relation*>> due(m + 1);
  for (const Relation& r : pres.rels) {
    int last = -1;
    for (const Literal& lit : r.lhs) last = std::max(last, lit.gen);
    for (const Literal& lit : r.rhs) last = std::max(last, lit.gen);
    due[std::max(last, 0)].push_back(&r);  // variable-free relations join bucket 0
  }

  std::vector<int> images(m, 0);
  long long nodes = 0;
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth > 0)
      for (const Relation* r : due[depth - 1])
        if (eval_word(g, r->lhs, images) != eval_word(g, r->rhs, images))
          return true;  // premise fails: vacuously fine below here
    if (depth == m) return eval_word(g, witness, images) == g.identity;
    for (int c = 0; c < g.n; ++c) {
      if (++nodes > budget)
        throw BudgetError("AssignmentBudgetExceeded",
                          "witness check: generator assignment budget exceeded after " +
                              std::to_string(nodes - 1) + " nodes");
      images[depth] = c;
      if (!self(self, depth + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace

MembershipVerdict in_quasivariety(const FiniteGroup& h, const FiniteGroup& g,
                                  long long budget) {
  std::vector<Homomorphism> homs = homomorphisms(h, g, budget);

  MembershipVerdict v;
  std::vector<int> killed;
  for (int x = 0; x < h.n; ++x) {
    if (x == h.identity) continue;
    bool separated = false;
    for (const Homomorphism& hom : homs)
      if (hom.map[x] != g.identity) {
        separated = true;
        break;
      }
    if (!separated) killed.push_back(x);
  }

  if (!killed.empty()) {
    v.kind = MembershipVerdict::Kind::NotInQuasivariety;
    v.witness = killed.front();
    return v;
  }
  v.kind = MembershipVerdict::Kind::InQuasivariety;
  std::set<std::vector<int>> seen;
  for (int x = 0; x < h.n; ++x) {
    if (x == h.identity) continue;
    for (const Homomorphism& hom : homs)
      if (hom.map[x] != g.identity) {
        if (seen.insert(hom.map).second) v.separating.push_back(hom);
        break;
      }
  }
  return v;
}

bool embedding_oracle(const FiniteGroup& h, const FiniteGroup& g, long long budget) {
  if (h.n > 8) throw PreconditionError("embedding_oracle: |H| must be <= 8");
  if (h.n == 1) return true;

  std::vector<Homomorphism> homs = homomorphisms(h, g, budget);

  // Greedy chain: while some element is still unseparated, add the first
  // hom separating the least such element. Each step strictly shrinks the
  // joint kernel, so for |H| <= 8 at most three homs are ever needed.
  std::vector<const Homomorphism*> family;
  std::vector<char> in_kernel(h.n, 1);  // joint kernel of the family so far
  for (;;) {
    int x = -1;
    for (int y = 0; y < h.n; ++y)
      if (y != h.identity && in_kernel[y]) {
        x = y;
        break;
      }
    if (x < 0) break;
    const Homomorphism* found = nullptr;
    for (const Homomorphism& hom : homs)
      if (hom.map[x] != g.identity) {
        found = &hom;
        break;
      }
    if (!found) return false;  // x is killed by every hom: no embedding exists
    family.push_back(found);
    for (int y = 0; y < h.n; ++y)
      if (found->map[y] != g.identity) in_kernel[y] = 0;
  }
  if (family.size() > 4)
    throw PreconditionError("embedding_oracle: separating family larger than 4");

  // Materialise G^|family| and verify the product map really is an
  // injective homomorphism.
  FiniteGroup p = g;
  for (size_t i = 1; i < family.size(); ++i) p = direct_product(p, g);
  std::vector<int> map(h.n);
  for (int x = 0; x < h.n; ++x) {
    int idx = 0;
    for (const Homomorphism* hom : family) idx = idx * g.n + hom->map[x];
    map[x] = idx;
  }
  std::set<int> distinct(map.begin(), map.end());
  if (static_cast<int>(distinct.size()) != h.n)
    throw VerificationError("embedding_oracle: separating family failed to embed " + h.label);
  if (!is_homomorphism(h, p, map))
    throw VerificationError("embedding_oracle: product map is not a homomorphism");
  return true;
}

QuasiEquation witness_quasi_equation(const FiniteGroup& g, const FiniteGroup& h,
                                     SimpleCatalog& catalog, long long budget) {
  MembershipVerdict v = in_quasivariety(h, g, budget);
  if (v.kind != MembershipVerdict::Kind::NotInQuasivariety)
    throw PreconditionError("witness_quasi_equation: " + h.label +
                            " is in the quasivariety of " + g.label);

  ShortPresentation sp = build_short_presentation(h, catalog);
  GroupWord w = express_element(sp, v.witness);

  QuasiEquation phi;
  for (const Relation& r : sp.pres.rels)
    phi.premises.push_back(Equation{word_term(sp.pres, r.lhs), word_term(sp.pres, r.rhs)});
  phi.conclusion = Equation{word_term(sp.pres, w), tapp("1")};

  // G side: every relator-satisfying assignment must kill the witness word.
  if (!models_witness(g, sp.pres, w, budget))
    throw VerificationError("witness_quasi_equation: " + g.label +
                            " does not satisfy the built quasi-equation");
  // H side: the generator images satisfy the premises and beat the
  // conclusion.
  for (const Relation& r : sp.pres.rels)
    if (eval_word(h, r.lhs, sp.images) != eval_word(h, r.rhs, sp.images))
      throw VerificationError("witness_quasi_equation: presentation relation fails on " +
                              h.label);
  if (eval_word(h, w, sp.images) != v.witness || v.witness == h.identity)
    throw VerificationError("witness_quasi_equation: witness word does not reach the witness");
  return phi;
}

Equation witness_equation_flat(const FiniteGroup& g, const FiniteGroup& h,
                               SimpleCatalog& catalog, long long budget) {
  QuasiEquation phi = witness_quasi_equation(g, h, catalog, budget);
  Equation eq = translate_qe_to_eq(phi, exponent(g));

  try {
    if (!satisfies_equation(with_unit(flat_extension(g)), eq, budget).holds)
      throw VerificationError("witness_equation_flat: equation fails on the flat extension of " +
                              g.label);
  } catch (const BudgetError&) {
    // assignment space too large; the quasi-equation level checks stand
  }

  FiniteAlgebra fh = with_unit(flat_extension(h));
  bool checked = false;
  try {
    if (satisfies_equation(fh, eq, budget).holds)
      throw VerificationError("witness_equation_flat: equation holds on the flat extension of " +
                              h.label);
    checked = true;
  } catch (const BudgetError&) {
  }
  if (!checked) {
    // fall back to the falsifying generator assignment
    ShortPresentation sp = build_short_presentation(h, catalog);
    std::map<std::string, int> env;
    for (size_t i = 0; i < sp.pres.gens.size(); ++i) env[sp.pres.gens[i]] = sp.images[i];
    if (eval_term(fh, eq.lhs, env) == eval_term(fh, eq.rhs, env))
      throw VerificationError(
          "witness_equation_flat: generator assignment does not falsify the equation on the "
          "flat extension of " +
          h.label);
  }
  return eq;
}

MembershipVerdict in_variety_of_flat(const FiniteAlgebra& b, const FiniteGroup& g, int cap,
                                     long long budget) {
  if (b.sig != flat_signature(FlatTag::MeetInv) && b.sig != flat_signature(FlatTag::Meet))
    throw PreconditionError("in_variety_of_flat: B must be in a flat signature");

  for (FiniteAlgebra& q : si_quotients(b, cap)) {
    FlatRecognition r = recognize_flat(q);
    bool ok = r.flat;
    if (ok)
      ok = in_quasivariety(r.group, g, budget).kind == MembershipVerdict::Kind::InQuasivariety;
    if (!ok) {
      MembershipVerdict v;
      v.kind = MembershipVerdict::Kind::NotInVariety;
      v.witness_algebra = std::move(q);
      return v;
    }
  }
  MembershipVerdict v;
  v.kind = MembershipVerdict::Kind::InVariety;
  return v;
}

std::optional<Equation> shortest_failing_equation(const FiniteAlgebra& b,
                                                  const FiniteAlgebra& a, int max_len,
                                                  long long budget, int len_cap) {
  if (b.sig != a.sig)
    throw PreconditionError("shortest_failing_equation: the algebras must share a signature");
  for (const Equation& e : enumerate_equations(a, max_len, budget, len_cap))
    if (!satisfies_equation(b, e, budget).holds) return e;
  return std::nullopt;
}

std::vector<GrowthRecord> growth_experiment(const FiniteGroup& g,
                                            const std::vector<FiniteGroup>& family,
                                            SimpleCatalog& catalog, long long budget) {
  std::vector<GrowthRecord> out;
  int last = 0;
  for (const FiniteGroup& h : family) {
    if (h.n < last)
      throw PreconditionError("growth_experiment: family must be sorted by order (" + h.label +
                              " is out of place)");
    last = h.n;
    if (in_quasivariety(h, g, budget).kind == MembershipVerdict::Kind::InQuasivariety)
      throw PreconditionError("growth_experiment: " + h.label + " is in the quasivariety of " +
                              g.label);

    GrowthRecord rec;
    rec.label = h.label;
    rec.order = h.n;
    rec.pres_len = total_length(build_short_presentation(h, catalog).pres);
    QuasiEquation phi = witness_quasi_equation(g, h, catalog, budget);
    rec.qe_len = prefix_length(phi);
    rec.eq_len = prefix_length(witness_equation_flat(g, h, catalog, budget));
    double lg = std::log2(static_cast<double>(h.n));
    rec.log2cube = lg * lg * lg;
    rec.pres_ratio = static_cast<double>(rec.pres_len) / rec.log2cube;
    rec.qe_ratio = static_cast<double>(rec.qe_len) / rec.log2cube;
    rec.eq_ratio = static_cast<double>(rec.eq_len) / rec.log2cube;
    out.push_back(std::move(rec));
  }
  return out;
}

std::string growth_csv(const std::vector<GrowthRecord>& records) {
  std::string csv = "label,order,pres_len,qe_len,eq_len,log2cube,pres_ratio,qe_ratio,eq_ratio\n";
  char buf[160];
  for (const GrowthRecord& r : records) {
    std::snprintf(buf, sizeof buf, ",%d,%lld,%d,%d,%.6f,%.6f,%.6f,%.6f\n", r.order, r.pres_len,
                  r.qe_len, r.eq_len, r.log2cube, r.pres_ratio, r.qe_ratio, r.eq_ratio);
    csv += r.label;
    csv += buf;
  }
  return csv;
}

std::string sylow_gate(const FiniteGroup& g) {
  return sylow_classification(g).has_nonabelian_sylow
             ? "unbounded, O(log³) witnesses"
             : "finitely based — bounded complexity predicted";
}

}  // namespace eqkit
