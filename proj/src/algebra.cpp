#include "eqkit/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eqkit/errors.hpp"

namespace eqkit {

bool tables_valid(const FiniteAlgebra& a) {
  if (a.n < 1) return false;
  if (a.tables.size() != a.sig.ops.size()) return false;
  for (size_t i = 0; i < a.tables.size(); ++i) {
    size_t want = 1;
    for (int k = 0; k < a.sig.ops[i].arity; ++k) want *= a.n;
    if (a.tables[i].size() != want) return false;
    for (int v : a.tables[i])
      if (v < 0 || v >= a.n) return false;
  }
  return true;
}

FiniteAlgebra group_algebra(const FiniteGroup& g, Sig s, std::string label) {
  FiniteAlgebra a;
  a.n = g.n;
  a.sig = group_signature(s);
  a.label = label.empty() ? g.label : std::move(label);
  for (const OpSym& op : a.sig.ops) {
    if (op.name == "*") {
      std::vector<int> t(g.n * g.n);
      for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) t[x * g.n + y] = g.mul(x, y);
      a.tables.push_back(std::move(t));
    } else if (op.name == "inv") {
      a.tables.push_back(g.inverse);
    } else {
      a.tables.push_back({g.identity});
    }
  }
  return a;
}

namespace {

// Terms compiled to postfix over resolved variable slots.
struct Instr {
  int op;   // signature op index, or -1 for a variable load
  int var;  // variable slot when op == -1
};

void compile_term(const Term& t, const FiniteAlgebra& a,
                  std::vector<std::string>& vars, std::vector<Instr>& out) {
  if (t.is_var) {
    int slot = -1;
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == t.head) slot = static_cast<int>(i);
    if (slot < 0) {
      slot = static_cast<int>(vars.size());
      vars.push_back(t.head);
    }
    out.push_back({-1, slot});
    return;
  }
  int op = a.op_index(t.head);
  if (op < 0)
    throw ParseError(ParseError::Kind::UnknownSymbol,
                     "evaluate: operation '" + t.head + "' is not in the algebra");
  if (static_cast<int>(t.args.size()) != a.sig.ops[op].arity)
    throw ParseError(ParseError::Kind::ArityMismatch,
                     "evaluate: '" + t.head + "' applied to " +
                         std::to_string(t.args.size()) + " argument(s)");
  for (const Term& arg : t.args) compile_term(arg, a, vars, out);
  out.push_back({op, -1});
}

int run_postfix(const FiniteAlgebra& a, const std::vector<Instr>& code,
                const std::vector<int>& assign, std::vector<int>& stack) {
  stack.clear();
  for (const Instr& in : code) {
    if (in.op < 0) {
      stack.push_back(assign[in.var]);
      continue;
    }
    switch (a.sig.ops[in.op].arity) {
      case 0:
        stack.push_back(a.apply0(in.op));
        break;
      case 1:
        stack.back() = a.apply1(in.op, stack.back());
        break;
      default: {
        int y = stack.back();
        stack.pop_back();
        stack.back() = a.apply2(in.op, stack.back(), y);
      }
    }
  }
  return stack.back();
}

struct CompiledEq {
  std::vector<Instr> lhs, rhs;
};

// Shared assignment loop: premises checked in order, then the conclusion.
SatResult check_assignments(const FiniteAlgebra& a, const std::vector<CompiledEq>& premises,
                            const CompiledEq& conclusion, std::vector<std::string> vars,
                            long long budget) {
  SatResult r;
  r.vars = std::move(vars);
  const int nv = static_cast<int>(r.vars.size());
  long long count = 1;
  for (int i = 0; i < nv; ++i) {
    count *= a.n;
    if (count > budget)
      throw BudgetError("AssignmentBudgetExceeded",
                        "satisfaction: |A|^" + std::to_string(nv) + " assignments exceed " +
                            std::to_string(budget));
  }
  std::vector<int> assign(nv, 0), stack;
  for (;;) {
    bool premises_hold = true;
    for (const CompiledEq& p : premises)
      if (run_postfix(a, p.lhs, assign, stack) != run_postfix(a, p.rhs, assign, stack)) {
        premises_hold = false;
        break;
      }
    if (premises_hold && run_postfix(a, conclusion.lhs, assign, stack) !=
                             run_postfix(a, conclusion.rhs, assign, stack)) {
      r.holds = false;
      r.assignment = assign;
      return r;
    }
    int i = nv - 1;
    while (i >= 0 && assign[i] == a.n - 1) assign[i--] = 0;
    if (i < 0) break;
    ++assign[i];
  }
  return r;
}

}  // namespace

SatResult satisfies_equation(const FiniteAlgebra& a, const Equation& e, long long budget) {
  std::vector<std::string> vars;
  CompiledEq c;
  compile_term(e.lhs, a, vars, c.lhs);
  compile_term(e.rhs, a, vars, c.rhs);
  return check_assignments(a, {}, c, std::move(vars), budget);
}

SatResult satisfies_quasiequation(const FiniteAlgebra& a, const QuasiEquation& q,
                                  long long budget) {
  std::vector<std::string> vars;
  std::vector<CompiledEq> premises;
  for (const Equation& p : q.premises) {
    CompiledEq c;
    compile_term(p.lhs, a, vars, c.lhs);
    compile_term(p.rhs, a, vars, c.rhs);
    premises.push_back(std::move(c));
  }
  CompiledEq c;
  compile_term(q.conclusion.lhs, a, vars, c.lhs);
  compile_term(q.conclusion.rhs, a, vars, c.rhs);
  return check_assignments(a, premises, c, std::move(vars), budget);
}

int Congruence::classes() const {
  std::set<int> ids(block.begin(), block.end());
  return static_cast<int>(ids.size());
}

Congruence identity_congruence(int n) {
  Congruence c;
  c.block.resize(n);
  for (int i = 0; i < n; ++i) c.block[i] = i;
  return c;
}

Congruence full_congruence(int n) {
  Congruence c;
  c.block.assign(n, 0);
  return c;
}

bool is_congruence(const FiniteAlgebra& a, const Congruence& c) {
  if (static_cast<int>(c.block.size()) != a.n) return false;
  for (int i = 0; i < a.n; ++i)
    if (c.block[i] < 0 || c.block[i] >= a.n || c.block[c.block[i]] != c.block[i] ||
        c.block[i] > i)
      return false;
  for (size_t op = 0; op < a.sig.ops.size(); ++op) {
    int ar = a.sig.ops[op].arity;
    if (ar == 1) {
      for (int x = 0; x < a.n; ++x)
        for (int y = x + 1; y < a.n; ++y)
          if (c.related(x, y) &&
              !c.related(a.apply1(static_cast<int>(op), x), a.apply1(static_cast<int>(op), y)))
            return false;
    } else if (ar == 2) {
      for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y) {
          if (!c.related(x, y)) continue;
          for (int z = 0; z < a.n; ++z) {
            if (!c.related(a.apply2(static_cast<int>(op), x, z),
                           a.apply2(static_cast<int>(op), y, z)))
              return false;
            if (!c.related(a.apply2(static_cast<int>(op), z, x),
                           a.apply2(static_cast<int>(op), z, y)))
              return false;
          }
        }
    }
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns true when two classes actually merged.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    return true;
  }
};

Congruence canonical_partition(UnionFind& uf, int n) {
  Congruence c;
  c.block.resize(n);
  std::vector<int> least(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (least[r] < 0) least[r] = i;  // first visit is the least member
    c.block[i] = least[r];
  }
  return c;
}

}  // namespace

Congruence congruence_generated(const FiniteAlgebra& a,
                                const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(a.n);
  std::vector<std::pair<int, int>> work;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= a.n || y < 0 || y >= a.n)
      throw PreconditionError("congruence_generated: pair out of range");
    if (uf.unite(x, y)) work.emplace_back(x, y);
  }
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (size_t op = 0; op < a.sig.ops.size(); ++op) {
      int o = static_cast<int>(op);
      int ar = a.sig.ops[op].arity;
      if (ar == 1) {
        if (uf.unite(a.apply1(o, x), a.apply1(o, y)))
          work.emplace_back(a.apply1(o, x), a.apply1(o, y));
      } else if (ar == 2) {
        for (int z = 0; z < a.n; ++z) {
          if (uf.unite(a.apply2(o, x, z), a.apply2(o, y, z)))
            work.emplace_back(a.apply2(o, x, z), a.apply2(o, y, z));
          if (uf.unite(a.apply2(o, z, x), a.apply2(o, z, y)))
            work.emplace_back(a.apply2(o, z, x), a.apply2(o, z, y));
        }
      }
    }
  }
  return canonical_partition(uf, a.n);
}

Congruence meet_congruence(const Congruence& x, const Congruence& y) {
  int n = static_cast<int>(x.block.size());
  Congruence c;
  c.block.resize(n);
  std::map<std::pair<int, int>, int> least;
  for (int i = 0; i < n; ++i) {
    auto key = std::make_pair(x.block[i], y.block[i]);
    auto it = least.find(key);
    if (it == least.end()) it = least.emplace(key, i).first;
    c.block[i] = it->second;
  }
  return c;
}

Congruence join_congruence(const FiniteAlgebra& a, const Congruence& x,
                           const Congruence& y) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < a.n; ++i) {
    pairs.emplace_back(i, x.block[i]);
    pairs.emplace_back(i, y.block[i]);
  }
  return congruence_generated(a, pairs);
}

std::vector<Congruence> all_congruences(const FiniteAlgebra& a, int cap) {
  std::set<std::vector<int>> seen;
  std::vector<Congruence> out;
  auto add = [&](Congruence c) {
    if (seen.insert(c.block).second) {
      out.push_back(std::move(c));
      if (static_cast<int>(out.size()) > cap)
        throw BudgetError("CongruenceBudgetExceeded",
                          "all_congruences: more than " + std::to_string(cap));
      return true;
    }
    return false;
  };
  add(identity_congruence(a.n));
  std::vector<Congruence> principals;
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j) {
      Congruence c = congruence_generated(a, {{i, j}});
      add(c);
      principals.push_back(std::move(c));
    }
  // join-close: every congruence is a join of principals
  for (size_t k = 0; k < out.size(); ++k)
    for (const Congruence& p : principals) {
      Congruence j = join_congruence(a, out[k], p);
      add(std::move(j));
    }
  std::sort(out.begin(), out.end(), [](const Congruence& x, const Congruence& y) {
    int cx = x.classes(), cy = y.classes();
    if (cx != cy) return cx > cy;
    return x.block < y.block;
  });
  return out;
}

SIResult is_subdirectly_irreducible(const FiniteAlgebra& a) {
  if (a.n < 2) throw PreconditionError("is_subdirectly_irreducible: |A| must be >= 2");
  Congruence meet = full_congruence(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j)
      meet = meet_congruence(meet, congruence_generated(a, {{i, j}}));
  SIResult r;
  for (int i = 0; i < a.n && !r.si; ++i)
    for (int j = i + 1; j < a.n; ++j)
      if (meet.related(i, j)) {
        r.si = true;
        r.monolith = {i, j};
        break;
      }
  return r;
}

FiniteAlgebra quotient_algebra(const FiniteAlgebra& a, const Congruence& c) {
  std::vector<int> reps;
  for (int i = 0; i < a.n; ++i)
    if (c.block[i] == i) reps.push_back(i);
  std::vector<int> index(a.n, -1);
  for (size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);
  auto proj = [&](int x) { return index[c.block[x]]; };

  FiniteAlgebra q;
  q.n = static_cast<int>(reps.size());
  q.sig = a.sig;
  q.label = a.label.empty() ? "quotient" : a.label + "/~";
  for (size_t op = 0; op < a.sig.ops.size(); ++op) {
    int o = static_cast<int>(op);
    int ar = a.sig.ops[op].arity;
    if (ar == 0) {
      q.tables.push_back({proj(a.apply0(o))});
    } else if (ar == 1) {
      std::vector<int> t(q.n);
      for (int x = 0; x < q.n; ++x) t[x] = proj(a.apply1(o, reps[x]));
      q.tables.push_back(std::move(t));
    } else {
      std::vector<int> t(q.n * q.n);
      for (int x = 0; x < q.n; ++x)
        for (int y = 0; y < q.n; ++y) t[x * q.n + y] = proj(a.apply2(o, reps[x], reps[y]));
      q.tables.push_back(std::move(t));
    }
  }
  return q;
}

namespace {

bool extend_iso(const FiniteAlgebra& a, const FiniteAlgebra& b, std::vector<int>& map,
                std::vector<bool>& used, int next, long long& budget) {
  if (--budget < 0) throw BudgetError("IsomorphismBudgetExceeded", "find_algebra_isomorphism");
  if (next == a.n) return true;
  for (int img = 0; img < b.n; ++img) {
    if (used[img]) continue;
    map[next] = img;
    used[img] = true;
    bool ok = true;
    // check every application fully inside the mapped prefix
    for (size_t op = 0; op < a.sig.ops.size() && ok; ++op) {
      int o = static_cast<int>(op);
      int ar = a.sig.ops[op].arity;
      if (ar == 0) {
        int c = a.apply0(o);
        if (c <= next && b.apply0(o) != map[c]) ok = false;
      } else if (ar == 1) {
        for (int x = 0; x <= next && ok; ++x) {
          int y = a.apply1(o, x);
          if (y <= next && b.apply1(o, map[x]) != map[y]) ok = false;
        }
      } else {
        for (int x = 0; x <= next && ok; ++x)
          for (int y = 0; y <= next && ok; ++y) {
            int z = a.apply2(o, x, y);
            if (z <= next && b.apply2(o, map[x], map[y]) != map[z]) ok = false;
          }
      }
    }
    if (ok && extend_iso(a, b, map, used, next + 1, budget)) return true;
    used[img] = false;
  }
  map[next] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_algebra_isomorphism(const FiniteAlgebra& a,
                                              const FiniteAlgebra& b, long long budget) {
  if (!(a.sig == b.sig) || a.n != b.n) return std::nullopt;
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  if (extend_iso(a, b, map, used, 0, budget)) return map;
  return std::nullopt;
}

std::vector<Congruence> meet_irreducible_congruences(const FiniteAlgebra& a) {
  std::vector<Congruence> cons = all_congruences(a);
  std::vector<Congruence> out;
  for (const Congruence& theta : cons) {
    if (theta.classes() == 1) continue;  // the full collapse is never counted
    bool any_above = false;
    Congruence meet = full_congruence(a.n);
    for (const Congruence& psi : cons) {
      if (psi == theta) continue;
      // psi strictly above theta <=> every theta-pair is a psi-pair
      bool above = true;
      for (int i = 0; i < a.n && above; ++i)
        if (!psi.related(i, theta.block[i])) above = false;
      if (!above) continue;
      any_above = true;
      meet = meet_congruence(meet, psi);
    }
    if (any_above && !(meet == theta)) out.push_back(theta);
  }
  return out;
}

std::vector<FiniteAlgebra> si_quotients(const FiniteAlgebra& a, int cap) {
  if (a.n > cap)
    throw BudgetError("AlgebraSizeBudgetExceeded",
                      "si_quotients: |A| = " + std::to_string(a.n) + " exceeds " +
                          std::to_string(cap));
  std::vector<FiniteAlgebra> out;
  for (const Congruence& theta : meet_irreducible_congruences(a)) {
    FiniteAlgebra q = quotient_algebra(a, theta);
    bool dup = false;
    for (const FiniteAlgebra& kept : out)
      if (find_algebra_isomorphism(kept, q)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(q));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FiniteAlgebra& x, const FiniteAlgebra& y) { return x.n < y.n; });
  return out;
}

namespace {

std::string var_name(int i) { return "x" + std::to_string(i + 1); }

// Canonically rename so variables appear as x1, x2, ... scanning lhs then
// rhs; used to normalize the swapped orientation.
void rename_scan(const Term& t, std::map<std::string, std::string>& seen, Term& out) {
  out.head = t.head;
  out.is_var = t.is_var;
  out.args.clear();
  if (t.is_var) {
    auto it = seen.find(t.head);
    if (it == seen.end())
      it = seen.emplace(t.head, var_name(static_cast<int>(seen.size()))).first;
    out.head = it->second;
    return;
  }
  out.args.resize(t.args.size());
  for (size_t i = 0; i < t.args.size(); ++i) rename_scan(t.args[i], seen, out.args[i]);
}

Equation canonical_rename(const Term& lhs, const Term& rhs) {
  std::map<std::string, std::string> seen;
  Equation e;
  rename_scan(lhs, seen, e.lhs);
  rename_scan(rhs, seen, e.rhs);
  return e;
}

// All terms of exactly `size` tokens whose variables follow the
// next-new-variable rule starting from `vars` already in scope. Each result
// carries the number of variables in scope after reading it.
void gen_terms(const Signature& sig, int size, int vars,
               std::vector<std::vector<std::vector<std::pair<Term, int>>>>& memo) {
  auto& slot = memo[size][vars];
  if (!slot.empty() || size == 0) return;
  std::vector<std::pair<Term, int>>& out = slot;
  if (size == 1) {
    for (int i = 0; i < vars; ++i) out.emplace_back(tvar(var_name(i)), vars);
    out.emplace_back(tvar(var_name(vars)), vars + 1);
    for (const OpSym& op : sig.ops)
      if (op.arity == 0) out.emplace_back(tapp(op.name), vars);
    return;
  }
  for (const OpSym& op : sig.ops) {
    if (op.arity == 1) {
      gen_terms(sig, size - 1, vars, memo);
      for (const auto& [sub, v] : memo[size - 1][vars])
        out.emplace_back(tapp(op.name, {sub}), v);
    } else if (op.arity == 2) {
      for (int ls = 1; ls <= size - 2; ++ls) {
        gen_terms(sig, ls, vars, memo);
        for (const auto& [lt, v1] : memo[ls][vars]) {
          gen_terms(sig, size - 1 - ls, v1, memo);
          for (const auto& [rt, v2] : memo[size - 1 - ls][v1])
            out.emplace_back(tapp(op.name, {lt, rt}), v2);
        }
      }
    }
  }
}

}  // namespace

std::vector<Equation> all_equations(const Signature& sig, int max_len, int len_cap) {
  if (max_len > len_cap)
    throw BudgetError("EquationLengthBudgetExceeded",
                      "all_equations: max_len " + std::to_string(max_len) + " exceeds cap " +
                          std::to_string(len_cap));
  if (max_len < 2) return {};
  // memo[size][vars]; a term of size s can open at most s variables
  std::vector memo(max_len, std::vector<std::vector<std::pair<Term, int>>>(max_len + 1));
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Equation>> reps;
  for (int total = 2; total <= max_len; ++total) {
    size_t first_of_length = reps.size();
    for (int ls = 1; ls <= total - 1; ++ls) {
      int rs = total - ls;
      gen_terms(sig, ls, 0, memo);
      for (const auto& [lt, v1] : memo[ls][0]) {
        gen_terms(sig, rs, v1, memo);
        for (const auto& [rt, v2] : memo[rs][v1]) {
          (void)v2;
          std::string fwd = format_term(lt) + " = " + format_term(rt);
          Equation swapped = canonical_rename(rt, lt);
          std::string bwd = equation_text(swapped);
          const bool keep_fwd = fwd <= bwd;
          const std::string& rep = keep_fwd ? fwd : bwd;
          if (seen.insert(rep).second)
            reps.emplace_back(rep, keep_fwd ? Equation{lt, rt} : std::move(swapped));
        }
      }
    }
    std::sort(reps.begin() + first_of_length, reps.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  std::vector<Equation> out;
  out.reserve(reps.size());
  for (auto& [text, eq] : reps) out.push_back(std::move(eq));
  return out;
}

std::vector<Equation> enumerate_equations(const FiniteAlgebra& a, int max_len,
                                          long long budget, int len_cap) {
  std::vector<Equation> out;
  for (Equation& e : all_equations(a.sig, max_len, len_cap))
    if (satisfies_equation(a, e, budget).holds) out.push_back(std::move(e));
  return out;
}

}  // namespace eqkit
