#include "eqkit/flat.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqkit/errors.hpp"

namespace eqkit {

FlatAlgebra flat_extension(const FiniteGroup& g, FlatTag tag) {
  FlatAlgebra f;
  f.group = g;
  f.tag = tag;
  f.zero = g.n;
  const int n = g.n + 1;

  FiniteAlgebra& a = f.algebra;
  a.n = n;
  a.sig = flat_signature(tag);
  a.label = "flat(" + g.label + ")";

  std::vector<int> mul(n * n, f.zero);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) mul[x * n + y] = g.mul(x, y);
  a.tables.push_back(std::move(mul));

  if (tag == FlatTag::MeetInv) {
    std::vector<int> inv(n, f.zero);
    for (int x = 0; x < g.n; ++x) inv[x] = g.inv(x);
    a.tables.push_back(std::move(inv));
  }

  std::vector<int> meet(n * n, f.zero);
  for (int x = 0; x < n; ++x) meet[x * n + x] = x;
  a.tables.push_back(std::move(meet));
  return f;
}

FiniteAlgebra with_unit(const FlatAlgebra& f) {
  FiniteAlgebra a = f.algebra;
  a.sig.ops.push_back({"1", 0});
  a.tables.push_back({f.group.identity});
  return a;
}

FlatRecognition recognize_flat(const FiniteAlgebra& a) {
  FlatRecognition r;
  auto reject = [&r](std::string why) {
    r.flat = false;
    r.reason = std::move(why);
    return r;
  };

  bool has_inv;
  if (a.sig == flat_signature(FlatTag::MeetInv))
    has_inv = true;
  else if (a.sig == flat_signature(FlatTag::Meet))
    has_inv = false;
  else
    return reject("signature is not a flat signature");
  const int mul = 0;
  const int meet = has_inv ? 2 : 1;

  if (a.n < 2) return reject("no nonzero part (need at least two elements)");

  for (int x = 0; x < a.n; ++x)
    if (a.apply2(meet, x, x) != x)
      return reject("flat meet law fails: meet(x,x) != x at x=" + std::to_string(x));
  const int zero = a.apply2(meet, 0, 1);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (x != y && a.apply2(meet, x, y) != zero)
        return reject("flat meet law fails: meet(" + std::to_string(x) + "," +
                      std::to_string(y) + ") is not the bottom");

  for (int x = 0; x < a.n; ++x)
    if (a.apply2(mul, zero, x) != zero || a.apply2(mul, x, zero) != zero)
      return reject("zero is not absorbing for the product at x=" + std::to_string(x));
  if (has_inv && a.apply1(1, zero) != zero)
    return reject("zero is not fixed by inversion");

  std::vector<int> to_parent;
  std::vector<int> from_parent(a.n, -1);
  for (int x = 0; x < a.n; ++x)
    if (x != zero) {
      from_parent[x] = static_cast<int>(to_parent.size());
      to_parent.push_back(x);
    }
  const int m = static_cast<int>(to_parent.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = a.apply2(mul, to_parent[i], to_parent[j]);
      if (p == zero) return reject("nonzero part is not closed under the product");
      table[i][j] = from_parent[p];
    }
  FiniteGroup g;
  try {
    g = from_table(table, a.label.empty() ? "recovered" : a.label + ":group");
  } catch (const TableError& e) {
    return reject(std::string("nonzero part is not a group (") + e.what() + ")");
  }
  if (has_inv)
    for (int i = 0; i < m; ++i)
      if (a.apply1(1, to_parent[i]) != to_parent[g.inv(i)])
        return reject("inversion does not match the group inverse at x=" +
                      std::to_string(to_parent[i]));

  r.flat = true;
  r.group = std::move(g);
  r.zero = zero;
  r.to_parent = std::move(to_parent);
  return r;
}

namespace {

Term meet_of(const Equation& e) { return tapp("&", {e.lhs, e.rhs}); }

Term power(const Term& t, int d) {
  Term r = t;
  for (int i = 1; i < d; ++i) r = tapp("*", {r, t});
  return r;
}

}  // namespace

Equation translate_qe_to_eq(const QuasiEquation& rho, int d, bool pad) {
  if (d < 1) throw PreconditionError("translate_qe_to_eq: d must be >= 1");

  std::set<std::string> covered;
  for (const Equation& p : rho.premises)
    for (const std::string& v : equation_vars(p)) covered.insert(v);

  std::vector<Equation> premises = rho.premises;
  for (const std::string& v : equation_vars(rho.conclusion)) {
    if (covered.count(v)) continue;
    if (!pad)
      throw PreconditionError("translate_qe_to_eq: conclusion variable '" + v +
                              "' does not occur in any premise (padding disabled)");
    premises.push_back(Equation{tvar(v), tvar(v)});
    covered.insert(v);
  }
  if (premises.empty())
    throw PreconditionError(
        "translate_qe_to_eq: EmptyPremiseUnpaddable: no premises and no "
        "conclusion variable to pad with");

  Term prod = meet_of(premises[0]);
  for (size_t i = 1; i < premises.size(); ++i)
    prod = tapp("*", {prod, meet_of(premises[i])});

  Term pd = power(prod, d);
  Equation out;
  out.lhs = tapp("*", {pd, power(meet_of(rho.conclusion), d)});
  out.rhs = pd;
  return out;
}

namespace {

AxiomReport run_axioms(const FiniteAlgebra& a,
                       const std::vector<std::pair<const char*, const char*>>& laws) {
  for (auto [name, text] : laws) {
    Equation e = parse_equation(text, a.sig);
    if (!satisfies_equation(a, e).holds) return {false, name};
  }
  return {true, ""};
}

}  // namespace

AxiomReport verify_nsoc_axioms(const FiniteAlgebra& a) {
  if (a.sig != flat_signature(FlatTag::MeetInv))
    throw PreconditionError("verify_nsoc_axioms: signature must be {*, inv, &}");
  static const std::vector<std::pair<const char*, const char*>> laws = {
      {"meet commutativity", "& x y = & y x"},
      {"meet associativity", "& & x y z = & x & y z"},
      {"meet idempotence", "& x x = x"},
      {"product associativity", "* * x y z = * x * y z"},
      {"left distributivity", "* x & y z = & * x y * x z"},
      {"right distributivity", "* & y z x = & * y x * z x"},
      {"inverse law", "* * x inv x x = x"},
      {"double inversion", "inv inv x = x"},
      {"antiautomorphism", "inv * x y = * inv y inv x"},
      {"idempotents commute", "* * x inv x * y inv y = * * y inv y * x inv x"},
      {"order tie", "& x y = * * x inv & x y & x y"},
      {"central idempotents", "* * x inv x y = * y * x inv x"},
  };
  return run_axioms(a, laws);
}

AxiomReport verify_semiring_axioms(const FiniteAlgebra& a) {
  if (a.sig != flat_signature(FlatTag::Meet))
    throw PreconditionError("verify_semiring_axioms: signature must be {*, &}");
  static const std::vector<std::pair<const char*, const char*>> laws = {
      {"meet commutativity", "& x y = & y x"},
      {"meet associativity", "& & x y z = & x & y z"},
      {"meet idempotence", "& x x = x"},
      {"product associativity", "* * x y z = * x * y z"},
      {"left distributivity", "* x & y z = & * x y * x z"},
      {"right distributivity", "* & y z x = & * y x * z x"},
  };
  return run_axioms(a, laws);
}

}  // namespace eqkit
