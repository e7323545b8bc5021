#include "eqkit/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace eqkit {

int FiniteGroup::pow(int x, long long k) const {
  if (k < 0) return pow(inverse[x], -k);
  int acc = identity;
  for (long long i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

int FiniteGroup::element_order(int x) const {
  int acc = x, ord = 1;
  while (acc != identity) {
    acc = mul(acc, x);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (table[x][y] != table[y][x]) return false;
  return true;
}

FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                       const std::string& label) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("from_table: empty table");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      throw Error("from_table: row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < n; ++y)
      if (table[x][y] < 0 || table[x][y] >= n)
        throw Error("from_table: entry (" + std::to_string(x) + "," +
                    std::to_string(y) + ") out of range");
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0)
    throw TableError(TableError::Kind::NoIdentity,
                     "from_table: no two-sided identity element");

  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table[x][y] == identity && table[y][x] == identity) {
        inverse[x] = y;
        break;
      }
    if (inverse[x] < 0)
      throw TableError(TableError::Kind::NoInverse,
                       "from_table: element " + std::to_string(x) +
                           " has no two-sided inverse",
                       x);
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw TableError(TableError::Kind::NotAssociative,
                           "from_table: (" + std::to_string(x) + "*" +
                               std::to_string(y) + ")*" + std::to_string(z) +
                               " != " + std::to_string(x) + "*(" +
                               std::to_string(y) + "*" + std::to_string(z) + ")",
                           x, y, z);

  FiniteGroup g;
  g.n = n;
  g.table = table;
  g.identity = identity;
  g.inverse = std::move(inverse);
  g.label = label;
  return g;
}

namespace {

// Builds a group from a known-good construction: derives identity/inverses
// without repeating the O(n^3) associativity scan.
FiniteGroup assemble(std::vector<std::vector<int>> table, std::string label) {
  const int n = static_cast<int>(table.size());
  FiniteGroup g;
  g.n = n;
  g.table = std::move(table);
  g.identity = -1;
  for (int e = 0; e < n && g.identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = g.table[e][x] == x && g.table[x][e] == x;
    if (ok) g.identity = e;
  }
  g.inverse.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.table[x][y] == g.identity && g.table[y][x] == g.identity) {
        g.inverse[x] = y;
        break;
      }
  g.label = std::move(label);
  return g;
}

FiniteGroup cyclic_group(int m) {
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[x][y] = (x + y) % m;
  return assemble(std::move(t), "cyclic:" + std::to_string(m));
}

// Elements r^i s^j with index i + n*j; s r s = r^-1.
FiniteGroup dihedral_group(int m) {
  const int n = 2 * m;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto idx = [m](int i, int j) { return i + m * j; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot = j ? (i - k + 2 * m) % m : (i + k) % m;
          t[idx(i, j)][idx(k, l)] = idx(rot, (j + l) % 2);
        }
  return assemble(std::move(t), "dihedral:" + std::to_string(m));
}

std::vector<std::vector<int>> permutations_lex(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

FiniteGroup perm_group(std::vector<std::vector<int>> perms, std::string label) {
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  const int m = static_cast<int>(perms[0].size());
  std::vector<int> comp(m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < m; ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(comp);
    }
  return assemble(std::move(t), std::move(label));
}

FiniteGroup symmetric_group(int m) {
  if (m <= 1) {
    auto g = cyclic_group(1);
    g.label = "symmetric:" + std::to_string(m);
    return g;
  }
  return perm_group(permutations_lex(m), "symmetric:" + std::to_string(m));
}

FiniteGroup alternating_group(int m) {
  if (m <= 2) {
    auto g = cyclic_group(1);
    g.label = "alternating:" + std::to_string(m);
    return g;
  }
  std::vector<std::vector<int>> evens;
  for (auto& p : permutations_lex(m))
    if (is_even(p)) evens.push_back(p);
  return perm_group(std::move(evens), "alternating:" + std::to_string(m));
}

// {1, i, j, k, -1, -i, -j, -k} with indices 0..7.
FiniteGroup quaternion_group() {
  // Represent elements as pairs (s, u): s in {+1,-1}, u in {1,i,j,k}.
  // i*j=k, j*k=i, k*i=j and u*u=-1 for u != 1.
  auto mul_unit = [](int a, int b, int& sign) -> int {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;
      return 0;
    }
    // cyclic order i(1) j(2) k(3)
    static const int prod[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}};
    sign *= sgn[a][b];
    return prod[a][b];
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sign = (a / 4 ? -1 : 1) * (b / 4 ? -1 : 1);
      int u = mul_unit(a % 4, b % 4, sign);
      t[a][b] = u + (sign < 0 ? 4 : 0);
    }
  return assemble(std::move(t), "quaternion");
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.n * b.n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto idx = [&b](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  return assemble(std::move(t), "product:(" + a.label + "," + b.label + ")");
}

long long spec_order(const std::string& spec);

// Splits "lhs,rhs" at the top-level comma of a product argument.
std::pair<std::string, std::string> split_product_arg(const std::string& spec,
                                                      const std::string& inner) {
  int depth = 0;
  for (size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    else if (inner[i] == ')') --depth;
    else if (inner[i] == ',' && depth == 0)
      return {inner.substr(0, i), inner.substr(i + 1)};
  }
  throw SpecError(SpecError::Kind::UnknownSpec,
                  "named_group: bad product argument in '" + spec + "'");
}

long long parse_int_arg(const std::string& spec, const std::string& arg) {
  if (arg.empty() || !std::all_of(arg.begin(), arg.end(),
                                  [](char c) { return c >= '0' && c <= '9'; }))
    throw SpecError(SpecError::Kind::UnknownSpec,
                    "named_group: bad numeric argument in '" + spec + "'");
  long long v = 0;
  for (char c : arg) {
    v = v * 10 + (c - '0');
    if (v > 1'000'000'000) break;  // avoid overflow; caught by the cap anyway
  }
  return v;
}

long long factorial_capped(long long m) {
  long long f = 1;
  for (long long i = 2; i <= m; ++i) {
    f *= i;
    if (f > 1'000'000'000) return f;
  }
  return f;
}

long long spec_order(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "quaternion") {
    if (!arg.empty())
      throw SpecError(SpecError::Kind::UnknownSpec,
                      "named_group: quaternion takes no argument");
    return 8;
  }
  if (head == "product") {
    if (arg.size() < 2 || arg.front() != '(' || arg.back() != ')')
      throw SpecError(SpecError::Kind::UnknownSpec,
                      "named_group: product wants '(spec,spec)' in '" + spec + "'");
    auto [l, r] = split_product_arg(spec, arg.substr(1, arg.size() - 2));
    return spec_order(l) * spec_order(r);
  }
  long long m = parse_int_arg(spec, arg);
  if (head == "cyclic") {
    if (m < 1)
      throw SpecError(SpecError::Kind::UnknownSpec, "named_group: cyclic wants n >= 1");
    return m;
  }
  if (head == "dihedral") {
    if (m < 1)
      throw SpecError(SpecError::Kind::UnknownSpec, "named_group: dihedral wants n >= 1");
    return 2 * m;
  }
  if (head == "symmetric") {
    if (m < 0)
      throw SpecError(SpecError::Kind::UnknownSpec, "named_group: symmetric wants n >= 0");
    return factorial_capped(m);
  }
  if (head == "alternating") {
    if (m < 0)
      throw SpecError(SpecError::Kind::UnknownSpec, "named_group: alternating wants n >= 0");
    return m <= 2 ? 1 : factorial_capped(m) / 2;
  }
  throw SpecError(SpecError::Kind::UnknownSpec, "named_group: unknown spec '" + spec + "'");
}

FiniteGroup build_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "quaternion") return quaternion_group();
  if (head == "product") {
    auto [l, r] = split_product_arg(spec, arg.substr(1, arg.size() - 2));
    return product_group(build_spec(l), build_spec(r));
  }
  int m = static_cast<int>(parse_int_arg(spec, arg));
  if (head == "cyclic") return cyclic_group(m);
  if (head == "dihedral") return dihedral_group(m);
  if (head == "symmetric") return symmetric_group(m);
  if (head == "alternating") return alternating_group(m);
  throw SpecError(SpecError::Kind::UnknownSpec, "named_group: unknown spec '" + spec + "'");
}

}  // namespace

FiniteGroup named_group(const std::string& spec, int max_order) {
  long long order = spec_order(spec);  // validates the grammar up front
  if (order > max_order)
    throw SpecError(SpecError::Kind::SizeLimitExceeded,
                    "named_group: order " + std::to_string(order) + " of '" + spec +
                        "' exceeds cap " + std::to_string(max_order));
  return build_spec(spec);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, int max_order) {
  if (static_cast<long long>(a.n) * b.n > max_order)
    throw SpecError(SpecError::Kind::SizeLimitExceeded,
                    "direct_product: order " + std::to_string(static_cast<long long>(a.n) * b.n) +
                        " exceeds cap " + std::to_string(max_order));
  return product_group(a, b);
}

std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g.n) throw Error("subgroup_generated: element out of range");
  std::vector<char> in(g.n, 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(g.identity);
  for (int x : gens) add(x);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      add(g.mul(members[i], members[j]));
      if (members.size() > static_cast<size_t>(g.n)) break;
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<char> in(g.n, 0);
  for (int x : elems) {
    if (x < 0 || x >= g.n) return false;
    in[x] = 1;
  }
  if (!in[g.identity]) return false;
  for (int x : elems)
    for (int y : elems)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<char> in(g.n, 0);
  for (int x : elems) in[x] = 1;
  for (int x : elems)
    for (int t = 0; t < g.n; ++t)
      if (!in[g.mul(g.mul(t, x), g.inv(t))]) return false;
  return true;
}

SubgroupView subgroup_group(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!is_subgroup(g, sorted))
    throw SubgroupError(SubgroupError::Kind::NotSubgroup,
                        "subgroup_group: element list is not a subgroup");
  SubgroupView v;
  v.to_parent = sorted;
  v.from_parent.assign(g.n, -1);
  for (size_t i = 0; i < sorted.size(); ++i) v.from_parent[sorted[i]] = static_cast<int>(i);
  const int m = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[i][j] = v.from_parent[g.mul(sorted[i], sorted[j])];
  v.group = assemble(std::move(t), g.label + "|sub" + std::to_string(m));
  return v;
}

Quotient quotient_by(const FiniteGroup& g, const std::vector<int>& normal) {
  std::vector<int> sorted = normal;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!is_subgroup(g, sorted))
    throw SubgroupError(SubgroupError::Kind::NotSubgroup,
                        "quotient_by: element list is not a subgroup");
  if (!is_normal(g, sorted))
    throw SubgroupError(SubgroupError::Kind::NotNormal,
                        "quotient_by: subgroup is not normal");
  std::vector<char> in(g.n, 0);
  for (int x : sorted) in[x] = 1;

  // Name each coset by its least element; cosets ordered by that name.
  std::vector<int> coset_rep(g.n, -1);
  for (int x = 0; x < g.n; ++x) {
    if (coset_rep[x] >= 0) continue;
    int least = x;  // x is least in its coset: smaller elements are all assigned
    for (int h : sorted) coset_rep[g.mul(least, h)] = least;
  }
  Quotient q;
  for (int x = 0; x < g.n; ++x)
    if (coset_rep[x] == x) q.reps.push_back(x);
  std::vector<int> rep_index(g.n, -1);
  for (size_t i = 0; i < q.reps.size(); ++i) rep_index[q.reps[i]] = static_cast<int>(i);
  q.proj.assign(g.n, -1);
  for (int x = 0; x < g.n; ++x) q.proj[x] = rep_index[coset_rep[x]];

  const int m = static_cast<int>(q.reps.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[i][j] = q.proj[g.mul(q.reps[i], q.reps[j])];
  q.group = assemble(std::move(t), g.label + "/" + std::to_string(sorted.size()));
  return q;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> order;
  std::vector<std::vector<int>> queue;
  std::vector<int> triv{g.identity};
  seen.insert(triv);
  order.push_back(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    std::vector<int> s = std::move(queue.back());
    queue.pop_back();
    std::vector<char> in(g.n, 0);
    for (int x : s) in[x] = 1;
    for (int x = 0; x < g.n; ++x) {
      if (in[x]) continue;
      std::vector<int> gens = s;
      gens.push_back(x);
      auto t = subgroup_generated(g, gens);
      if (seen.insert(t).second) {
        order.push_back(t);
        queue.push_back(std::move(t));
        if (seen.size() > 200000)
          throw BudgetError("SubgroupEnumeration",
                            "all_subgroups: more than 200000 subgroups");
      }
    }
  }
  std::sort(order.begin(), order.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return order;
}

std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  for (auto& s : all_subgroups(g))
    if (is_normal(g, s)) out.push_back(s);
  return out;
}

bool is_simple(const FiniteGroup& g) {
  return normal_subgroups(g).size() == 2;  // exactly {e} and G
}

CompositionSeries composition_series(const FiniteGroup& g) {
  CompositionSeries cs;
  std::vector<std::vector<int>> chain;  // top-down
  std::vector<int> current(g.n);
  std::iota(current.begin(), current.end(), 0);
  chain.push_back(current);
  while (current.size() > 1) {
    SubgroupView view = subgroup_group(g, current);
    auto normals = normal_subgroups(view.group);
    // proper ones, translated back to parent indices
    std::vector<std::vector<int>> proper;
    for (auto& nl : normals) {
      if (nl.size() == current.size()) continue;
      std::vector<int> parent;
      parent.reserve(nl.size());
      for (int i : nl) parent.push_back(view.to_parent[i]);
      std::sort(parent.begin(), parent.end());
      proper.push_back(std::move(parent));
    }
    // keep the maximal ones (by inclusion)
    std::vector<std::vector<int>> maximal;
    for (auto& a : proper) {
      bool dominated = false;
      for (auto& b : proper)
        if (a.size() < b.size() &&
            std::includes(b.begin(), b.end(), a.begin(), a.end())) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(a);
    }
    auto pick = *std::min_element(maximal.begin(), maximal.end());
    chain.push_back(pick);
    current = pick;
  }
  std::reverse(chain.begin(), chain.end());
  cs.subgroups = chain;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    SubgroupView top = subgroup_group(g, chain[i + 1]);
    std::vector<int> local;
    for (int p : chain[i]) local.push_back(top.from_parent[p]);
    cs.factors.push_back(quotient_by(top.group, local).group);
  }
  return cs;
}

std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> span = subgroup_generated(g, {});
  while (static_cast<int>(span.size()) < g.n) {
    int pick = -1;
    std::vector<char> in(g.n, 0);
    for (int x : span) in[x] = 1;
    for (int x = 0; x < g.n; ++x)
      if (!in[x]) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    span = subgroup_generated(g, gens);
  }
  return gens;
}

bool is_homomorphism(const FiniteGroup& h, const FiniteGroup& g,
                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != h.n) return false;
  for (int v : map)
    if (v < 0 || v >= g.n) return false;
  for (int x = 0; x < h.n; ++x)
    for (int y = 0; y < h.n; ++y)
      if (map[h.mul(x, y)] != g.mul(map[x], map[y])) return false;
  return true;
}

namespace {

// Extends generator images to a full map by closing under right
// multiplication; returns false on any conflict. Each inner step counts
// against *budget.
bool close_map(const FiniteGroup& h, const FiniteGroup& g,
               const std::vector<int>& gens, const std::vector<int>& imgs,
               std::vector<int>& phi, long long* budget) {
  phi.assign(h.n, -1);
  phi[h.identity] = g.identity;
  std::vector<int> frontier{h.identity};
  for (size_t i = 0; i < frontier.size(); ++i) {
    int x = frontier[i];
    for (size_t j = 0; j < gens.size(); ++j) {
      if (--*budget < 0)
        throw BudgetError("SearchBudgetExceeded",
                          "homomorphisms: node budget exhausted");
      int y = h.mul(x, gens[j]);
      int m = g.mul(phi[x], imgs[j]);
      if (phi[y] < 0) {
        phi[y] = m;
        frontier.push_back(y);
      } else if (phi[y] != m) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Homomorphism> homomorphisms(const FiniteGroup& h, const FiniteGroup& g,
                                        long long budget) {
  std::vector<int> gens = generating_sequence(h);
  const int r = static_cast<int>(gens.size());
  std::vector<Homomorphism> out;
  std::vector<int> imgs(r, 0);
  std::vector<int> phi;
  long long left = budget;

  // Depth-first over image tuples in ascending order. A prefix is kept only
  // if the induced partial map on <gens[0..depth)> is conflict-free.
  std::vector<int> depth_imgs;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == r) {
      if (close_map(h, g, gens, depth_imgs, phi, &left)) {
        if (std::count(phi.begin(), phi.end(), -1) != 0)
          throw Error("homomorphisms: generators failed to span");  // unreachable
        out.push_back(Homomorphism{phi});
      }
      return;
    }
    for (int t = 0; t < g.n; ++t) {
      depth_imgs.push_back(t);
      std::vector<int> sub_gens(gens.begin(), gens.begin() + depth + 1);
      if (close_map(h, g, sub_gens, depth_imgs, phi, &left)) rec(depth + 1);
      depth_imgs.pop_back();
    }
  };
  if (r == 0) {
    out.push_back(Homomorphism{std::vector<int>(h.n, g.identity)});
    return out;
  }
  rec(0);
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b,
                                                 long long budget) {
  if (a.n != b.n) return std::nullopt;
  std::vector<int> gens = generating_sequence(a);
  const int r = static_cast<int>(gens.size());
  if (r == 0) return std::vector<int>(1, b.identity);
  std::vector<int> orders(r);
  for (int i = 0; i < r; ++i) orders[i] = a.element_order(gens[i]);
  std::vector<int> b_order(b.n);
  for (int x = 0; x < b.n; ++x) b_order[x] = b.element_order(x);

  long long left = budget;
  std::vector<int> imgs;
  std::vector<int> phi;
  std::optional<std::vector<int>> found;
  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == r) {
      if (!close_map(a, b, gens, imgs, phi, &left)) return false;
      std::vector<char> hit(b.n, 0);
      for (int v : phi) hit[v] = 1;
      if (std::count(hit.begin(), hit.end(), 1) != b.n) return false;
      found = phi;
      return true;
    }
    for (int t = 0; t < b.n; ++t) {
      if (b_order[t] != orders[depth]) continue;
      imgs.push_back(t);
      std::vector<int> sub_gens(gens.begin(), gens.begin() + depth + 1);
      if (close_map(a, b, sub_gens, imgs, phi, &left) && rec(depth + 1)) return true;
      imgs.pop_back();
    }
    return false;
  };
  rec(0);
  return found;
}

int exponent(const FiniteGroup& g) {
  long long l = 1;
  for (int x = 0; x < g.n; ++x) l = std::lcm(l, static_cast<long long>(g.element_order(x)));
  return static_cast<int>(l);
}

SylowReport sylow_classification(const FiniteGroup& g) {
  SylowReport report;
  int n = g.n;
  std::vector<std::pair<int, int>> primes;  // (p, p^k fully dividing n)
  int rest = n;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    int pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    primes.push_back({p, pk});
  }
  auto subs = all_subgroups(g);
  for (auto [p, pk] : primes) {
    const std::vector<int>* found = nullptr;
    for (auto& s : subs)
      if (static_cast<int>(s.size()) == pk) {
        found = &s;
        break;
      }
    if (!found) throw Error("sylow_classification: no Sylow subgroup found");  // unreachable
    SylowInfo info;
    info.prime = p;
    info.subgroup = *found;
    info.abelian = subgroup_group(g, *found).group.is_abelian();
    if (!info.abelian) report.has_nonabelian_sylow = true;
    report.sylows.push_back(std::move(info));
  }
  return report;
}

}  // namespace eqkit
