#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "eqkit/group.hpp"

using namespace eqkit;

namespace {

// Test-only oracle: counts homomorphisms H -> G by brute force over all
// generator image tuples, expressing every element of H as a stored word in
// the generators and then checking the whole multiplication table. No
// pruning, no shared code with eqkit::homomorphisms beyond the group type.
long long hom_count_oracle(const FiniteGroup& h, const FiniteGroup& g) {
  // greedy generating sequence
  std::vector<int> gens;
  std::vector<int> span = subgroup_generated(h, {});
  while ((int)span.size() < h.n) {
    for (int x = 0; x < h.n; ++x)
      if (!std::binary_search(span.begin(), span.end(), x)) {
        gens.push_back(x);
        break;
      }
    span = subgroup_generated(h, gens);
  }
  const int r = (int)gens.size();
  // express every element as a positive word via breadth-first search
  std::vector<std::vector<int>> word(h.n);
  std::vector<char> have(h.n, 0);
  std::vector<int> frontier{h.identity};
  have[h.identity] = 1;
  for (size_t i = 0; i < frontier.size(); ++i)
    for (int j = 0; j < r; ++j) {
      int y = h.mul(frontier[i], gens[j]);
      if (!have[y]) {
        have[y] = 1;
        word[y] = word[frontier[i]];
        word[y].push_back(j);
        frontier.push_back(y);
      }
    }

  long long count = 0;
  std::vector<int> t(r, 0);
  while (true) {
    std::vector<int> map(h.n);
    for (int x = 0; x < h.n; ++x) {
      int acc = g.identity;
      for (int j : word[x]) acc = g.mul(acc, t[j]);
      map[x] = acc;
    }
    bool ok = true;
    for (int x = 0; x < h.n && ok; ++x)
      for (int y = 0; y < h.n && ok; ++y)
        ok = map[h.mul(x, y)] == g.mul(map[x], map[y]);
    if (ok) ++count;
    // odometer
    int pos = r - 1;
    while (pos >= 0 && t[pos] == g.n - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return count;
}

}  // namespace

TEST_CASE("from_table accepts valid tables and derives structure") {
  // Z3 typed by hand
  FiniteGroup z3 = from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, "z3");
  CHECK(z3.n == 3);
  CHECK(z3.identity == 0);
  CHECK(z3.inverse == std::vector<int>{0, 2, 1});
  CHECK(z3.label == "z3");

  // identity in a non-zero slot
  FiniteGroup z2 = from_table({{1, 0}, {0, 1}});
  CHECK(z2.identity == 1);
  CHECK(z2.inverse == std::vector<int>{0, 1});
}

TEST_CASE("from_table rejects bad tables with named tuples") {
  // no identity: constant rows
  CHECK_THROWS_AS(from_table({{0, 0}, {1, 1}}), TableError);
  try {
    from_table({{0, 0}, {1, 1}});
  } catch (const TableError& e) {
    CHECK(e.kind == TableError::Kind::NoIdentity);
  }

  // min(x,y) monoid: identity 2 exists, 0 has no inverse
  try {
    from_table({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
    CHECK(false);
  } catch (const TableError& e) {
    CHECK(e.kind == TableError::Kind::NoInverse);
    CHECK(e.x == 0);
  }

  // corrupt one entry of Z5 so identity and inverses survive but
  // associativity breaks
  std::vector<std::vector<int>> t(5, std::vector<int>(5));
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) t[x][y] = (x + y) % 5;
  t[2][2] = 0;  // 2+2=4 becomes 0
  try {
    from_table(t);
    CHECK(false);
  } catch (const TableError& e) {
    CHECK(e.kind == TableError::Kind::NotAssociative);
    // the reported triple really does violate associativity
    auto mul = [&](int a, int b) { return t[a][b]; };
    CHECK(mul(mul(e.x, e.y), e.z) != mul(e.x, mul(e.y, e.z)));
  }

  CHECK_THROWS_AS(from_table({{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(from_table({{0, 7}, {1, 0}}), Error);
}

TEST_CASE("named groups: orders and basic structure") {
  struct Row {
    const char* spec;
    int order;
    bool abelian;
  };
  const Row rows[] = {
      {"cyclic:1", 1, true},          {"cyclic:12", 12, true},
      {"dihedral:1", 2, true},        {"dihedral:2", 4, true},
      {"dihedral:3", 6, false},       {"dihedral:6", 12, false},
      {"symmetric:1", 1, true},       {"symmetric:3", 6, false},
      {"symmetric:4", 24, false},     {"alternating:3", 3, true},
      {"alternating:4", 12, false},   {"quaternion", 8, false},
      {"product:(cyclic:2,cyclic:3)", 6, true},
      {"product:(quaternion,cyclic:3)", 24, false},
      {"product:(product:(cyclic:2,cyclic:2),cyclic:2)", 8, true},
  };
  for (const Row& r : rows) {
    FiniteGroup g = named_group(r.spec);
    CHECK(g.n == r.order);
    CHECK(g.is_abelian() == r.abelian);
    CHECK(g.label == r.spec);
    // full table validation via the independent from_table path
    FiniteGroup revalidated = from_table(g.table, g.label);
    CHECK(revalidated.identity == g.identity);
    CHECK(revalidated.inverse == g.inverse);
  }
}

TEST_CASE("named groups: product tables match componentwise oracle") {
  FiniteGroup a = named_group("cyclic:4");
  FiniteGroup b = named_group("symmetric:3");
  FiniteGroup p = named_group("product:(cyclic:4,symmetric:3)");
  REQUIRE(p.n == a.n * b.n);
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2) {
          int lhs = p.mul(x1 * b.n + y1, x2 * b.n + y2);
          int rhs = a.mul(x1, x2) * b.n + b.mul(y1, y2);
          REQUIRE(lhs == rhs);
        }
}

TEST_CASE("quaternion group relations") {
  FiniteGroup q = named_group("quaternion");
  const int one = 0, i = 1, j = 2, k = 3, minus = 4;
  CHECK(q.identity == one);
  CHECK(q.mul(i, i) == minus);
  CHECK(q.mul(j, j) == minus);
  CHECK(q.mul(k, k) == minus);
  CHECK(q.mul(i, j) == k);
  CHECK(q.mul(j, i) == q.mul(minus, k));
  CHECK(q.mul(q.mul(i, j), k) == minus);  // ijk = -1
  CHECK(q.element_order(minus) == 2);
  CHECK(q.element_order(i) == 4);
}

TEST_CASE("named group spec errors") {
  CHECK_THROWS_AS(named_group("foo:3"), SpecError);
  CHECK_THROWS_AS(named_group("cyclic:x"), SpecError);
  CHECK_THROWS_AS(named_group("cyclic:0"), SpecError);
  CHECK_THROWS_AS(named_group("cyclic"), SpecError);
  CHECK_THROWS_AS(named_group("quaternion:2"), SpecError);
  CHECK_THROWS_AS(named_group("product:(cyclic:2)"), SpecError);
  try {
    named_group("symmetric:8");
    CHECK(false);
  } catch (const SpecError& e) {
    CHECK(e.kind == SpecError::Kind::SizeLimitExceeded);
  }
  try {
    named_group("product:(cyclic:100,cyclic:100)");
    CHECK(false);
  } catch (const SpecError& e) {
    CHECK(e.kind == SpecError::Kind::SizeLimitExceeded);
  }
  // the cap is configurable
  CHECK_THROWS_AS(named_group("cyclic:10", 9), SpecError);
  CHECK(named_group("cyclic:10", 10).n == 10);
}

TEST_CASE("subgroup_generated") {
  FiniteGroup z8 = named_group("cyclic:8");
  CHECK(subgroup_generated(z8, {2}) == std::vector<int>{0, 2, 4, 6});
  CHECK(subgroup_generated(z8, {}) == std::vector<int>{0});
  CHECK(subgroup_generated(z8, {3}).size() == 8);

  FiniteGroup s3 = named_group("symmetric:3");
  // a transposition and a 3-cycle generate everything
  int transposition = -1, threecycle = -1;
  for (int x = 1; x < s3.n; ++x) {
    if (s3.element_order(x) == 2 && transposition < 0) transposition = x;
    if (s3.element_order(x) == 3 && threecycle < 0) threecycle = x;
  }
  CHECK(subgroup_generated(s3, {transposition, threecycle}).size() == 6);
  CHECK(subgroup_generated(s3, {transposition}).size() == 2);
}

TEST_CASE("quotient_by: cosets, projection, errors") {
  FiniteGroup z6 = named_group("cyclic:6");
  Quotient q = quotient_by(z6, {0, 3});
  CHECK(q.group.n == 3);
  CHECK(q.reps == std::vector<int>{0, 1, 2});
  // projection is a homomorphism onto the quotient
  for (int x = 0; x < z6.n; ++x)
    for (int y = 0; y < z6.n; ++y)
      REQUIRE(q.proj[z6.mul(x, y)] == q.group.mul(q.proj[x], q.proj[y]));

  FiniteGroup s3 = named_group("symmetric:3");
  std::vector<int> a3;
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) != 2) a3.push_back(x);
  Quotient q2 = quotient_by(s3, a3);
  CHECK(q2.group.n == 2);

  // reflection subgroup of S3 is not normal
  int t = -1;
  for (int x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) {
      t = x;
      break;
    }
  try {
    quotient_by(s3, {0, t});
    CHECK(false);
  } catch (const SubgroupError& e) {
    CHECK(e.kind == SubgroupError::Kind::NotNormal);
  }
  try {
    quotient_by(z6, {0, 1});
    CHECK(false);
  } catch (const SubgroupError& e) {
    CHECK(e.kind == SubgroupError::Kind::NotSubgroup);
  }
}

TEST_CASE("all_subgroups and normality") {
  FiniteGroup z12 = named_group("cyclic:12");
  auto subs = all_subgroups(z12);
  CHECK(subs.size() == 6);  // one per divisor of 12

  FiniteGroup s3 = named_group("symmetric:3");
  CHECK(all_subgroups(s3).size() == 6);      // e, three <t>, A3, S3
  CHECK(normal_subgroups(s3).size() == 3);   // e, A3, S3
  CHECK(is_simple(named_group("cyclic:5")));
  CHECK(is_simple(named_group("alternating:5")));
  CHECK(!is_simple(named_group("cyclic:4")));
  CHECK(!is_simple(named_group("cyclic:1")));
}

TEST_CASE("composition series: frozen small cases") {
  auto orders = [](const CompositionSeries& cs) {
    std::vector<int> out;
    for (auto& s : cs.subgroups) out.push_back((int)s.size());
    return out;
  };

  CompositionSeries z4 = composition_series(named_group("cyclic:4"));
  CHECK(orders(z4) == std::vector<int>{1, 2, 4});

  CompositionSeries s3 = composition_series(named_group("symmetric:3"));
  CHECK(orders(s3) == std::vector<int>{1, 3, 6});
  REQUIRE(s3.factors.size() == 2);
  CHECK(s3.factors[0].n == 3);
  CHECK(s3.factors[1].n == 2);

  CompositionSeries s4 = composition_series(named_group("symmetric:4"));
  CHECK(orders(s4) == std::vector<int>{1, 2, 4, 12, 24});

  CompositionSeries z12 = composition_series(named_group("cyclic:12"));
  CHECK(orders(z12) == std::vector<int>{1, 3, 6, 12});

  CompositionSeries z1 = composition_series(named_group("cyclic:1"));
  CHECK(orders(z1) == std::vector<int>{1});
  CHECK(z1.factors.empty());
}

TEST_CASE("composition series: validity over small corpus") {
  const char* specs[] = {"cyclic:16",  "cyclic:24",   "dihedral:6", "dihedral:10",
                         "symmetric:4", "alternating:4", "quaternion",
                         "product:(quaternion,cyclic:3)", "cyclic:256"};
  for (const char* spec : specs) {
    FiniteGroup g = named_group(spec);
    CompositionSeries cs = composition_series(g);
    INFO(spec);
    REQUIRE(cs.subgroups.front() == std::vector<int>{g.identity});
    REQUIRE((int)cs.subgroups.back().size() == g.n);
    // each step: subgroup, normal in the next, simple factor
    long long factor_product = 1;
    for (size_t i = 0; i + 1 < cs.subgroups.size(); ++i) {
      SubgroupView top = subgroup_group(g, cs.subgroups[i + 1]);
      std::vector<int> local;
      for (int p : cs.subgroups[i]) local.push_back(top.from_parent[p]);
      REQUIRE(is_subgroup(top.group, local));
      REQUIRE(is_normal(top.group, local));
      REQUIRE(is_simple(cs.factors[i]));
      factor_product *= cs.factors[i].n;
    }
    REQUIRE(factor_product == g.n);
    // series length bound: m <= log2 |G|
    double m = (double)cs.factors.size();
    CHECK(m <= std::log2((double)g.n) + 1e-9);
  }
}

TEST_CASE("homomorphisms: frozen counts and structure") {
  FiniteGroup z4 = named_group("cyclic:4");
  FiniteGroup z2 = named_group("cyclic:2");
  auto homs = homomorphisms(z4, z2);
  REQUIRE(homs.size() == 2);
  for (auto& h : homs) {
    CHECK(is_homomorphism(z4, z2, h.map));
    CHECK(h.map[2] == 0);  // both kill the square of the generator
  }

  CHECK(homomorphisms(named_group("cyclic:3"), z2).size() == 1);
  CHECK(homomorphisms(named_group("symmetric:3"), z2).size() == 2);
  CHECK(homomorphisms(z2, named_group("product:(cyclic:2,cyclic:2)")).size() == 4);
  // endomorphism monoid of S3 has 10 elements
  FiniteGroup s3 = named_group("symmetric:3");
  CHECK(homomorphisms(s3, s3).size() == 10);

  // results are duplicate-free and deterministic
  auto again = homomorphisms(z4, z2);
  REQUIRE(again.size() == homs.size());
  for (size_t i = 0; i < homs.size(); ++i) CHECK(again[i].map == homs[i].map);
  std::set<std::vector<int>> uniq;
  for (auto& h : homomorphisms(s3, s3)) uniq.insert(h.map);
  CHECK(uniq.size() == 10);
}

TEST_CASE("homomorphisms agree with the brute-force oracle") {
  const char* hs[] = {"cyclic:2", "cyclic:4", "cyclic:6", "symmetric:3",
                      "product:(cyclic:2,cyclic:2)", "quaternion"};
  const char* gs[] = {"cyclic:2", "cyclic:3", "cyclic:4", "symmetric:3",
                      "product:(cyclic:2,cyclic:2)"};
  for (const char* hspec : hs)
    for (const char* gspec : gs) {
      FiniteGroup h = named_group(hspec);
      FiniteGroup g = named_group(gspec);
      INFO(hspec << " -> " << gspec);
      CHECK((long long)homomorphisms(h, g).size() == hom_count_oracle(h, g));
    }
}

TEST_CASE("homomorphisms: budget exhaustion") {
  FiniteGroup a = named_group("symmetric:4");
  CHECK_THROWS_AS(homomorphisms(a, a, 50), BudgetError);
  try {
    homomorphisms(a, a, 50);
  } catch (const BudgetError& e) {
    CHECK(e.budget == "SearchBudgetExceeded");
  }
}

TEST_CASE("find_isomorphism") {
  FiniteGroup z6 = named_group("cyclic:6");
  FiniteGroup z6p = named_group("product:(cyclic:2,cyclic:3)");
  auto iso = find_isomorphism(z6, z6p);
  REQUIRE(iso.has_value());
  CHECK(is_homomorphism(z6, z6p, *iso));
  std::set<int> image(iso->begin(), iso->end());
  CHECK(image.size() == 6);

  CHECK(!find_isomorphism(named_group("symmetric:3"), z6).has_value());
  CHECK(!find_isomorphism(named_group("cyclic:4"),
                          named_group("product:(cyclic:2,cyclic:2)"))
             .has_value());
  CHECK(find_isomorphism(named_group("dihedral:3"), named_group("symmetric:3"))
            .has_value());
}

TEST_CASE("exponent") {
  CHECK(exponent(named_group("symmetric:3")) == 6);
  CHECK(exponent(named_group("quaternion")) == 4);
  CHECK(exponent(named_group("cyclic:12")) == 12);
  CHECK(exponent(named_group("product:(cyclic:2,cyclic:2)")) == 2);
  CHECK(exponent(named_group("cyclic:1")) == 1);
  CHECK(exponent(named_group("symmetric:4")) == 12);
}

TEST_CASE("sylow classification") {
  SylowReport q8 = sylow_classification(named_group("quaternion"));
  REQUIRE(q8.sylows.size() == 1);
  CHECK(q8.sylows[0].prime == 2);
  CHECK(!q8.sylows[0].abelian);
  CHECK(q8.has_nonabelian_sylow);

  SylowReport d4 = sylow_classification(named_group("dihedral:4"));
  CHECK(d4.has_nonabelian_sylow);

  SylowReport s3 = sylow_classification(named_group("symmetric:3"));
  REQUIRE(s3.sylows.size() == 2);
  CHECK(s3.sylows[0].prime == 2);
  CHECK(s3.sylows[0].subgroup.size() == 2);
  CHECK(s3.sylows[1].prime == 3);
  CHECK(s3.sylows[1].subgroup.size() == 3);
  CHECK(!s3.has_nonabelian_sylow);

  CHECK(!sylow_classification(named_group("cyclic:12")).has_nonabelian_sylow);
  CHECK(!sylow_classification(named_group("alternating:4")).has_nonabelian_sylow);
  CHECK(sylow_classification(named_group("symmetric:4")).has_nonabelian_sylow);
  CHECK(sylow_classification(named_group("product:(quaternion,cyclic:3)"))
            .has_nonabelian_sylow);

  // Sylow subgroups really are subgroups of the right order
  FiniteGroup g = named_group("symmetric:4");
  for (auto& info : sylow_classification(g).sylows) {
    CHECK(is_subgroup(g, info.subgroup));
    int pk = 1;
    while ((int)info.subgroup.size() > pk) pk *= info.prime;
    CHECK((int)info.subgroup.size() == pk);
    CHECK(g.n % (int)info.subgroup.size() == 0);
    CHECK((g.n / (int)info.subgroup.size()) % info.prime != 0);
  }
}

TEST_CASE("subgroup_group round trip") {
  FiniteGroup s4 = named_group("symmetric:4");
  auto subs = all_subgroups(s4);
  int checked = 0;
  for (auto& s : subs) {
    if (s.size() < 4) continue;
    SubgroupView v = subgroup_group(s4, s);
    REQUIRE(v.group.n == (int)s.size());
    for (int i = 0; i < v.group.n; ++i)
      for (int j = 0; j < v.group.n; ++j)
        REQUIRE(v.to_parent[v.group.mul(i, j)] ==
                s4.mul(v.to_parent[i], v.to_parent[j]));
    ++checked;
  }
  CHECK(checked > 5);
}
