#include "eqkit/presentation.hpp"

#include <utility>
#include <vector>

namespace eqkit {

// HLT-style coset enumeration over the trivial subgroup. Rows are cosets,
// columns are generators and their inverses; coincidences are resolved
// immediately through a union-find in which the smaller-numbered coset
// survives. Reads of table entries always chase the union-find, so stale
// references to dead cosets are harmless.
TCResult todd_coxeter(const Presentation& p, int max_cosets) {
  if (max_cosets < 1) throw Error("todd_coxeter: max_cosets must be positive");
  const int ng = static_cast<int>(p.gens.size());
  const int ncols = 2 * ng;

  std::vector<std::vector<int>> tab;
  std::vector<int> uf;
  long long defined = 0;
  bool out_of_room = false;

  auto find = [&](int c) {
    while (uf[c] != c) {
      uf[c] = uf[uf[c]];
      c = uf[c];
    }
    return c;
  };
  auto new_coset = [&]() -> int {
    if (static_cast<int>(tab.size()) >= max_cosets) {
      out_of_room = true;
      return -1;
    }
    tab.emplace_back(ncols, -1);
    uf.push_back(static_cast<int>(tab.size()) - 1);
    ++defined;
    return static_cast<int>(tab.size()) - 1;
  };
  auto colof = [](const Literal& l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); };
  auto invcol = [](int col) { return col ^ 1; };

  std::vector<std::pair<int, int>> pending;
  auto merge = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    uf[b] = a;
    pending.emplace_back(a, b);
  };
  auto process_coincidences = [&]() {
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      for (int col = 0; col < ncols; ++col) {
        int d = tab[b][col];
        if (d < 0) continue;
        tab[b][col] = -1;
        d = find(d);
        int ra = find(a);
        if (tab[ra][col] < 0) {
          tab[ra][col] = d;
          int& back = tab[d][invcol(col)];
          if (back < 0) back = ra;
          else merge(back, ra);
        } else {
          merge(tab[ra][col], d);
        }
      }
    }
  };
  auto trace_fill = [&](int c, const GroupWord& w) -> int {
    int f = find(c);
    for (const Literal& l : w) {
      int col = colof(l);
      int nxt = tab[f][col];
      if (nxt >= 0) {
        f = find(nxt);
        continue;
      }
      int d = new_coset();
      if (d < 0) return -1;
      tab[f][col] = d;
      tab[d][invcol(col)] = f;
      f = d;
    }
    return f;
  };

  new_coset();
  for (int c = 0; c < static_cast<int>(tab.size()) && !out_of_room; ++c) {
    if (find(c) != c) continue;
    for (const Relation& rel : p.rels) {
      int lhs = trace_fill(c, rel.lhs);
      if (lhs < 0) break;
      int rhs = trace_fill(find(c), rel.rhs);
      if (rhs < 0) break;
      merge(lhs, rhs);
      process_coincidences();
      if (find(c) != c) break;
    }
    if (out_of_room || find(c) != c) continue;
    for (int col = 0; col < ncols && !out_of_room; ++col) {
      if (tab[c][col] >= 0) continue;
      int d = new_coset();
      if (d < 0) break;
      tab[c][col] = d;
      tab[d][invcol(col)] = c;
    }
  }

  TCResult r;
  r.cosets_defined = defined;
  if (out_of_room) return r;
  int live = 0;
  for (int c = 0; c < static_cast<int>(tab.size()); ++c)
    if (find(c) == c) ++live;
  r.order = live;
  return r;
}

}  // namespace eqkit
