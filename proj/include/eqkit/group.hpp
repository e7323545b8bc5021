#ifndef EQKIT_GROUP_HPP
#define EQKIT_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqkit/errors.hpp"

namespace eqkit {

// A finite group given by its full multiplication table over {0..n-1}.
// Instances are immutable after construction; all functions below treat
// them as read-only values.
struct FiniteGroup {
  int n = 1;                            // order
  std::vector<std::vector<int>> table;  // table[x][y] = x*y
  int identity = 0;
  std::vector<int> inverse;             // inverse[x]
  std::string label;

  int mul(int x, int y) const { return table[x][y]; }
  int inv(int x) const { return inverse[x]; }
  int pow(int x, long long k) const;
  int element_order(int x) const;
  bool is_abelian() const;
};

// Default cap on constructed group orders (7! covers symmetric:7).
inline constexpr int kDefaultOrderCap = 5040;
// Node budget for homomorphism backtracking.
inline constexpr long long kDefaultHomBudget = 10'000'000;

// Validates a multiplication table and derives identity and inverses.
// Throws TableError (NoIdentity / NoInverse / NotAssociative, in that
// checking order, naming the violating tuple) or Error for malformed input.
FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                       const std::string& label = "");

// Grammar: cyclic:n | dihedral:n | symmetric:n | alternating:n |
//          quaternion | product:(spec,spec)
// dihedral:n is the symmetry group of the n-gon (order 2n).
// Throws SpecError::UnknownSpec / SpecError::SizeLimitExceeded.
FiniteGroup named_group(const std::string& spec, int max_order = kDefaultOrderCap);

// Direct product on pairs (x, y) indexed as x*|B|+y.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           int max_order = kDefaultOrderCap);

// Closure of a generating set; result sorted ascending. Empty set -> {e}.
std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems);
// Pre: elems is a subgroup.
bool is_normal(const FiniteGroup& g, const std::vector<int>& elems);

// A subgroup re-indexed as a standalone group. Local element i corresponds
// to parent element to_parent[i]; elements keep their relative order.
struct SubgroupView {
  FiniteGroup group;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // parent index -> local index, -1 outside
};
SubgroupView subgroup_group(const FiniteGroup& g, const std::vector<int>& elems);

// Quotient by a normal subgroup. Cosets are named by their least element;
// quotient element i is the coset with representative reps[i], reps ascending.
// proj[x] is the quotient index of x's coset. Throws SubgroupError.
struct Quotient {
  FiniteGroup group;
  std::vector<int> proj;
  std::vector<int> reps;
};
Quotient quotient_by(const FiniteGroup& g, const std::vector<int>& normal);

// All subgroups (sorted element lists, deduplicated), in a canonical order.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);
std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g);
bool is_simple(const FiniteGroup& g);

// Composition series {e} = H_0 < H_1 < ... < H_m = G, each H_i normal in
// H_{i+1} with simple factor H_{i+1}/H_i. Deterministic: the series is built
// from the top by repeatedly taking the maximal proper normal subgroup whose
// sorted element list is lexicographically least.
struct CompositionSeries {
  std::vector<std::vector<int>> subgroups;  // H_0 .. H_m as sorted parent sets
  std::vector<FiniteGroup> factors;         // factors[i] = H_{i+1}/H_i
};
CompositionSeries composition_series(const FiniteGroup& g);

// Greedy generating sequence: repeatedly append the least element outside
// the closure of the ones picked so far.
std::vector<int> generating_sequence(const FiniteGroup& g);

struct Homomorphism {
  std::vector<int> map;  // map[x] in G for each x in H
};
bool is_homomorphism(const FiniteGroup& h, const FiniteGroup& g,
                     const std::vector<int>& map);

// All homomorphisms H -> G by backtracking over generator images with
// closure-consistency pruning; results ordered by the image tuple.
// Throws BudgetError("SearchBudgetExceeded") when the node budget runs out.
std::vector<Homomorphism> homomorphisms(const FiniteGroup& h, const FiniteGroup& g,
                                        long long budget = kDefaultHomBudget);

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b,
                                                 long long budget = kDefaultHomBudget);

// lcm of element orders.
int exponent(const FiniteGroup& g);

struct SylowInfo {
  int prime;
  std::vector<int> subgroup;  // sorted element list of the chosen Sylow p-subgroup
  bool abelian;
};
struct SylowReport {
  std::vector<SylowInfo> sylows;  // one per prime divisor, ascending
  bool has_nonabelian_sylow = false;
};
SylowReport sylow_classification(const FiniteGroup& g);

}  // namespace eqkit

#endif
