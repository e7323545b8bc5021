#ifndef EQKIT_ALGEBRA_HPP
#define EQKIT_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqkit/term.hpp"

namespace eqkit {

inline constexpr long long kDefaultAssignBudget = 100'000'000;
inline constexpr int kDefaultSiCap = 64;
inline constexpr int kDefaultEquationLenCap = 16;

// A finite algebra: universe {0..n-1} plus one table per signature symbol.
// Tables are flattened row-major (arity 0 -> one entry, arity 1 -> n,
// arity 2 -> n*n with x major).
struct FiniteAlgebra {
  int n = 0;
  Signature sig;
  std::vector<std::vector<int>> tables;
  std::string label;

  int op_index(const std::string& name) const { return sig.index_of(name); }
  int apply0(int op) const { return tables[op][0]; }
  int apply1(int op, int x) const { return tables[op][x]; }
  int apply2(int op, int x, int y) const { return tables[op][x * n + y]; }
};

// Table shapes and entry ranges.
bool tables_valid(const FiniteAlgebra& a);

// A group as an algebra in one of the four group sub-signatures.
FiniteAlgebra group_algebra(const FiniteGroup& g, Sig s, std::string label = "");

struct SatResult {
  bool holds = true;
  std::vector<std::string> vars;  // assignment order (first appearance)
  std::vector<int> assignment;    // values per var, filled when !holds
};

// Exhaustive satisfaction over all |A|^#vars assignments, lexicographic in
// first-appearance variable order; the first failing assignment is
// reported. Throws BudgetError when the assignment count exceeds budget.
SatResult satisfies_equation(const FiniteAlgebra& a, const Equation& e,
                             long long budget = kDefaultAssignBudget);
// Premises first: an assignment fails the quasi-equation when every premise
// holds but the conclusion does not.
SatResult satisfies_quasiequation(const FiniteAlgebra& a, const QuasiEquation& q,
                                  long long budget = kDefaultAssignBudget);

// A congruence as a canonical partition: block[i] is the least element of
// i's class.
struct Congruence {
  std::vector<int> block;
  bool operator==(const Congruence&) const = default;
  int classes() const;
  bool related(int x, int y) const { return block[x] == block[y]; }
};

Congruence identity_congruence(int n);
Congruence full_congruence(int n);
bool is_congruence(const FiniteAlgebra& a, const Congruence& c);

// Least congruence containing the pairs: union-find closed under all
// translations, worklist-driven.
Congruence congruence_generated(const FiniteAlgebra& a,
                                const std::vector<std::pair<int, int>>& pairs);

Congruence meet_congruence(const Congruence& x, const Congruence& y);
Congruence join_congruence(const FiniteAlgebra& a, const Congruence& x,
                           const Congruence& y);

// The whole congruence lattice (join closure of the principal congruences),
// sorted by class count descending then partition vector; identity first,
// full collapse last. Throws BudgetError past the cap.
std::vector<Congruence> all_congruences(const FiniteAlgebra& a, int cap = 100000);

struct SIResult {
  bool si = false;
  std::pair<int, int> monolith{-1, -1};  // least generating pair when si
};
// True iff the meet of all principal congruences on distinct pairs is
// nontrivial. Requires |A| >= 2.
SIResult is_subdirectly_irreducible(const FiniteAlgebra& a);

// Quotient by a congruence; universe = blocks ordered by least element.
FiniteAlgebra quotient_algebra(const FiniteAlgebra& a, const Congruence& c);

// Backtracking isomorphism search (same signature required).
std::optional<std::vector<int>> find_algebra_isomorphism(const FiniteAlgebra& a,
                                                         const FiniteAlgebra& b,
                                                         long long budget = 10'000'000);

// Quotients by the meet-irreducible congruences, deduplicated up to
// isomorphism, sorted by size. A subdirectly irreducible algebra yields
// itself. Throws BudgetError when |A| exceeds the cap.
std::vector<FiniteAlgebra> si_quotients(const FiniteAlgebra& a, int cap = kDefaultSiCap);

// The meet-irreducible congruences themselves, in the matching order
// (before deduplication of quotients).
std::vector<Congruence> meet_irreducible_congruences(const FiniteAlgebra& a);

// All equations of prefix length <= max_len over the signature, one
// representative per class modulo variable renaming and lhs/rhs swap.
// Variables are x1, x2, ... introduced in order of first appearance;
// orientation picks the lexicographically smaller formatted string. Sorted
// by length then text.
std::vector<Equation> all_equations(const Signature& sig, int max_len,
                                    int len_cap = kDefaultEquationLenCap);

// The members of all_equations that hold on A.
std::vector<Equation> enumerate_equations(const FiniteAlgebra& a, int max_len,
                                          long long budget = kDefaultAssignBudget,
                                          int len_cap = kDefaultEquationLenCap);

}  // namespace eqkit

#endif
