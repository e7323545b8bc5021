#ifndef EQKIT_MEMBERSHIP_HPP
#define EQKIT_MEMBERSHIP_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqkit/algebra.hpp"
#include "eqkit/flat.hpp"
#include "eqkit/group.hpp"
#include "eqkit/presentation.hpp"
#include "eqkit/term.hpp"

namespace eqkit {

struct MembershipVerdict {
  enum class Kind { InQuasivariety, NotInQuasivariety, InVariety, NotInVariety };
  Kind kind;
  // NotInQuasivariety: least nonidentity element killed by every hom H -> G.
  int witness = -1;
  // InQuasivariety: a separating family — for each nonidentity x the first
  // hom with hom(x) != identity, deduplicated in order of first use.
  std::vector<Homomorphism> separating;
  // NotInVariety: the violating subdirectly irreducible quotient.
  std::optional<FiniteAlgebra> witness_algebra;
};

// H ∈ SP(G)? Decided by enumerating all homomorphisms H -> G and checking
// that every nonidentity element of H survives one of them.
MembershipVerdict in_quasivariety(const FiniteGroup& h, const FiniteGroup& g,
                                  long long budget = kDefaultHomBudget);

// Independent cross-check: builds an explicit embedding of H into a small
// power of G as the product of per-element separating homomorphisms (a
// greedy kernel-intersection chain keeps the power at most G^4, which for
// |H| <= 8 loses nothing), and verifies it elementwise. Pre: |H| <= 8.
bool embedding_oracle(const FiniteGroup& h, const FiniteGroup& g,
                      long long budget = kDefaultHomBudget);

// The witness quasi-equation: with ⟨C;R⟩ the short presentation of H and w
// a word for the least element h killed by every hom H -> G,
//   φ = (⋀_{u∈R} u ≈ 1) → w ≈ 1.
// G ⊨ φ and H ⊭ φ are both machine-checked before φ is returned
// (VerificationError means an internal inconsistency; nothing is emitted).
// Pre: in_quasivariety(H, G) is NotInQuasivariety.
QuasiEquation witness_quasi_equation(const FiniteGroup& g, const FiniteGroup& h,
                                     SimpleCatalog& catalog,
                                     long long budget = kDefaultHomBudget);

// translate_qe_to_eq(φ, exponent(G)), with ♭(G) ⊨ ρ♭ checked exhaustively
// when the assignment space fits the budget and ♭(H) ⊭ ρ♭ checked
// exhaustively when affordable, by the falsifying generator assignment
// otherwise.
Equation witness_equation_flat(const FiniteGroup& g, const FiniteGroup& h,
                               SimpleCatalog& catalog,
                               long long budget = kDefaultHomBudget);

// B ∈ V(♭(G))? True iff every subdirectly irreducible quotient of B is a
// flat extension of a group in SP(G). Pre: B in a flat signature.
MembershipVerdict in_variety_of_flat(const FiniteAlgebra& b, const FiniteGroup& g,
                                     int cap = kDefaultSiCap,
                                     long long budget = kDefaultHomBudget);

// First equation in A's length-ordered equation enumeration that fails on
// B, or nullopt when none up to max_len. Pre: same signature.
std::optional<Equation> shortest_failing_equation(const FiniteAlgebra& b,
                                                  const FiniteAlgebra& a, int max_len,
                                                  long long budget = kDefaultAssignBudget,
                                                  int len_cap = kDefaultEquationLenCap);

struct GrowthRecord {
  std::string label;
  int order = 0;
  long long pres_len = 0;  // short-presentation total length
  int qe_len = 0;          // prefix length of the witness quasi-equation
  int eq_len = 0;          // prefix length of the translated equation
  double log2cube = 0;     // (log2 order)^3
  double pres_ratio = 0, qe_ratio = 0, eq_ratio = 0;  // length / log2cube
};

// Runs the whole witness pipeline per family member. Pre: family sorted by
// order, and every member outside SP(G) (violations name the group).
std::vector<GrowthRecord> growth_experiment(const FiniteGroup& g,
                                            const std::vector<FiniteGroup>& family,
                                            SimpleCatalog& catalog,
                                            long long budget = kDefaultHomBudget);

// Deterministic CSV: header plus one row per record, ratios to six places.
std::string growth_csv(const std::vector<GrowthRecord>& records);

// Complexity-growth classification from the Sylow structure.
std::string sylow_gate(const FiniteGroup& g);

}  // namespace eqkit

#endif
