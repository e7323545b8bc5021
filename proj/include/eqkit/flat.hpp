#ifndef EQKIT_FLAT_HPP
#define EQKIT_FLAT_HPP

#include <string>
#include <vector>

#include "eqkit/algebra.hpp"
#include "eqkit/group.hpp"
#include "eqkit/term.hpp"

namespace eqkit {

// A group with a fresh absorbing zero adjoined at index |G|, meet flattened
// to x&y = x if x == y else zero.
struct FlatAlgebra {
  FiniteAlgebra algebra;  // universe {0..|G|-1} ∪ {zero}
  FiniteGroup group;
  FlatTag tag = FlatTag::MeetInv;
  int zero = 0;  // always |G|
};

FlatAlgebra flat_extension(const FiniteGroup& g, FlatTag tag = FlatTag::MeetInv);

// The same algebra with the constant 1 adjoined, interpreted as the group
// identity — needed to evaluate translated equations whose source terms
// mention the constant.
FiniteAlgebra with_unit(const FlatAlgebra& f);

// Decides whether an algebra in a flat signature is a flat extension; on
// success carries the recovered group (nonzero elements in ascending
// universe order) and the index of the absorbing bottom.
struct FlatRecognition {
  bool flat = false;
  FiniteGroup group;           // meaningful only when flat
  int zero = -1;
  std::vector<int> to_parent;  // group index -> algebra index
  std::string reason;          // violated condition when not flat
};
FlatRecognition recognize_flat(const FiniteAlgebra& a);

// Quasi-equation -> equation translation
//   (Π_i (u_i & v_i))^d · (u_0 & v_0)^d  ≈  (Π_i (u_i & v_i))^d
// with left-associated products and the power written as d-1 repeated
// left multiplications. With pad = true (the default) every conclusion
// variable missing from the premises first gets a premise x ≈ x appended;
// with pad = false such input is a precondition violation. A quasi-equation
// with no premises and no conclusion variable cannot be translated at all
// (PreconditionError "EmptyPremiseUnpaddable").
Equation translate_qe_to_eq(const QuasiEquation& rho, int d, bool pad = true);

// Exhaustive law checking; `failing` names the first violated law in a
// fixed reporting order.
struct AxiomReport {
  bool ok = true;
  std::string failing;
};

// Naturally semilattice-ordered Clifford checks. Pre: signature {*, inv, &}.
AxiomReport verify_nsoc_axioms(const FiniteAlgebra& a);

// Idempotent-semiring checks. Pre: signature {*, &}.
AxiomReport verify_semiring_axioms(const FiniteAlgebra& a);

}  // namespace eqkit

#endif
