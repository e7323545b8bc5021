#ifndef EQKIT_TERM_HPP
#define EQKIT_TERM_HPP

#include <string>
#include <vector>

#include "eqkit/presentation.hpp"

namespace eqkit {

// An operation symbol with its arity. The reserved token set is
// "*" (binary product), "inv" (unary inversion), "1" (constant) and
// "&" (binary meet); signatures pick a subset.
struct OpSym {
  std::string name;
  int arity;
  bool operator==(const OpSym&) const = default;
};

struct Signature {
  std::vector<OpSym> ops;
  int index_of(const std::string& name) const;  // -1 if absent
  bool operator==(const Signature&) const = default;
};

// The four group sub-signatures, keyed by the presentation module's Sig.
Signature group_signature(Sig s);

// Flat-algebra signatures: {*, inv, &} or {*, &}.
enum class FlatTag { MeetInv, Meet };
Signature flat_signature(FlatTag tag);

// A term over some signature: operation node or variable leaf. `head` is
// the operation symbol or the variable name.
struct Term {
  std::string head;
  bool is_var = false;
  std::vector<Term> args;
  bool operator==(const Term&) const = default;
};

Term tvar(std::string name);
Term tapp(std::string op, std::vector<Term> args = {});

// Token count of the prefix form (one token per node).
int term_size(const Term& t);

// Whitespace-separated prefix tokens; reserved tokens must be operations of
// the signature, anything else is a variable. Round trip:
// parse_term(format_term(t)) == t.
Term parse_term(const std::string& text, const Signature& sig);
std::string format_term(const Term& t);

struct Equation {
  Term lhs, rhs;
  bool operator==(const Equation&) const = default;
};

struct QuasiEquation {
  std::vector<Equation> premises;
  Equation conclusion;
  bool operator==(const QuasiEquation&) const = default;
};

// Symbol count of all terms' prefix forms concatenated; connectives are
// free of charge.
int prefix_length(const Equation& e);
int prefix_length(const QuasiEquation& q);

// Variables in first-appearance order, reading premises then conclusion,
// each lhs before its rhs.
std::vector<std::string> equation_vars(const Equation& e);
std::vector<std::string> quasiequation_vars(const QuasiEquation& q);

// Text forms: "LHS = RHS" and "p1 = q1 , p2 = q2 -> l = r" (no arrow when
// there are no premises).
std::string equation_text(const Equation& e);
Equation parse_equation(const std::string& text, const Signature& sig);
std::string quasiequation_text(const QuasiEquation& q);
QuasiEquation parse_quasiequation(const std::string& text, const Signature& sig);

}  // namespace eqkit

#endif
