#ifndef EQKIT_ERRORS_HPP
#define EQKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eqkit {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Multiplication-table validation failures. `at` holds the offending
// indices: (x,y,z) for associativity, (x,-1,-1) for a missing inverse.
struct TableError : Error {
  enum class Kind { NotAssociative, NoIdentity, NoInverse };
  Kind kind;
  int x = -1, y = -1, z = -1;
  TableError(Kind k, const std::string& msg, int x_ = -1, int y_ = -1, int z_ = -1)
      : Error(msg), kind(k), x(x_), y(y_), z(z_) {}
};

// Errors from the named-group spec parser.
struct SpecError : Error {
  enum class Kind { UnknownSpec, SizeLimitExceeded };
  Kind kind;
  SpecError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

// A subset handed to quotient_by / lift machinery is not what it must be.
struct SubgroupError : Error {
  enum class Kind { NotSubgroup, NotNormal, NotSimple, GeneratorImageNotInSubgroup };
  Kind kind;
  SubgroupError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

// A search or enumeration hit its node/assignment budget.
struct BudgetError : Error {
  std::string budget;  // which budget was exhausted
  BudgetError(const std::string& which, const std::string& msg)
      : Error(msg), budget(which) {}
};

// Term / equation / presentation text could not be parsed.
struct ParseError : Error {
  enum class Kind { ArityMismatch, UnknownSymbol, TrailingTokens, BadFormat };
  Kind kind;
  ParseError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

// A precondition of a high-level operation does not hold
// (e.g. asking for a non-membership witness for an actual member).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// An internally produced certificate failed its own verification.
// This always indicates a bug and is never downgraded to a result.
struct VerificationError : Error {
  explicit VerificationError(const std::string& msg) : Error(msg) {}
};

}  // namespace eqkit

#endif
