#include "eqkit/term.hpp"

#include <cctype>
#include <sstream>

#include "eqkit/errors.hpp"

namespace eqkit {

int Signature::index_of(const std::string& name) const {
  for (size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name == name) return static_cast<int>(i);
  return -1;
}

Signature group_signature(Sig s) {
  Signature sig;
  sig.ops.push_back({"*", 2});
  if (sig_has_inv(s)) sig.ops.push_back({"inv", 1});
  if (sig_has_one(s)) sig.ops.push_back({"1", 0});
  return sig;
}

Signature flat_signature(FlatTag tag) {
  Signature sig;
  sig.ops.push_back({"*", 2});
  if (tag == FlatTag::MeetInv) sig.ops.push_back({"inv", 1});
  sig.ops.push_back({"&", 2});
  return sig;
}

Term tvar(std::string name) {
  Term t;
  t.head = std::move(name);
  t.is_var = true;
  return t;
}

Term tapp(std::string op, std::vector<Term> args) {
  Term t;
  t.head = std::move(op);
  t.args = std::move(args);
  return t;
}

int term_size(const Term& t) {
  int n = 1;
  for (const Term& a : t.args) n += term_size(a);
  return n;
}

namespace {

const char* kReserved[] = {"*", "inv", "1", "&"};

bool is_reserved(const std::string& tok) {
  for (const char* r : kReserved)
    if (tok == r) return true;
  return false;
}

bool identifier_like(const std::string& tok) {
  if (tok.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(tok[0])) && tok[0] != '_') return false;
  for (char c : tok)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Term parse_stream(const std::vector<std::string>& toks, size_t& pos, const Signature& sig) {
  if (pos >= toks.size())
    throw ParseError(ParseError::Kind::ArityMismatch, "term: input ends mid-term");
  const std::string& tok = toks[pos++];
  int op = sig.index_of(tok);
  if (op >= 0) {
    Term t = tapp(tok);
    for (int i = 0; i < sig.ops[op].arity; ++i) t.args.push_back(parse_stream(toks, pos, sig));
    return t;
  }
  if (is_reserved(tok))
    throw ParseError(ParseError::Kind::UnknownSymbol,
                     "term: operation '" + tok + "' is not in the signature");
  if (!identifier_like(tok))
    throw ParseError(ParseError::Kind::UnknownSymbol, "term: bad token '" + tok + "'");
  return tvar(tok);
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> toks;
  std::istringstream is(text);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

Term parse_token_range(const std::vector<std::string>& toks, size_t from, size_t to,
                       const Signature& sig) {
  std::vector<std::string> slice(toks.begin() + from, toks.begin() + to);
  size_t pos = 0;
  Term t = parse_stream(slice, pos, sig);
  if (pos != slice.size())
    throw ParseError(ParseError::Kind::TrailingTokens,
                     "term: " + std::to_string(slice.size() - pos) + " token(s) left over");
  return t;
}

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.is_var) {
    for (const std::string& v : out)
      if (v == t.head) return;
    out.push_back(t.head);
    return;
  }
  for (const Term& a : t.args) collect_vars(a, out);
}

}  // namespace

Term parse_term(const std::string& text, const Signature& sig) {
  auto toks = split_tokens(text);
  return parse_token_range(toks, 0, toks.size(), sig);
}

std::string format_term(const Term& t) {
  std::string out = t.head;
  for (const Term& a : t.args) {
    out += ' ';
    out += format_term(a);
  }
  return out;
}

int prefix_length(const Equation& e) { return term_size(e.lhs) + term_size(e.rhs); }

int prefix_length(const QuasiEquation& q) {
  int n = prefix_length(q.conclusion);
  for (const Equation& p : q.premises) n += prefix_length(p);
  return n;
}

std::vector<std::string> equation_vars(const Equation& e) {
  std::vector<std::string> out;
  collect_vars(e.lhs, out);
  collect_vars(e.rhs, out);
  return out;
}

std::vector<std::string> quasiequation_vars(const QuasiEquation& q) {
  std::vector<std::string> out;
  for (const Equation& p : q.premises) {
    collect_vars(p.lhs, out);
    collect_vars(p.rhs, out);
  }
  collect_vars(q.conclusion.lhs, out);
  collect_vars(q.conclusion.rhs, out);
  return out;
}

std::string equation_text(const Equation& e) {
  return format_term(e.lhs) + " = " + format_term(e.rhs);
}

namespace {

Equation parse_equation_range(const std::vector<std::string>& toks, size_t from, size_t to,
                              const Signature& sig) {
  size_t eq = to;
  for (size_t i = from; i < to; ++i)
    if (toks[i] == "=") {
      if (eq != to)
        throw ParseError(ParseError::Kind::BadFormat, "equation: more than one '='");
      eq = i;
    }
  if (eq == to)
    throw ParseError(ParseError::Kind::BadFormat, "equation: missing '='");
  Equation e;
  e.lhs = parse_token_range(toks, from, eq, sig);
  e.rhs = parse_token_range(toks, eq + 1, to, sig);
  return e;
}

}  // namespace

Equation parse_equation(const std::string& text, const Signature& sig) {
  auto toks = split_tokens(text);
  return parse_equation_range(toks, 0, toks.size(), sig);
}

std::string quasiequation_text(const QuasiEquation& q) {
  std::string out;
  for (size_t i = 0; i < q.premises.size(); ++i) {
    if (i) out += " , ";
    out += equation_text(q.premises[i]);
  }
  if (!q.premises.empty()) out += " -> ";
  out += equation_text(q.conclusion);
  return out;
}

QuasiEquation parse_quasiequation(const std::string& text, const Signature& sig) {
  auto toks = split_tokens(text);
  size_t arrow = toks.size();
  for (size_t i = 0; i < toks.size(); ++i)
    if (toks[i] == "->") {
      if (arrow != toks.size())
        throw ParseError(ParseError::Kind::BadFormat, "quasi-equation: more than one '->'");
      arrow = i;
    }
  QuasiEquation q;
  if (arrow != toks.size()) {
    size_t start = 0;
    for (size_t i = 0; i <= arrow; ++i) {
      if (i == arrow || toks[i] == ",") {
        if (i == start)
          throw ParseError(ParseError::Kind::BadFormat, "quasi-equation: empty premise");
        q.premises.push_back(parse_equation_range(toks, start, i, sig));
        start = i + 1;
      }
    }
    q.conclusion = parse_equation_range(toks, arrow + 1, toks.size(), sig);
  } else {
    q.conclusion = parse_equation_range(toks, 0, toks.size(), sig);
  }
  return q;
}

}  // namespace eqkit
