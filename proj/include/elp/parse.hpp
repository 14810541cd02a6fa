#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "elp/literals.hpp"

namespace elp {

// Non-ground surface syntax. Variables start with an uppercase letter
// (except the keyword K); everything becomes ground before solving.

struct Term {
  bool is_var = false;
  std::string text;

  bool operator==(const Term& o) const { return is_var == o.is_var && text == o.text; }
  std::string to_string() const { return text; }
};

struct NGAtom {
  std::string pred;
  std::vector<Term> args;

  bool ground() const;
  std::string to_string() const;
  bool operator==(const NGAtom& o) const { return pred == o.pred && args == o.args; }
};

struct NGLiteral {
  NGAtom atom;
  bool strong_neg = false;

  std::string to_string() const;
};

/// Modal-free formula over non-ground atoms; mirrors Formula.
struct NGFormula {
  enum class Kind : std::uint8_t { falsum, truth, atom, conj, disj, implies, neg };
  using Ptr = std::shared_ptr<const NGFormula>;

  Kind kind = Kind::falsum;
  NGAtom atom;
  Ptr lhs, rhs;

  std::string to_string(Dialect d) const;
};

struct NGModal {
  NGFormula::Ptr body;
  bool default_neg = false;
  bool strong_neg = false;
  bool bare_atom = false;  // written `K a`, printed without parentheses

  std::string to_string(Dialect d) const;
};

/// Cardinality guard: `INT { schema : cond, cond }` or `INT { a, b }`.
struct NGGuard {
  int bound = 0;
  std::vector<NGAtom> elements;    // schema form: exactly one element
  std::vector<NGAtom> conditions;  // empty for the explicit-list form

  std::string to_string() const;
};

struct NGBodyElem {
  enum class Kind : std::uint8_t { literal, modal, guard };
  Kind kind = Kind::literal;
  NGLiteral lit;
  bool default_neg = false;
  NGModal modal;
  NGGuard card;

  std::string to_string(Dialect d) const;
};

struct NGRule {
  std::vector<NGLiteral> head;
  std::vector<NGBodyElem> body;

  std::string to_string(Dialect d) const;
};

struct SourceProgram {
  Dialect dialect = Dialect::two_valued;
  bool explicit_dialect = false;  // a #dialect directive was present
  std::vector<NGRule> statements;
  std::vector<NGAtom> vocab_decls;    // #vocab a, b.
  std::vector<NGAtom> domain_decls;   // #domain p(X).
  std::vector<std::string> const_decls;  // #const c.

  std::string to_string() const;
};

/// Parse a full program. When `dialect` is given, a conflicting #dialect
/// directive is an error; otherwise the directive (default: two-valued)
/// decides. Throws ParseError with line/column on syntax errors, dialect
/// violations, nested modal operators, and unsafe variables.
SourceProgram parse_program(const std::string& text,
                            std::optional<Dialect> dialect = std::nullopt);

/// Parse a single modal-free formula (for queries).
NGFormula::Ptr parse_formula(const std::string& text, Dialect dialect);

}  // namespace elp
