#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elp/formula.hpp"

namespace elp {

/// K-guarded formula occurrence in an epistemic premise. K-depth is
/// always 1 (the body is modal-free by construction). In the two-valued
/// dialect strong_neg is unused and default_neg stands for the single
/// derived negation.
struct ModalLiteral {
  Formula::Ptr body;
  bool default_neg = false;  // not ...
  bool strong_neg = false;   // -K ... (Gelfond only)

  ModalLiteral() = default;
  ModalLiteral(Formula::Ptr b, bool dn = false, bool sn = false)
      : body(std::move(b)), default_neg(dn), strong_neg(sn) {}

  /// Identity key of the underlying modal atom K(body).
  std::string atom_key() const { return body->to_string(Dialect::gelfond); }
  std::string to_string(Dialect d) const;
};

bool equal(const ModalLiteral& a, const ModalLiteral& b);

struct CardGuard {
  int bound = 0;
  std::vector<Atom> atoms;  // ground members, sorted
};

/// One conjunct of a rule's object body.
struct BodyElem {
  enum class Kind : std::uint8_t { literal, constant };
  Kind kind = Kind::literal;
  ObjLiteral lit;
  bool default_neg = false;  // not ...
  bool const_value = true;   // kind == constant: #true / #false

  static BodyElem literal(ObjLiteral l, bool dn = false) {
    BodyElem e;
    e.lit = l;
    e.default_neg = dn;
    return e;
  }
  static BodyElem constant(bool v) {
    BodyElem e;
    e.kind = Kind::constant;
    e.const_value = v;
    return e;
  }
  std::string to_string(Dialect d) const;
};

struct Rule {
  std::vector<ObjLiteral> head;  // empty = constraint
  std::vector<BodyElem> body;
  std::vector<ModalLiteral> premise;
  std::optional<CardGuard> guard;  // constraint rules only

  bool is_constraint() const { return head.empty(); }
  std::string to_string(Dialect d) const;
};

struct Program {
  std::vector<Rule> rules;
  Dialect dialect = Dialect::two_valued;
  std::vector<Atom> vocabulary;  // sorted, unique, superset of atoms in rules

  /// Recollect vocabulary from the rules, keeping declared extras.
  void refresh_vocabulary();

  /// Distinct modal atoms K(phi) occurring in premises, sorted by
  /// canonical body string.
  std::vector<Formula::Ptr> modal_atoms() const;

  std::string to_string() const;
};

/// Satisfaction of a modal literal against a possible-world structure
/// (independent of any particular world).
bool sat_modal(const PossibleWorldStructure& structure, const ModalLiteral& ml);

}  // namespace elp
