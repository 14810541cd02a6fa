#pragma once

#include <memory>
#include <set>
#include <string>

#include "elp/literals.hpp"

namespace elp {

/// Modal-free propositional formula. Connectives: #false, atom, &, |, ->
/// and a negation node. In the two-valued dialect the negation node is
/// definitionally f -> #false (eval2 treats it that way); in the Gelfond
/// dialect it is the primitive Kleene negation. #true is -#false.
class Formula {
 public:
  enum class Kind : std::uint8_t { falsum, atom, conj, disj, implies, neg };
  using Ptr = std::shared_ptr<const Formula>;

  static Ptr falsum();
  static Ptr truth();  // neg(falsum)
  static Ptr atom(Atom a);
  static Ptr atom(const ObjLiteral& l);  // strong-negated literal as neg(atom)
  static Ptr conj(Ptr l, Ptr r);
  static Ptr disj(Ptr l, Ptr r);
  static Ptr implies(Ptr l, Ptr r);
  static Ptr neg(Ptr f);

  Kind kind() const { return kind_; }
  Atom atom_ref() const { return atom_; }
  const Ptr& lhs() const { return lhs_; }
  const Ptr& rhs() const { return rhs_; }
  const Ptr& child() const { return lhs_; }

  bool is_truth() const { return kind_ == Kind::neg && lhs_->kind_ == Kind::falsum; }

  /// Canonical fully parenthesized printing; '-' or '~' for negation
  /// depending on dialect.
  std::string to_string(Dialect d) const;
  void collect_atoms(std::set<Atom>& out) const;
  int depth() const;

  friend bool equal(const Formula& a, const Formula& b);

 private:
  Formula(Kind k, Atom a, Ptr l, Ptr r) : kind_(k), atom_(a), lhs_(std::move(l)), rhs_(std::move(r)) {}
  Kind kind_;
  Atom atom_;
  Ptr lhs_, rhs_;
};

bool equal(const Formula& a, const Formula& b);
inline bool equal(const Formula::Ptr& a, const Formula::Ptr& b) { return equal(*a, *b); }

/// Classical evaluation (two-valued dialect); negation is material
/// implication to #false.
bool eval2(const Formula& f, const Interpretation& world);
inline bool eval2(const Formula::Ptr& f, const Interpretation& w) { return eval2(*f, w); }

/// Kleene three-valued evaluation (Gelfond dialect).
Truth eval3(const Formula& f, const ThreeValuedWorld& world);
inline Truth eval3(const Formula::Ptr& f, const ThreeValuedWorld& w) { return eval3(*f, w); }

// Kleene connective tables, exposed for direct conformance checks.
Truth kleene_not(Truth a);
Truth kleene_and(Truth a, Truth b);
Truth kleene_or(Truth a, Truth b);
Truth kleene_implies(Truth a, Truth b);

}  // namespace elp
