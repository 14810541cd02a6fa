#include "elp/formula.hpp"

namespace elp {

Formula::Ptr Formula::falsum() {
  static Ptr f(new Formula(Kind::falsum, Atom(), nullptr, nullptr));
  return f;
}

Formula::Ptr Formula::truth() { return neg(falsum()); }

Formula::Ptr Formula::atom(Atom a) {
  return Ptr(new Formula(Kind::atom, a, nullptr, nullptr));
}

Formula::Ptr Formula::atom(const ObjLiteral& l) {
  auto base = atom(l.atom);
  return l.strong_neg ? neg(base) : base;
}

Formula::Ptr Formula::conj(Ptr l, Ptr r) {
  return Ptr(new Formula(Kind::conj, Atom(), std::move(l), std::move(r)));
}

Formula::Ptr Formula::disj(Ptr l, Ptr r) {
  return Ptr(new Formula(Kind::disj, Atom(), std::move(l), std::move(r)));
}

Formula::Ptr Formula::implies(Ptr l, Ptr r) {
  return Ptr(new Formula(Kind::implies, Atom(), std::move(l), std::move(r)));
}

Formula::Ptr Formula::neg(Ptr f) {
  return Ptr(new Formula(Kind::neg, Atom(), std::move(f), nullptr));
}

std::string Formula::to_string(Dialect d) const {
  switch (kind_) {
    case Kind::falsum:
      return "#false";
    case Kind::atom:
      return atom_.name();
    case Kind::conj:
      return "(" + lhs_->to_string(d) + " & " + rhs_->to_string(d) + ")";
    case Kind::disj:
      return "(" + lhs_->to_string(d) + " | " + rhs_->to_string(d) + ")";
    case Kind::implies:
      return "(" + lhs_->to_string(d) + " -> " + rhs_->to_string(d) + ")";
    case Kind::neg:
      if (lhs_->kind_ == Kind::falsum) return "#true";
      return std::string(d == Dialect::gelfond ? "-" : "~") + lhs_->to_string(d);
  }
  return "";
}

void Formula::collect_atoms(std::set<Atom>& out) const {
  if (kind_ == Kind::atom) {
    out.insert(atom_);
    return;
  }
  if (lhs_) lhs_->collect_atoms(out);
  if (rhs_) rhs_->collect_atoms(out);
}

int Formula::depth() const {
  int d = 0;
  if (lhs_) d = std::max(d, lhs_->depth() + 1);
  if (rhs_) d = std::max(d, rhs_->depth() + 1);
  return d;
}

bool equal(const Formula& a, const Formula& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Formula::Kind::falsum:
      return true;
    case Formula::Kind::atom:
      return a.atom_ == b.atom_;
    case Formula::Kind::neg:
      return equal(*a.lhs_, *b.lhs_);
    default:
      return equal(*a.lhs_, *b.lhs_) && equal(*a.rhs_, *b.rhs_);
  }
}

bool eval2(const Formula& f, const Interpretation& world) {
  switch (f.kind()) {
    case Formula::Kind::falsum:
      return false;
    case Formula::Kind::atom:
      return world.contains(f.atom_ref());
    case Formula::Kind::conj:
      return eval2(*f.lhs(), world) && eval2(*f.rhs(), world);
    case Formula::Kind::disj:
      return eval2(*f.lhs(), world) || eval2(*f.rhs(), world);
    case Formula::Kind::implies:
      return !eval2(*f.lhs(), world) || eval2(*f.rhs(), world);
    case Formula::Kind::neg:
      // definitionally child -> #false
      return !eval2(*f.child(), world);
  }
  return false;
}

Truth kleene_not(Truth a) {
  switch (a) {
    case Truth::t: return Truth::f;
    case Truth::f: return Truth::t;
    default: return Truth::u;
  }
}

Truth kleene_and(Truth a, Truth b) { return a < b ? a : b; }

Truth kleene_or(Truth a, Truth b) { return a < b ? b : a; }

Truth kleene_implies(Truth a, Truth b) { return kleene_or(kleene_not(a), b); }

Truth eval3(const Formula& f, const ThreeValuedWorld& world) {
  switch (f.kind()) {
    case Formula::Kind::falsum:
      return Truth::f;
    case Formula::Kind::atom:
      return world.value_of(f.atom_ref());
    case Formula::Kind::conj:
      return kleene_and(eval3(*f.lhs(), world), eval3(*f.rhs(), world));
    case Formula::Kind::disj:
      return kleene_or(eval3(*f.lhs(), world), eval3(*f.rhs(), world));
    case Formula::Kind::implies:
      return kleene_implies(eval3(*f.lhs(), world), eval3(*f.rhs(), world));
    case Formula::Kind::neg:
      return kleene_not(eval3(*f.child(), world));
  }
  return Truth::u;
}

}  // namespace elp
