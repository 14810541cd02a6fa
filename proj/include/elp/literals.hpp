#pragma once

#include <set>
#include <string>
#include <vector>

#include "elp/atom.hpp"

namespace elp {

enum class Dialect { two_valued, gelfond };

enum class Truth : std::uint8_t { f = 0, u = 1, t = 2 };

/// An atom or its strong negation. In the two-valued dialect strong_neg
/// is always false.
struct ObjLiteral {
  Atom atom;
  bool strong_neg = false;

  ObjLiteral() = default;
  ObjLiteral(Atom a, bool neg = false) : atom(a), strong_neg(neg) {}

  ObjLiteral complement() const { return ObjLiteral(atom, !strong_neg); }
  std::string to_string() const { return (strong_neg ? "-" : "") + atom.name(); }

  bool operator==(const ObjLiteral& o) const {
    return atom == o.atom && strong_neg == o.strong_neg;
  }
  bool operator!=(const ObjLiteral& o) const { return !(*this == o); }
  bool operator<(const ObjLiteral& o) const {
    if (atom != o.atom) return atom < o.atom;
    return strong_neg < o.strong_neg;
  }
};

/// Two-valued world: the set of true atoms within the owning program's
/// vocabulary. Ordered for canonical output.
struct Interpretation {
  std::set<Atom> true_atoms;

  Interpretation() = default;
  explicit Interpretation(std::set<Atom> atoms) : true_atoms(std::move(atoms)) {}

  bool contains(Atom a) const { return true_atoms.count(a) != 0; }
  bool subset_of(const Interpretation& o) const;
  std::string to_string() const;

  bool operator==(const Interpretation& o) const { return true_atoms == o.true_atoms; }
  bool operator!=(const Interpretation& o) const { return !(*this == o); }
  bool operator<(const Interpretation& o) const;
};

/// Three-valued world: a consistent set of literals; atoms absent in both
/// polarities are unknown.
struct ThreeValuedWorld {
  std::set<ObjLiteral> literals;

  ThreeValuedWorld() = default;
  explicit ThreeValuedWorld(std::set<ObjLiteral> lits) : literals(std::move(lits)) {}

  bool consistent() const;
  bool contains(const ObjLiteral& l) const { return literals.count(l) != 0; }
  Truth value_of(Atom a) const;
  std::string to_string() const;

  bool operator==(const ThreeValuedWorld& o) const { return literals == o.literals; }
  bool operator!=(const ThreeValuedWorld& o) const { return !(*this == o); }
  bool operator<(const ThreeValuedWorld& o) const;
};

/// Nonempty, duplicate-free, canonically sorted family of worlds.
/// Exactly one of `two` / `three` is populated, per `dialect`.
struct PossibleWorldStructure {
  Dialect dialect = Dialect::two_valued;
  std::vector<Interpretation> two;
  std::vector<ThreeValuedWorld> three;

  static PossibleWorldStructure of(std::vector<Interpretation> worlds);
  static PossibleWorldStructure of(std::vector<ThreeValuedWorld> worlds);

  bool empty() const { return two.empty() && three.empty(); }
  std::size_t size() const { return dialect == Dialect::two_valued ? two.size() : three.size(); }
  std::string to_string() const;

  bool operator==(const PossibleWorldStructure& o) const {
    return dialect == o.dialect && two == o.two && three == o.three;
  }
  bool operator<(const PossibleWorldStructure& o) const;
};

}  // namespace elp
