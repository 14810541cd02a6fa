#include "elp/literals.hpp"

#include <algorithm>
#include <stdexcept>

namespace elp {

bool Interpretation::subset_of(const Interpretation& o) const {
  return std::includes(o.true_atoms.begin(), o.true_atoms.end(),
                       true_atoms.begin(), true_atoms.end());
}

std::string Interpretation::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& a : true_atoms) {
    if (!first) out += ", ";
    out += a.name();
    first = false;
  }
  return out + "}";
}

bool Interpretation::operator<(const Interpretation& o) const {
  return std::lexicographical_compare(true_atoms.begin(), true_atoms.end(),
                                      o.true_atoms.begin(), o.true_atoms.end());
}

bool ThreeValuedWorld::consistent() const {
  for (const auto& l : literals)
    if (l.strong_neg && literals.count(ObjLiteral(l.atom, false))) return false;
  return true;
}

Truth ThreeValuedWorld::value_of(Atom a) const {
  if (literals.count(ObjLiteral(a, false))) return Truth::t;
  if (literals.count(ObjLiteral(a, true))) return Truth::f;
  return Truth::u;
}

std::string ThreeValuedWorld::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : literals) {
    if (!first) out += ", ";
    out += l.to_string();
    first = false;
  }
  return out + "}";
}

bool ThreeValuedWorld::operator<(const ThreeValuedWorld& o) const {
  return std::lexicographical_compare(literals.begin(), literals.end(),
                                      o.literals.begin(), o.literals.end());
}

PossibleWorldStructure PossibleWorldStructure::of(std::vector<Interpretation> worlds) {
  if (worlds.empty()) throw std::invalid_argument("possible-world structure must be nonempty");
  std::sort(worlds.begin(), worlds.end());
  worlds.erase(std::unique(worlds.begin(), worlds.end()), worlds.end());
  PossibleWorldStructure s;
  s.dialect = Dialect::two_valued;
  s.two = std::move(worlds);
  return s;
}

PossibleWorldStructure PossibleWorldStructure::of(std::vector<ThreeValuedWorld> worlds) {
  if (worlds.empty()) throw std::invalid_argument("possible-world structure must be nonempty");
  for (const auto& w : worlds)
    if (!w.consistent()) throw std::invalid_argument("inconsistent three-valued world");
  std::sort(worlds.begin(), worlds.end());
  worlds.erase(std::unique(worlds.begin(), worlds.end()), worlds.end());
  PossibleWorldStructure s;
  s.dialect = Dialect::gelfond;
  s.three = std::move(worlds);
  return s;
}

std::string PossibleWorldStructure::to_string() const {
  std::string out = "{";
  bool first = true;
  if (dialect == Dialect::two_valued) {
    for (const auto& w : two) {
      if (!first) out += ", ";
      out += w.to_string();
      first = false;
    }
  } else {
    for (const auto& w : three) {
      if (!first) out += ", ";
      out += w.to_string();
      first = false;
    }
  }
  return out + "}";
}

bool PossibleWorldStructure::operator<(const PossibleWorldStructure& o) const {
  if (dialect != o.dialect) return dialect < o.dialect;
  if (two != o.two) return two < o.two;
  return three < o.three;
}

}  // namespace elp
