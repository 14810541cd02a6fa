#include "elp/program.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace elp {

std::string ModalLiteral::to_string(Dialect d) const {
  std::string out;
  if (default_neg) out += "not ";
  if (strong_neg) out += "-";
  out += "K ";
  if (body->kind() == Formula::Kind::atom) {
    out += body->to_string(d);
  } else {
    out += "(" + body->to_string(d) + ")";
  }
  return out;
}

bool equal(const ModalLiteral& a, const ModalLiteral& b) {
  return a.default_neg == b.default_neg && a.strong_neg == b.strong_neg &&
         equal(a.body, b.body);
}

std::string BodyElem::to_string(Dialect d) const {
  if (kind == Kind::constant) return const_value ? "#true" : "#false";
  std::string out;
  if (default_neg) out += "not ";
  if (lit.strong_neg) out += "-";
  out += lit.atom.name();
  (void)d;
  return out;
}

std::string Rule::to_string(Dialect d) const {
  std::string out;
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (i) out += " | ";
    out += head[i].to_string();
  }
  bool has_body = !body.empty() || !premise.empty() || guard.has_value();
  if (has_body) {
    if (!head.empty()) out += " ";
    out += ":- ";
    bool first = true;
    for (const auto& e : body) {
      if (!first) out += ", ";
      out += e.to_string(d);
      first = false;
    }
    for (const auto& m : premise) {
      if (!first) out += ", ";
      out += m.to_string(d);
      first = false;
    }
    if (guard) {
      if (!first) out += ", ";
      out += std::to_string(guard->bound) + " { ";
      for (std::size_t i = 0; i < guard->atoms.size(); ++i) {
        if (i) out += ", ";
        out += guard->atoms[i].name();
      }
      out += " }";
      first = false;
    }
  }
  return out + ".";
}

void Program::refresh_vocabulary() {
  std::set<Atom> vocab(vocabulary.begin(), vocabulary.end());
  for (const auto& r : rules) {
    for (const auto& l : r.head) vocab.insert(l.atom);
    for (const auto& e : r.body)
      if (e.kind == BodyElem::Kind::literal) vocab.insert(e.lit.atom);
    for (const auto& m : r.premise) m.body->collect_atoms(vocab);
    if (r.guard)
      for (const auto& a : r.guard->atoms) vocab.insert(a);
  }
  vocabulary.assign(vocab.begin(), vocab.end());
}

std::vector<Formula::Ptr> Program::modal_atoms() const {
  std::map<std::string, Formula::Ptr> byKey;
  for (const auto& r : rules)
    for (const auto& m : r.premise) byKey.emplace(m.atom_key(), m.body);
  std::vector<Formula::Ptr> out;
  out.reserve(byKey.size());
  for (auto& [k, f] : byKey) out.push_back(f);
  return out;
}

std::string Program::to_string() const {
  std::string out;
  for (const auto& r : rules) {
    out += r.to_string(dialect);
    out += "\n";
  }
  return out;
}

bool sat_modal(const PossibleWorldStructure& structure, const ModalLiteral& ml) {
  bool base;
  if (structure.dialect == Dialect::two_valued) {
    // K phi holds iff phi is true in every world; the single negation is
    // the complement.
    base = true;
    for (const auto& w : structure.two) {
      if (!eval2(ml.body, w)) {
        base = false;
        break;
      }
    }
    if (ml.default_neg || ml.strong_neg) base = !base;
    return base;
  }
  if (ml.strong_neg) {
    // -K phi: phi is outright false in at least one world.
    base = false;
    for (const auto& w : structure.three) {
      if (eval3(ml.body, w) == Truth::f) {
        base = true;
        break;
      }
    }
  } else {
    base = true;
    for (const auto& w : structure.three) {
      if (eval3(ml.body, w) != Truth::t) {
        base = false;
        break;
      }
    }
  }
  return ml.default_neg ? !base : base;
}

}  // namespace elp
