#include "elp/ground.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "elp/errors.hpp"

namespace elp {
namespace {

using Binding = std::map<std::string, std::string>;  // variable -> constant

/// Ground literals derived so far, indexed by predicate and polarity.
struct Derivation {
  std::map<std::pair<std::string, bool>, std::set<std::vector<std::string>>> tuples;

  bool add(const NGLiteral& l, const Binding& b);
  bool contains(const std::string& pred, bool sn, const std::vector<std::string>& args) const {
    auto it = tuples.find({pred, sn});
    return it != tuples.end() && it->second.count(args);
  }
  const std::set<std::vector<std::string>>& extension(const std::string& pred, bool sn) const {
    static const std::set<std::vector<std::string>> empty;
    auto it = tuples.find({pred, sn});
    return it == tuples.end() ? empty : it->second;
  }
};

std::vector<std::string> substitute_args(const NGAtom& a, const Binding& b) {
  std::vector<std::string> out;
  out.reserve(a.args.size());
  for (const auto& t : a.args) {
    if (!t.is_var) {
      out.push_back(t.text);
    } else {
      auto it = b.find(t.text);
      if (it == b.end())
        throw std::logic_error("unbound variable '" + t.text + "' survived the safety check");
      out.push_back(it->second);
    }
  }
  return out;
}

bool Derivation::add(const NGLiteral& l, const Binding& b) {
  return tuples[{l.atom.pred, l.strong_neg}].insert(substitute_args(l.atom, b)).second;
}

NGAtom ground_atom(const NGAtom& a, const Binding& b) {
  NGAtom out;
  out.pred = a.pred;
  for (const auto& s : substitute_args(a, b)) out.args.push_back(Term{false, s});
  return out;
}

Atom intern_atom(const NGAtom& a, const Binding& b) {
  return Atom::intern(ground_atom(a, b).to_string());
}

ObjLiteral intern_literal(const NGLiteral& l, const Binding& b) {
  return ObjLiteral(intern_atom(l.atom, b), l.strong_neg);
}

Formula::Ptr ground_formula(const NGFormula& f, const Binding& b) {
  switch (f.kind) {
    case NGFormula::Kind::falsum: return Formula::falsum();
    case NGFormula::Kind::truth: return Formula::truth();
    case NGFormula::Kind::atom: return Formula::atom(intern_atom(f.atom, b));
    case NGFormula::Kind::neg: return Formula::neg(ground_formula(*f.lhs, b));
    case NGFormula::Kind::conj:
      return Formula::conj(ground_formula(*f.lhs, b), ground_formula(*f.rhs, b));
    case NGFormula::Kind::disj:
      return Formula::disj(ground_formula(*f.lhs, b), ground_formula(*f.rhs, b));
    case NGFormula::Kind::implies:
      return Formula::implies(ground_formula(*f.lhs, b), ground_formula(*f.rhs, b));
  }
  throw std::logic_error("unreachable formula kind");
}

bool atom_has_vars(const NGAtom& a) { return !a.ground(); }

/// Unify one non-ground atom against a derived tuple, extending b.
bool unify(const NGAtom& a, const std::vector<std::string>& tuple, Binding& b,
           std::vector<std::string>& newly_bound) {
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    const Term& t = a.args[i];
    if (!t.is_var) {
      if (t.text != tuple[i]) return false;
      continue;
    }
    auto it = b.find(t.text);
    if (it != b.end()) {
      if (it->second != tuple[i]) return false;
    } else {
      b.emplace(t.text, tuple[i]);
      newly_bound.push_back(t.text);
    }
  }
  return true;
}

struct Grounder {
  const SourceProgram& src;
  Derivation derived;
  std::map<std::string, std::vector<std::string>> domains_of;  // var -> domain preds

  explicit Grounder(const SourceProgram& s) : src(s) {
    for (const auto& d : src.domain_decls) domains_of[d.args[0].text].push_back(d.pred);
  }

  bool domain_ok(const std::string& var, const std::string& val) const {
    auto it = domains_of.find(var);
    if (it == domains_of.end()) return true;
    for (const auto& pred : it->second)
      if (!derived.contains(pred, false, {val})) return false;
    return true;
  }

  /// Enumerate all substitutions for one rule against the current
  /// derivation and invoke cb on each. Non-ground positive body literals
  /// bind (and filter); ground conjuncts are kept unconditionally;
  /// leftover variables range over their domain predicates.
  void for_each_binding(const NGRule& r, const std::function<void(const Binding&)>& cb) {
    std::vector<const NGLiteral*> binders;
    for (const auto& e : r.body)
      if (e.kind == NGBodyElem::Kind::literal && !e.default_neg && atom_has_vars(e.lit.atom))
        binders.push_back(&e.lit);

    std::set<std::string> rule_vars;
    auto add_atom_vars = [&](const NGAtom& a) {
      for (const auto& t : a.args)
        if (t.is_var) rule_vars.insert(t.text);
    };
    std::function<void(const NGFormula&)> add_formula_vars = [&](const NGFormula& f) {
      if (f.kind == NGFormula::Kind::atom) add_atom_vars(f.atom);
      if (f.lhs) add_formula_vars(*f.lhs);
      if (f.rhs) add_formula_vars(*f.rhs);
    };
    for (const auto& l : r.head) add_atom_vars(l.atom);
    for (const auto& e : r.body) {
      if (e.kind == NGBodyElem::Kind::literal) add_atom_vars(e.lit.atom);
      if (e.kind == NGBodyElem::Kind::modal) add_formula_vars(*e.modal.body);
      if (e.kind == NGBodyElem::Kind::guard) {
        // variables bound by the guard's own conditions are local to it
        std::set<std::string> local;
        for (const auto& c : e.card.conditions)
          for (const auto& t : c.args)
            if (t.is_var) local.insert(t.text);
        for (const auto& el : e.card.elements)
          for (const auto& t : el.args)
            if (t.is_var && !local.count(t.text)) rule_vars.insert(t.text);
      }
    }

    Binding b;
    std::function<void(std::size_t)> match = [&](std::size_t i) {
      if (i == binders.size()) {
        // bind remaining variables from their domain predicates
        std::vector<std::string> free;
        for (const auto& v : rule_vars)
          if (!b.count(v)) free.push_back(v);
        std::function<void(std::size_t)> sweep = [&](std::size_t j) {
          if (j == free.size()) {
            for (const auto& [var, val] : b)
              if (!domain_ok(var, val)) return;
            cb(b);
            return;
          }
          const std::string& v = free[j];
          auto it = domains_of.find(v);
          if (it == domains_of.end())
            throw std::logic_error("unbound variable '" + v + "' survived the safety check");
          for (const auto& tuple : derived.extension(it->second[0], false)) {
            b[v] = tuple[0];
            sweep(j + 1);
          }
          b.erase(v);
        };
        sweep(0);
        return;
      }
      const NGLiteral* lit = binders[i];
      for (const auto& tuple : derived.extension(lit->atom.pred, lit->strong_neg)) {
        std::vector<std::string> bound;
        if (unify(lit->atom, tuple, b, bound)) match(i + 1);
        for (const auto& v : bound) b.erase(v);
      }
    };
    match(0);
  }

  void run_fixpoint() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : src.statements) {
        for_each_binding(r, [&](const Binding& b) {
          for (const auto& l : r.head)
            if (derived.add(l, b)) changed = true;
        });
      }
    }
  }

  std::optional<CardGuard> expand_guard(const NGGuard& g, const Binding& b) {
    CardGuard out;
    out.bound = g.bound;
    std::set<Atom> members;
    if (g.conditions.empty()) {
      for (const auto& el : g.elements) members.insert(intern_atom(el, b));
    } else {
      // schema form: local variables range over the condition extensions
      std::set<std::string> locals;
      for (const auto& c : g.conditions)
        for (const auto& t : c.args)
          if (t.is_var && !b.count(t.text)) locals.insert(t.text);
      Binding local = b;
      std::function<void(std::size_t)> match = [&](std::size_t i) {
        if (i == g.conditions.size()) {
          for (const auto& el : g.elements) members.insert(intern_atom(el, local));
          return;
        }
        const NGAtom& c = g.conditions[i];
        for (const auto& tuple : derived.extension(c.pred, false)) {
          std::vector<std::string> bound;
          if (unify(c, tuple, local, bound)) match(i + 1);
          for (const auto& v : bound) local.erase(v);
        }
      };
      match(0);
    }
    out.atoms.assign(members.begin(), members.end());
    std::sort(out.atoms.begin(), out.atoms.end());
    return out;
  }

  Program emit() {
    Program out;
    out.dialect = src.dialect;
    std::set<std::string> seen;
    for (const auto& r : src.statements) {
      for_each_binding(r, [&](const Binding& b) {
        Rule g;
        for (const auto& l : r.head) g.head.push_back(intern_literal(l, b));
        for (const auto& e : r.body) {
          switch (e.kind) {
            case NGBodyElem::Kind::literal:
              g.body.push_back(BodyElem::literal(intern_literal(e.lit, b), e.default_neg));
              break;
            case NGBodyElem::Kind::modal:
              g.premise.emplace_back(ground_formula(*e.modal.body, b), e.modal.default_neg,
                                     e.modal.strong_neg);
              break;
            case NGBodyElem::Kind::guard:
              g.guard = expand_guard(e.card, b);
              break;
          }
        }
        if (seen.insert(g.to_string(out.dialect)).second) out.rules.push_back(std::move(g));
      });
    }
    for (const auto& v : src.vocab_decls)
      out.vocabulary.push_back(Atom::intern(v.to_string()));
    std::sort(out.vocabulary.begin(), out.vocabulary.end());
    out.vocabulary.erase(std::unique(out.vocabulary.begin(), out.vocabulary.end()),
                         out.vocabulary.end());
    out.refresh_vocabulary();
    return out;
  }
};

}  // namespace

Program ground_program(const SourceProgram& src) {
  Grounder g(src);
  g.run_fixpoint();
  return g.emit();
}

Program parse_and_ground(const std::string& text, std::optional<Dialect> dialect) {
  return ground_program(parse_program(text, dialect));
}

}  // namespace elp
