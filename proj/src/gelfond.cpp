#include "elp/gelfond.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "elp/errors.hpp"

namespace elp {

PrimedVocabulary PrimedVocabulary::make(const std::vector<Atom>& vocab) {
  PrimedVocabulary pv;
  pv.bases_ = vocab;
  std::set<std::string> taken;
  for (Atom a : vocab) taken.insert(a.name());
  for (Atom a : vocab) {
    // suffix the predicate part so that pred(arg) atoms stay grammatical
    std::string name = a.name();
    std::size_t paren = name.find('(');
    std::string pred = paren == std::string::npos ? name : name.substr(0, paren);
    std::string rest = paren == std::string::npos ? "" : name.substr(paren);
    std::string cand = pred + "_p" + rest;
    for (int k = 1; taken.count(cand); ++k) cand = pred + "_p" + std::to_string(k) + rest;
    taken.insert(cand);
    Atom primed = Atom::intern(cand);
    pv.to_primed_.emplace(a, primed);
    pv.to_base_.emplace(primed, a);
  }
  return pv;
}

Atom PrimedVocabulary::primed(Atom base) const {
  auto it = to_primed_.find(base);
  if (it == to_primed_.end())
    throw std::invalid_argument("atom outside the primed vocabulary: " + base.name());
  return it->second;
}

std::optional<Atom> PrimedVocabulary::base_of(Atom maybe_primed) const {
  auto it = to_base_.find(maybe_primed);
  if (it == to_base_.end()) return std::nullopt;
  return it->second;
}

SignedFormulaPair plus_minus(const Formula::Ptr& phi, const PrimedVocabulary& pv) {
  using F = Formula;
  switch (phi->kind()) {
    case F::Kind::falsum:
      return {F::falsum(), F::falsum()};
    case F::Kind::atom: {
      // x is true iff x holds; x is non-false iff x' does not hold
      Atom x = phi->atom_ref();
      return {F::atom(x), F::neg(F::atom(pv.primed(x)))};
    }
    case F::Kind::neg: {
      auto c = plus_minus(phi->child(), pv);
      return {F::neg(c.minus), F::neg(c.plus)};
    }
    case F::Kind::conj: {
      auto l = plus_minus(phi->lhs(), pv);
      auto r = plus_minus(phi->rhs(), pv);
      return {F::conj(l.plus, r.plus), F::conj(l.minus, r.minus)};
    }
    case F::Kind::disj: {
      auto l = plus_minus(phi->lhs(), pv);
      auto r = plus_minus(phi->rhs(), pv);
      return {F::disj(l.plus, r.plus), F::disj(l.minus, r.minus)};
    }
    case F::Kind::implies: {
      auto l = plus_minus(phi->lhs(), pv);
      auto r = plus_minus(phi->rhs(), pv);
      return {F::implies(l.minus, r.plus), F::implies(l.plus, r.minus)};
    }
  }
  throw std::logic_error("unreachable formula kind");
}

DisjunctionSet g_reduct(const Program& p, const PossibleWorldStructure& a,
                        const ThreeValuedWorld& w) {
  if (a.empty()) throw std::invalid_argument("g_reduct needs a nonempty structure");
  DisjunctionSet out;
  for (const auto& rule : p.rules) {
    if (rule.guard) continue;
    bool fired = true;
    for (const auto& e : rule.body) {
      bool sat;
      if (e.kind == BodyElem::Kind::constant) {
        sat = e.const_value;
      } else {
        // membership reading: l holds iff l is in w
        sat = w.contains(e.lit);
        if (e.default_neg) sat = !sat;
      }
      if (!sat) { fired = false; break; }
    }
    if (!fired) continue;
    for (const auto& ml : rule.premise)
      if (!sat_modal(a, ml)) { fired = false; break; }
    if (!fired) continue;
    std::vector<ObjLiteral> head = rule.head;
    std::sort(head.begin(), head.end());
    head.erase(std::unique(head.begin(), head.end()), head.end());
    out.disjunctions.push_back(std::move(head));
  }
  std::sort(out.disjunctions.begin(), out.disjunctions.end());
  out.disjunctions.erase(std::unique(out.disjunctions.begin(), out.disjunctions.end()),
                         out.disjunctions.end());
  return out;
}

Program sigma_translate(const Program& p, PrimedVocabulary* out_pv) {
  if (p.dialect != Dialect::gelfond)
    throw std::invalid_argument("sigma translation takes a Gelfond-dialect program");
  PrimedVocabulary pv = PrimedVocabulary::make(p.vocabulary);

  auto map_lit = [&](const ObjLiteral& l) {
    return ObjLiteral(l.strong_neg ? pv.primed(l.atom) : l.atom, false);
  };

  Program out;
  out.dialect = Dialect::two_valued;
  for (const auto& rule : p.rules) {
    Rule r;
    for (const auto& l : rule.head) r.head.push_back(map_lit(l));
    for (const auto& e : rule.body) {
      if (e.kind == BodyElem::Kind::constant)
        r.body.push_back(BodyElem::constant(e.const_value));
      else
        r.body.push_back(BodyElem::literal(map_lit(e.lit), e.default_neg));
    }
    for (const auto& ml : rule.premise) {
      auto pm = plus_minus(ml.body, pv);
      // K phi     |-> K phi+        -K phi     |-> not K phi-
      // not K phi |-> not K phi+    not -K phi |-> K phi-
      r.premise.emplace_back(ml.strong_neg ? pm.minus : pm.plus,
                             ml.strong_neg != ml.default_neg);
    }
    r.guard = rule.guard;
    out.rules.push_back(std::move(r));
  }
  // consistency: no atom together with its primed counterpart
  for (Atom x : p.vocabulary) {
    Rule c;
    c.body.push_back(BodyElem::literal(ObjLiteral(x)));
    c.body.push_back(BodyElem::literal(ObjLiteral(pv.primed(x))));
    out.rules.push_back(std::move(c));
  }
  for (Atom x : p.vocabulary) {
    out.vocabulary.push_back(x);
    out.vocabulary.push_back(pv.primed(x));
  }
  std::sort(out.vocabulary.begin(), out.vocabulary.end());
  out.refresh_vocabulary();
  if (out_pv) *out_pv = std::move(pv);
  return out;
}

Interpretation prime_encode(const ThreeValuedWorld& w, const PrimedVocabulary& pv) {
  std::set<Atom> atoms;
  for (const auto& l : w.literals) atoms.insert(l.strong_neg ? pv.primed(l.atom) : l.atom);
  return Interpretation(std::move(atoms));
}

ThreeValuedWorld prime_decode(const Interpretation& m, const PrimedVocabulary& pv) {
  std::set<ObjLiteral> lits;
  for (Atom a : m.true_atoms) {
    if (auto base = pv.base_of(a))
      lits.insert(ObjLiteral(*base, true));
    else
      lits.insert(ObjLiteral(a));
  }
  ThreeValuedWorld w(std::move(lits));
  if (!w.consistent())
    throw std::invalid_argument("prime decoding hit an atom together with its primed form");
  return w;
}

namespace {

std::vector<PossibleWorldStructure> direct_world_views(const Program& p, EngineStats* stats) {
  if (p.vocabulary.size() > 2)
    throw ResourceLimitError("direct world-view search is capped at 2 vocabulary atoms");
  std::vector<ThreeValuedWorld> worlds = all_consistent_worlds(p.vocabulary);
  std::vector<PossibleWorldStructure> views;
  std::size_t families = std::size_t(1) << worlds.size();
  for (std::size_t mask = 1; mask < families; ++mask) {
    std::vector<ThreeValuedWorld> fam;
    for (std::size_t i = 0; i < worlds.size(); ++i)
      if ((mask >> i) & 1) fam.push_back(worlds[i]);
    auto a = PossibleWorldStructure::of(fam);
    if (stats) ++stats->partitions_checked;
    Program reduct = epistemic_reduct(p, a, ReductMode::rulewise);
    if (stats) ++stats->base_calls;
    std::vector<ThreeValuedWorld> s = supported_answer_sets(reduct);
    std::sort(s.begin(), s.end());
    if (s == a.three) views.push_back(std::move(a));
  }
  return views;
}

}  // namespace

std::vector<PossibleWorldStructure> gelfond_world_views(const Program& p, GelfondMethod method,
                                                        const EngineOptions& opts,
                                                        EngineStats* stats) {
  if (p.dialect != Dialect::gelfond)
    throw std::invalid_argument("gelfond_world_views takes a Gelfond-dialect program");
  if (method == GelfondMethod::direct) {
    auto views = direct_world_views(p, stats);
    std::sort(views.begin(), views.end());
    return views;
  }
  PrimedVocabulary pv;
  Program q = sigma_translate(p, &pv);
  std::vector<WorldView> primed_views = enumerate_world_views(q, Semantics::supported, opts, stats);
  std::vector<PossibleWorldStructure> views;
  for (const auto& v : primed_views) {
    std::vector<ThreeValuedWorld> fam;
    fam.reserve(v.structure.two.size());
    for (const auto& m : v.structure.two) fam.push_back(prime_decode(m, pv));
    views.push_back(PossibleWorldStructure::of(std::move(fam)));
  }
  std::sort(views.begin(), views.end());
  return views;
}

}  // namespace elp
