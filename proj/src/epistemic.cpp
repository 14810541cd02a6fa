#include "elp/epistemic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "elp/errors.hpp"

namespace elp {
namespace {

std::set<std::string> key_set(const std::vector<Formula::Ptr>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(f->to_string(Dialect::gelfond));
  return out;
}

/// Which rules survive the partition's blocking.
std::vector<bool> blocked_mask(const Program& p, const Partition& part) {
  auto phi = key_set(part.phi);
  auto psi = key_set(part.psi);
  std::vector<bool> kept(p.rules.size(), true);
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    for (const auto& ml : p.rules[i].premise) {
      std::string key = ml.atom_key();
      bool negated = ml.default_neg || ml.strong_neg;
      if ((!negated && psi.count(key)) || (negated && phi.count(key))) {
        kept[i] = false;
        break;
      }
    }
  }
  return kept;
}

/// Which rules survive the rulewise reduct against a structure.
std::vector<bool> reduct_mask(const Program& p, const PossibleWorldStructure& a) {
  std::vector<bool> kept(p.rules.size(), true);
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    for (const auto& ml : p.rules[i].premise) {
      if (!sat_modal(a, ml)) {
        kept[i] = false;
        break;
      }
    }
  }
  return kept;
}

Program strip_premises(const Program& p, const std::vector<bool>& kept) {
  Program out;
  out.dialect = p.dialect;
  out.vocabulary = p.vocabulary;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    if (!kept[i]) continue;
    Rule r = p.rules[i];
    r.premise.clear();
    out.rules.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Program epistemic_reduct(const Program& p, const PossibleWorldStructure& a, ReductMode mode) {
  if (a.empty()) throw std::invalid_argument("epistemic reduct needs a nonempty structure");
  if (mode == ReductMode::rulewise) return strip_premises(p, reduct_mask(p, a));

  // substitution: K(phi) |-> #true / #false inside each premise conjunct
  Program out;
  out.dialect = p.dialect;
  out.vocabulary = p.vocabulary;
  for (const auto& rule : p.rules) {
    Rule r;
    r.head = rule.head;
    r.body = rule.body;
    r.guard = rule.guard;
    for (const auto& ml : rule.premise) {
      ModalLiteral positive(ml.body);
      bool value = sat_modal(a, positive);
      // apply the conjunct's own negations to the substituted constant
      if (ml.strong_neg) value = !value;
      if (ml.default_neg) value = !value;
      r.body.push_back(BodyElem::constant(value));
    }
    out.rules.push_back(std::move(r));
  }
  return out;
}

Program blocked_program(const Program& p, const Partition& part) {
  return strip_premises(p, blocked_mask(p, part));
}

namespace {

struct Engine {
  const Program& p;
  Semantics sem;
  EngineStats* stats;
  std::map<std::vector<bool>, ModelSet> memo;

  const ModelSet& models_for(const std::vector<bool>& kept) {
    auto it = memo.find(kept);
    if (it != memo.end()) return it->second;
    if (stats) ++stats->base_calls;
    ModelSet s = base_models(strip_premises(p, kept), sem);
    return memo.emplace(std::move(kept), std::move(s)).first->second;
  }

  /// Streamed variant with early rejection: abort as soon as a model
  /// violates some phi. Returns nullptr when rejected that way; the
  /// partial set is then not memoizable.
  const ModelSet* models_for_streamed(std::vector<bool> kept,
                                      const std::vector<Formula::Ptr>& phi) {
    auto it = memo.find(kept);
    if (it != memo.end()) return &it->second;
    if (stats) ++stats->base_calls;
    Program pb = strip_premises(p, kept);
    ModelSet s;
    s.tag = sem;
    bool completed = for_each_model(pb, sem, [&](const Interpretation& m) {
      for (const auto& f : phi)
        if (!eval2(f, m)) return false;
      s.models.push_back(m);
      return true;
    });
    if (!completed) return nullptr;
    std::sort(s.models.begin(), s.models.end());
    s.models.erase(std::unique(s.models.begin(), s.models.end()), s.models.end());
    return &memo.emplace(std::move(kept), std::move(s)).first->second;
  }

  std::optional<WorldView> verify(const Partition& part, const ModelSet& s) {
    if (s.models.empty()) return std::nullopt;
    for (const auto& f : part.phi)
      for (const auto& m : s.models)
        if (!eval2(f, m)) return std::nullopt;
    for (const auto& f : part.psi) {
      bool fails_somewhere = false;
      for (const auto& m : s.models)
        if (!eval2(f, m)) { fails_somewhere = true; break; }
      if (!fails_somewhere) return std::nullopt;
    }
    // direct fixpoint check against the rulewise reduct; this is the
    // authoritative condition
    auto a = PossibleWorldStructure::of(s.models);
    const ModelSet& s2 = models_for(reduct_mask(p, a));
    if (s2.models != s.models) {
      if (stats) ++stats->fixpoint_rejections;
      return std::nullopt;
    }
    WorldView v;
    v.structure = a;
    v.semantics = sem;
    v.origin = part;
    v.verified = true;
    return v;
  }
};

}  // namespace

std::optional<WorldView> check_partition(const Program& p, const Partition& part,
                                         Semantics sem, EngineStats* stats) {
  Engine eng{p, sem, stats, {}};
  if (stats) ++stats->partitions_checked;
  const ModelSet& s = eng.models_for(blocked_mask(p, part));
  return eng.verify(part, s);
}

std::vector<WorldView> enumerate_world_views(const Program& p, Semantics sem,
                                             const EngineOptions& opts, EngineStats* stats) {
  if (p.dialect != Dialect::two_valued)
    throw std::invalid_argument("world-view enumeration operates on the two-valued dialect");
  std::vector<Formula::Ptr> atoms = p.modal_atoms();
  if (static_cast<int>(atoms.size()) > opts.max_modal)
    throw ResourceLimitError("modal atom count exceeds the partition cap");

  Engine eng{p, sem, stats, {}};
  std::vector<WorldView> views;
  std::set<PossibleWorldStructure> seen;

  std::size_t count = std::size_t(1) << atoms.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Partition part;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      ((mask >> i) & 1 ? part.phi : part.psi).push_back(atoms[i]);
    if (stats) ++stats->partitions_checked;
    const ModelSet* s = eng.models_for_streamed(blocked_mask(p, part), part.phi);
    if (!s) continue;  // some phi already refuted
    auto v = eng.verify(part, *s);
    if (v && seen.insert(v->structure).second) views.push_back(std::move(*v));
  }
  std::sort(views.begin(), views.end(),
            [](const WorldView& a, const WorldView& b) { return a.structure < b.structure; });
  return views;
}

bool holds_in_view(const WorldView& v, const Formula::Ptr& query, QueryMode mode) {
  const auto& s = v.structure;
  bool all = true, some = false;
  if (s.dialect == Dialect::two_valued) {
    for (const auto& w : s.two) {
      bool val = eval2(query, w);
      all = all && val;
      some = some || val;
    }
  } else {
    for (const auto& w : s.three) {
      bool val = eval3(query, w) == Truth::t;
      all = all && val;
      some = some || val;
    }
  }
  return mode == QueryMode::cautious ? all : some;
}

bool holds_in_view(const WorldView& v, const ModalLiteral& query, QueryMode mode) {
  (void)mode;  // modal queries are structure-level
  return sat_modal(v.structure, query);
}

}  // namespace elp
