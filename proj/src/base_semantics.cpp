#include "elp/base_semantics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "elp/errors.hpp"

namespace elp {

std::string to_string(Semantics sem) {
  switch (sem) {
    case Semantics::classical: return "classical";
    case Semantics::stable: return "stable";
    case Semantics::supported: return "supported";
  }
  return "";
}

namespace {

// ---------------------------------------------------------------------------
// Minimal hitting sets
// ---------------------------------------------------------------------------

bool hits(const std::set<ObjLiteral>& s, const std::vector<ObjLiteral>& disj) {
  for (const auto& l : disj)
    if (s.count(l)) return true;
  return false;
}

void hitting_search(const std::vector<std::vector<ObjLiteral>>& h,
                    std::set<ObjLiteral>& current,
                    std::vector<std::set<ObjLiteral>>& out) {
  const std::vector<ObjLiteral>* open = nullptr;
  for (const auto& d : h) {
    if (!hits(current, d)) {
      open = &d;
      break;
    }
  }
  if (!open) {
    out.push_back(current);
    return;
  }
  for (const auto& l : *open) {
    if (current.count(l.complement())) continue;  // keep the set consistent
    current.insert(l);
    hitting_search(h, current, out);
    current.erase(l);
  }
}

}  // namespace

std::vector<std::set<ObjLiteral>> min_closed_sets(const DisjunctionSet& h) {
  for (const auto& d : h.disjunctions)
    if (d.empty()) return {};  // an empty disjunction cannot be hit
  std::vector<std::set<ObjLiteral>> found;
  std::set<ObjLiteral> current;
  hitting_search(h.disjunctions, current, found);
  // keep the inclusion-minimal antichain
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  std::vector<std::set<ObjLiteral>> out;
  for (const auto& s : found) {
    bool dominated = false;
    for (const auto& kept : out) {
      if (std::includes(s.begin(), s.end(), kept.begin(), kept.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Ground two-valued solver
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxVocab = 256;

// Clause literals: +(v+1) for "v true", -(v+1) for "v false".
using Clause = std::vector<int>;

struct CompiledRule {
  std::vector<int> head, pos, neg;
  bool inert = false;      // body contains #false
  bool has_guard = false;
  int guard_bound = 0;
  std::vector<int> guard_atoms;
};

struct Compiled {
  int n = 0;
  std::vector<Atom> atoms;          // index -> atom, vocabulary order
  std::map<Atom, int> index;
  std::vector<CompiledRule> rules;  // all rules, structured view
  std::vector<Clause> clauses;      // non-guard, non-inert rules as clauses
  struct Guard {
    int bound;
    std::vector<int> atoms;
    std::vector<int> pos, neg;      // extra object body of the guard rule
  };
  std::vector<Guard> guards;
  bool trivially_unsat = false;
};

Compiled compile(const Program& p) {
  if (p.dialect != Dialect::two_valued)
    throw std::invalid_argument("two-valued solver requires the two-valued dialect");
  if (p.vocabulary.size() > kMaxVocab)
    throw ResourceLimitError("vocabulary exceeds solver capacity");
  Compiled c;
  c.n = static_cast<int>(p.vocabulary.size());
  c.atoms = p.vocabulary;
  for (int i = 0; i < c.n; ++i) c.index[c.atoms[i]] = i;

  for (const auto& r : p.rules) {
    if (!r.premise.empty())
      throw std::invalid_argument("base solver requires a modal-free program");
    CompiledRule cr;
    for (const auto& l : r.head) cr.head.push_back(c.index.at(l.atom));
    for (const auto& e : r.body) {
      if (e.kind == BodyElem::Kind::constant) {
        if (!e.const_value) cr.inert = true;
        continue;
      }
      if (e.lit.strong_neg)
        throw std::invalid_argument("strong negation is not part of the two-valued dialect");
      (e.default_neg ? cr.neg : cr.pos).push_back(c.index.at(e.lit.atom));
    }
    if (r.guard) {
      cr.has_guard = true;
      cr.guard_bound = r.guard->bound;
      for (const auto& a : r.guard->atoms) cr.guard_atoms.push_back(c.index.at(a));
    }
    c.rules.push_back(cr);
    if (cr.inert) continue;
    if (cr.has_guard) {
      Compiled::Guard g;
      g.bound = cr.guard_bound;
      g.atoms = cr.guard_atoms;
      g.pos = cr.pos;
      g.neg = cr.neg;
      if (g.bound <= 0 && g.pos.empty() && g.neg.empty()) c.trivially_unsat = true;
      c.guards.push_back(std::move(g));
      continue;
    }
    Clause cl;
    for (int v : cr.pos) cl.push_back(-(v + 1));
    for (int v : cr.neg) cl.push_back(v + 1);
    for (int v : cr.head) cl.push_back(v + 1);
    if (cl.empty()) {
      c.trivially_unsat = true;  // unconditional constraint
      continue;
    }
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    c.clauses.push_back(std::move(cl));
  }
  return c;
}

/// Chronological backtracking with unit propagation over a clause set.
/// Guards (cardinality constraints) are verified at leaves and pruned
/// when decidable early.
class Enumerator {
 public:
  Enumerator(int n, const std::vector<Clause>& clauses,
             const std::vector<Compiled::Guard>* guards = nullptr)
      : n_(n), clauses_(clauses), guards_(guards), val_(n, -1), occ_(n) {
    // duplicate literals would double-count in the free/sat bookkeeping
    for (auto& c : clauses_) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    sat_count_.assign(clauses_.size(), 0);
    free_count_.assign(clauses_.size(), 0);
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      free_count_[ci] = static_cast<int>(clauses_[ci].size());
      for (int lit : clauses_[ci]) occ_[std::abs(lit) - 1].push_back(static_cast<int>(ci));
    }
  }

  /// Enumerates all total assignments satisfying clauses and guards.
  /// Returns true iff not aborted by the callback.
  bool enumerate(const std::function<bool(const std::vector<std::int8_t>&)>& cb) {
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci)
      if (clauses_[ci].empty()) return true;  // unsatisfiable
    return search(cb);
  }

  bool satisfiable() {
    bool found = false;
    enumerate([&](const std::vector<std::int8_t>&) {
      found = true;
      return false;
    });
    return found;
  }

 private:
  bool lit_true(int lit) const {
    int v = std::abs(lit) - 1;
    return val_[v] == (lit > 0 ? 1 : 0);
  }
  bool lit_false(int lit) const {
    int v = std::abs(lit) - 1;
    return val_[v] == (lit > 0 ? 0 : 1);
  }

  // Returns false on conflict. Appends assignments to trail_.
  bool assign_propagate(int v, int b) {
    std::vector<std::pair<int, int>> queue{{v, b}};
    while (!queue.empty()) {
      auto [var, value] = queue.back();
      queue.pop_back();
      if (val_[var] != -1) {
        if (val_[var] != value) return false;
        continue;
      }
      val_[var] = static_cast<std::int8_t>(value);
      trail_.push_back(var);
      // update counters for the whole occurrence list before reporting a
      // conflict, so undo_to stays symmetric with this update
      bool conflict = false;
      for (int ci : occ_[var]) {
        for (int lit : clauses_[ci]) {
          if (std::abs(lit) - 1 != var) continue;
          --free_count_[ci];
          if ((lit > 0) == (value == 1)) ++sat_count_[ci];
        }
        if (sat_count_[ci] == 0) {
          if (free_count_[ci] == 0) {
            conflict = true;
          } else if (free_count_[ci] == 1 && !conflict) {
            for (int lit : clauses_[ci]) {
              int w = std::abs(lit) - 1;
              if (val_[w] == -1) {
                queue.emplace_back(w, lit > 0 ? 1 : 0);
                break;
              }
            }
          }
        }
      }
      if (conflict) return false;
    }
    return guards_ok_partial();
  }

  bool guards_ok_partial() const {
    if (!guards_) return true;
    for (const auto& g : *guards_) {
      bool body_true = true;
      for (int v : g.pos)
        if (val_[v] != 1) { body_true = false; break; }
      if (body_true)
        for (int v : g.neg)
          if (val_[v] != 0) { body_true = false; break; }
      if (!body_true) continue;
      int count = 0;
      for (int v : g.atoms)
        if (val_[v] == 1) ++count;
      if (count >= g.bound) return false;
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int var = trail_.back();
      trail_.pop_back();
      int value = val_[var];
      val_[var] = -1;
      for (int ci : occ_[var]) {
        for (int lit : clauses_[ci]) {
          if (std::abs(lit) - 1 != var) continue;
          ++free_count_[ci];
          if ((lit > 0) == (value == 1)) --sat_count_[ci];
        }
      }
    }
  }

  bool search(const std::function<bool(const std::vector<std::int8_t>&)>& cb) {
    int pick = -1;
    for (int v = 0; v < n_; ++v) {
      if (val_[v] == -1) {
        pick = v;
        break;
      }
    }
    if (pick == -1) return cb(val_);
    for (int b : {0, 1}) {
      std::size_t mark = trail_.size();
      if (assign_propagate(pick, b)) {
        if (!search(cb)) {
          undo_to(mark);
          return false;
        }
      }
      undo_to(mark);
    }
    return true;
  }

  int n_;
  std::vector<Clause> clauses_;
  const std::vector<Compiled::Guard>* guards_;
  std::vector<std::int8_t> val_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> sat_count_, free_count_;
  std::vector<int> trail_;
};

Interpretation to_interpretation(const Compiled& c, const std::vector<std::int8_t>& val) {
  std::set<Atom> atoms;
  for (int v = 0; v < c.n; ++v)
    if (val[v] == 1) atoms.insert(c.atoms[v]);
  return Interpretation(std::move(atoms));
}

/// m is stable iff no strictly smaller model of the GL reduct of the
/// non-guard rules exists (guards filter candidates beforehand).
bool is_stable(const Compiled& c, const std::vector<std::int8_t>& m) {
  std::vector<Clause> clauses;
  std::vector<int> in_m;
  for (int v = 0; v < c.n; ++v)
    if (m[v] == 1) in_m.push_back(v);
  if (in_m.empty()) return true;  // nothing below the empty model

  for (const auto& r : c.rules) {
    if (r.inert || r.has_guard) continue;
    bool blocked = false;
    for (int v : r.neg)
      if (m[v] == 1) { blocked = true; break; }
    if (blocked) continue;
    for (int v : r.pos)
      if (m[v] != 1) { blocked = true; break; }  // cannot fire below m
    if (blocked) continue;
    Clause cl;
    for (int v : r.pos) cl.push_back(-(v + 1));
    for (int v : r.head)
      if (m[v] == 1) cl.push_back(v + 1);
    clauses.push_back(std::move(cl));
  }
  // force atoms outside m to false, require a strict subset
  for (int v = 0; v < c.n; ++v)
    if (m[v] != 1) clauses.push_back({-(v + 1)});
  Clause strict;
  for (int v : in_m) strict.push_back(-(v + 1));
  clauses.push_back(std::move(strict));

  Enumerator e(c.n, clauses);
  return !e.satisfiable();
}

bool is_supported(const Compiled& c, const std::vector<std::int8_t>& m) {
  // fired head disjunctions
  std::vector<const std::vector<int>*> heads;
  for (const auto& r : c.rules) {
    if (r.inert) continue;
    bool fires = true;
    for (int v : r.pos)
      if (m[v] != 1) { fires = false; break; }
    if (fires)
      for (int v : r.neg)
        if (m[v] == 1) { fires = false; break; }
    if (!fires) continue;
    if (r.has_guard) continue;  // guard constraints already filtered the candidate
    if (r.head.empty()) return false;  // fired constraint
    heads.push_back(&r.head);
  }
  // m must hit every fired head, with every member necessary
  for (const auto* h : heads) {
    bool hit = false;
    for (int v : *h)
      if (m[v] == 1) { hit = true; break; }
    if (!hit) return false;
  }
  for (int v = 0; v < c.n; ++v) {
    if (m[v] != 1) continue;
    bool necessary = false;
    for (const auto* h : heads) {
      // v must be the only true member (duplicates in a head are one member)
      bool has_v = false, has_other = false;
      for (int w : *h) {
        if (m[w] != 1) continue;
        if (w == v) has_v = true;
        else has_other = true;
      }
      if (has_v && !has_other) {
        necessary = true;
        break;
      }
    }
    if (!necessary) return false;
  }
  return true;
}

}  // namespace

bool for_each_model(const Program& p, Semantics sem,
                    const std::function<bool(const Interpretation&)>& cb) {
  Compiled c = compile(p);
  if (c.trivially_unsat) return true;
  std::vector<Clause> clauses = c.clauses;
  int nvars = c.n;
  if (sem != Semantics::classical) {
    // Candidate pruning: in a stable or supported model every true atom
    // has a rule with it in the head whose body holds (minimality lemma).
    // Auxiliary fire variables sit after the real ones so chronological
    // search never branches on them.
    std::vector<std::vector<int>> support(c.n);  // atom -> fire literals
    std::vector<bool> free_support(c.n, false);  // head of a body-free rule
    for (const auto& r : c.rules) {
      if (r.inert || r.has_guard || r.head.empty()) continue;
      if (r.pos.empty() && r.neg.empty()) {
        for (int v : r.head) free_support[v] = true;
        continue;
      }
      int fire = nvars++;
      Clause body_to_fire{fire + 1};
      for (int v : r.pos) {
        clauses.push_back({-(fire + 1), v + 1});
        body_to_fire.push_back(-(v + 1));
      }
      for (int v : r.neg) {
        clauses.push_back({-(fire + 1), -(v + 1)});
        body_to_fire.push_back(v + 1);
      }
      clauses.push_back(std::move(body_to_fire));
      for (int v : r.head) support[v].push_back(fire + 1);
    }
    for (int v = 0; v < c.n; ++v) {
      if (free_support[v]) continue;
      Clause need{-(v + 1)};
      need.insert(need.end(), support[v].begin(), support[v].end());
      clauses.push_back(std::move(need));
    }
  }
  Enumerator e(nvars, clauses, &c.guards);
  return e.enumerate([&](const std::vector<std::int8_t>& val) {
    switch (sem) {
      case Semantics::classical:
        break;
      case Semantics::stable:
        if (!is_stable(c, val)) return true;
        break;
      case Semantics::supported:
        if (!is_supported(c, val)) return true;
        break;
    }
    return cb(to_interpretation(c, val));
  });
}

ModelSet base_models(const Program& p, Semantics sem) {
  ModelSet out;
  out.tag = sem;
  for_each_model(p, sem, [&](const Interpretation& m) {
    out.models.push_back(m);
    return true;
  });
  std::sort(out.models.begin(), out.models.end());
  out.models.erase(std::unique(out.models.begin(), out.models.end()), out.models.end());
  return out;
}

ModelSet classical_models(const Program& p) { return base_models(p, Semantics::classical); }
ModelSet stable_models(const Program& p) { return base_models(p, Semantics::stable); }
ModelSet supported_models(const Program& p) { return base_models(p, Semantics::supported); }

Program gl_reduct(const Program& p, const Interpretation& m) {
  Program out;
  out.dialect = p.dialect;
  out.vocabulary = p.vocabulary;
  for (const auto& r : p.rules) {
    if (!r.premise.empty())
      throw std::invalid_argument("gl_reduct requires a modal-free program");
    bool blocked = false;
    for (const auto& e : r.body) {
      if (e.kind == BodyElem::Kind::literal && e.default_neg && m.contains(e.lit.atom)) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;
    Rule kept;
    kept.head = r.head;
    kept.guard = r.guard;
    for (const auto& e : r.body)
      if (!(e.kind == BodyElem::Kind::literal && e.default_neg)) kept.body.push_back(e);
    out.rules.push_back(std::move(kept));
  }
  return out;
}

namespace {

template <typename WorldT, typename SatLit>
DisjunctionSet supp_reduct_impl(const Program& p, const WorldT& w, SatLit sat_lit) {
  DisjunctionSet h;
  for (const auto& r : p.rules) {
    if (!r.premise.empty())
      throw std::invalid_argument("supp_reduct requires a modal-free program");
    if (r.guard) continue;  // cardinality constraints filter candidates elsewhere
    bool fires = true;
    for (const auto& e : r.body) {
      if (e.kind == BodyElem::Kind::constant) {
        if (!e.const_value) fires = false;
      } else if (e.default_neg ? sat_lit(w, e.lit) : !sat_lit(w, e.lit)) {
        fires = false;
      }
      if (!fires) break;
    }
    if (fires) h.disjunctions.push_back(r.head);
  }
  // set semantics: collapse duplicates, within and across disjunctions
  for (auto& d : h.disjunctions) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
  }
  std::sort(h.disjunctions.begin(), h.disjunctions.end());
  h.disjunctions.erase(std::unique(h.disjunctions.begin(), h.disjunctions.end()),
                       h.disjunctions.end());
  return h;
}

}  // namespace

DisjunctionSet supp_reduct(const Program& p, const Interpretation& m) {
  return supp_reduct_impl(p, m, [](const Interpretation& w, const ObjLiteral& l) {
    return !l.strong_neg && w.contains(l.atom);
  });
}

DisjunctionSet supp_reduct(const Program& p, const ThreeValuedWorld& w) {
  return supp_reduct_impl(p, w, [](const ThreeValuedWorld& world, const ObjLiteral& l) {
    return world.contains(l);
  });
}

std::vector<ThreeValuedWorld> all_consistent_worlds(const std::vector<Atom>& vocab,
                                                    std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    total *= 3;
    if (total > cap) throw ResourceLimitError("consistent-world space exceeds cap");
  }
  std::vector<ThreeValuedWorld> out;
  out.reserve(total);
  std::set<ObjLiteral> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vocab.size()) {
      out.emplace_back(current);
      return;
    }
    rec(i + 1);  // unknown
    current.insert(ObjLiteral(vocab[i], false));
    rec(i + 1);
    current.erase(ObjLiteral(vocab[i], false));
    current.insert(ObjLiteral(vocab[i], true));
    rec(i + 1);
    current.erase(ObjLiteral(vocab[i], true));
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ThreeValuedWorld> supported_answer_sets(const Program& p) {
  auto worlds = all_consistent_worlds(p.vocabulary);
  std::vector<ThreeValuedWorld> out;
  for (const auto& w : worlds) {
    DisjunctionSet h = supp_reduct(p, w);
    bool guard_ok = true;
    for (const auto& r : p.rules) {
      if (!r.guard) continue;
      bool fires = true;
      for (const auto& e : r.body) {
        if (e.kind == BodyElem::Kind::constant ? !e.const_value
                                               : (e.default_neg ? w.contains(e.lit)
                                                                : !w.contains(e.lit))) {
          fires = false;
          break;
        }
      }
      if (!fires) continue;
      int count = 0;
      for (const auto& a : r.guard->atoms)
        if (w.contains(ObjLiteral(a, false))) ++count;
      if (count >= r.guard->bound) { guard_ok = false; break; }
    }
    if (!guard_ok) continue;
    bool empty_disj = false;
    for (const auto& d : h.disjunctions)
      if (d.empty()) { empty_disj = true; break; }
    if (empty_disj) continue;
    bool closed = true;
    for (const auto& d : h.disjunctions) {
      bool hit = false;
      for (const auto& l : d)
        if (w.contains(l)) { hit = true; break; }
      if (!hit) { closed = false; break; }
    }
    if (!closed) continue;
    bool minimal = true;
    for (const auto& l : w.literals) {
      bool necessary = false;
      for (const auto& d : h.disjunctions) {
        int inter = 0;
        bool only_l = true;
        for (const auto& x : d) {
          if (w.contains(x)) {
            ++inter;
            if (!(x == l)) only_l = false;
          }
        }
        if (inter == 1 && only_l) { necessary = true; break; }
      }
      if (!necessary) { minimal = false; break; }
    }
    if (minimal) out.push_back(w);
  }
  return out;
}

}  // namespace elp
