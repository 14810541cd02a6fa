#include "elp/bench.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "elp/epistemic.hpp"
#include "elp/errors.hpp"
#include "elp/gelfond.hpp"

namespace elp {

std::size_t QbfInstance::var_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.vars.size();
  return n;
}

namespace {

bool matrix_true(const QbfInstance& q, const std::map<std::string, bool>& v) {
  if (q.matrix_is_cnf) {
    for (const auto& clause : q.matrix) {
      bool sat = false;
      for (const auto& l : clause)
        if (v.at(l.var) != l.neg) { sat = true; break; }
      if (!sat) return false;
    }
    return true;
  }
  for (const auto& disjunct : q.matrix) {
    bool sat = true;
    for (const auto& l : disjunct)
      if (v.at(l.var) == l.neg) { sat = false; break; }
    if (sat && !disjunct.empty()) return true;
  }
  return false;
}

bool qbf_rec(const QbfInstance& q, std::size_t block, std::size_t idx,
             std::map<std::string, bool>& v) {
  if (block == q.blocks.size()) return matrix_true(q, v);
  const auto& b = q.blocks[block];
  if (idx == b.vars.size()) return qbf_rec(q, block + 1, 0, v);
  bool want_any = b.quant == QbfInstance::Quant::exists;
  for (bool val : {false, true}) {
    v[b.vars[idx]] = val;
    bool r = qbf_rec(q, block, idx + 1, v);
    if (r == want_any) return want_any;
  }
  return !want_any;
}

}  // namespace

bool qbf_eval(const QbfInstance& q) {
  if (q.var_count() > 12) throw ResourceLimitError("qbf evaluation is capped at 12 variables");
  std::map<std::string, bool> v;
  return qbf_rec(q, 0, 0, v);
}

namespace {

Atom plain(const std::string& name) { return Atom::intern(name); }
Atom primed_name(const std::string& name) { return Atom::intern(name + "_p"); }

Rule fact_from_modal(Atom head, Atom modal_body) {
  Rule r;
  r.head.push_back(ObjLiteral(head));
  r.premise.emplace_back(Formula::atom(modal_body));
  return r;
}

Rule exclusion(Atom a, Atom b, bool negated) {
  Rule r;
  r.body.push_back(BodyElem::literal(ObjLiteral(a), negated));
  r.body.push_back(BodyElem::literal(ObjLiteral(b), negated));
  return r;
}

void add_generator_pair(Program& p, const std::string& v) {
  Rule r1;  // v <- not v_p
  r1.head.push_back(ObjLiteral(plain(v)));
  r1.body.push_back(BodyElem::literal(ObjLiteral(primed_name(v)), true));
  p.rules.push_back(std::move(r1));
  Rule r2;  // v_p <- not v
  r2.head.push_back(ObjLiteral(primed_name(v)));
  r2.body.push_back(BodyElem::literal(ObjLiteral(plain(v)), true));
  p.rules.push_back(std::move(r2));
}

void check_fresh(const QbfInstance& q, std::initializer_list<const char*> fresh) {
  for (const auto& b : q.blocks)
    for (const auto& v : b.vars)
      for (const char* f : fresh)
        if (v == f || (v.size() > 2 && v.substr(v.size() - 2) == "_p"))
          throw std::invalid_argument("qbf variable collides with a fresh atom: " + v);
}

}  // namespace

Program gen_sigma2_program(const QbfInstance& q) {
  if (q.blocks.size() != 2 || q.blocks[0].quant != QbfInstance::Quant::exists ||
      q.blocks[1].quant != QbfInstance::Quant::forall || q.matrix_is_cnf)
    throw std::invalid_argument("expected an exists-forall prefix with a DNF matrix");
  check_fresh(q, {"w"});
  Program p;
  Atom w = plain("w");
  for (const auto& y : q.blocks[0].vars) {
    p.rules.push_back(fact_from_modal(plain(y), plain(y)));
    p.rules.push_back(fact_from_modal(primed_name(y), primed_name(y)));
  }
  for (const auto& y : q.blocks[0].vars) {
    p.rules.push_back(exclusion(plain(y), primed_name(y), false));
    p.rules.push_back(exclusion(plain(y), primed_name(y), true));
  }
  for (const auto& z : q.blocks[1].vars) add_generator_pair(p, z);
  for (const auto& disjunct : q.matrix) {
    Rule r;
    r.head.push_back(ObjLiteral(w));
    for (const auto& l : disjunct)
      r.body.push_back(
          BodyElem::literal(ObjLiteral(l.neg ? primed_name(l.var) : plain(l.var))));
    p.rules.push_back(std::move(r));
  }
  Rule cw;  // :- not K w
  cw.premise.emplace_back(Formula::atom(w), true);
  p.rules.push_back(std::move(cw));
  p.refresh_vocabulary();
  return p;
}

Program gen_sigma3_program(const QbfInstance& q) {
  if (q.blocks.size() != 3 || q.blocks[0].quant != QbfInstance::Quant::exists ||
      q.blocks[1].quant != QbfInstance::Quant::forall ||
      q.blocks[2].quant != QbfInstance::Quant::exists || !q.matrix_is_cnf)
    throw std::invalid_argument("expected an exists-forall-exists prefix with a CNF matrix");
  for (const auto& clause : q.matrix)
    if (clause.size() != 3) throw std::invalid_argument("matrix must be 3-CNF");
  check_fresh(q, {"w", "f", "g"});
  Program p;
  Atom w = plain("w"), f = plain("f"), g = plain("g");
  for (const auto& x : q.blocks[0].vars) {
    p.rules.push_back(fact_from_modal(plain(x), plain(x)));
    p.rules.push_back(fact_from_modal(primed_name(x), primed_name(x)));
  }
  for (const auto& x : q.blocks[0].vars) {
    p.rules.push_back(exclusion(plain(x), primed_name(x), false));
    p.rules.push_back(exclusion(plain(x), primed_name(x), true));
  }
  {
    Rule r1;  // f <- not g
    r1.head.push_back(ObjLiteral(f));
    r1.body.push_back(BodyElem::literal(ObjLiteral(g), true));
    p.rules.push_back(std::move(r1));
    Rule r2;  // g <- not f
    r2.head.push_back(ObjLiteral(g));
    r2.body.push_back(BodyElem::literal(ObjLiteral(f), true));
    p.rules.push_back(std::move(r2));
  }
  auto disj_under_f = [&](const std::string& v) {
    Rule r;  // v | v_p <- f
    r.head.push_back(ObjLiteral(plain(v)));
    r.head.push_back(ObjLiteral(primed_name(v)));
    r.body.push_back(BodyElem::literal(ObjLiteral(f)));
    p.rules.push_back(std::move(r));
  };
  for (const auto& y : q.blocks[1].vars) disj_under_f(y);
  for (const auto& z : q.blocks[2].vars) disj_under_f(z);
  for (const auto& z : q.blocks[2].vars) {
    for (Atom head : {plain(z), primed_name(z)}) {
      Rule r;  // head <- f, w
      r.head.push_back(ObjLiteral(head));
      r.body.push_back(BodyElem::literal(ObjLiteral(f)));
      r.body.push_back(BodyElem::literal(ObjLiteral(w)));
      p.rules.push_back(std::move(r));
    }
  }
  for (const auto& clause : q.matrix) {
    Rule r;  // w <- f, sigma(u1), sigma(u2), sigma(u3); sigma flips polarity
    r.head.push_back(ObjLiteral(w));
    r.body.push_back(BodyElem::literal(ObjLiteral(f)));
    for (const auto& l : clause)
      r.body.push_back(
          BodyElem::literal(ObjLiteral(l.neg ? plain(l.var) : primed_name(l.var))));
    p.rules.push_back(std::move(r));
  }
  {
    Rule r;  // w <- f, not w
    r.head.push_back(ObjLiteral(w));
    r.body.push_back(BodyElem::literal(ObjLiteral(f)));
    r.body.push_back(BodyElem::literal(ObjLiteral(w), true));
    p.rules.push_back(std::move(r));
  }
  {
    Rule r;  // :- not K (~w)
    r.premise.emplace_back(Formula::neg(Formula::atom(w)), true);
    p.rules.push_back(std::move(r));
  }
  p.refresh_vocabulary();
  return p;
}

Program gen_unique_model_program(const Program& f, UniqueVariant variant) {
  for (const auto& r : f.rules) {
    bool plain_constraint = r.is_constraint() && r.premise.empty() && !r.guard;
    for (const auto& e : r.body)
      if (e.kind != BodyElem::Kind::literal || e.lit.strong_neg) plain_constraint = false;
    if (!plain_constraint)
      throw std::invalid_argument("input must consist of constraints over [not] atoms");
  }
  Program p;
  p.vocabulary = f.vocabulary;
  p.rules = f.rules;
  for (const auto& r : f.rules) {
    Rule k;  // the modal copy: x becomes K x, not x becomes not K x
    for (const auto& e : r.body)
      k.premise.emplace_back(Formula::atom(e.lit.atom), e.default_neg);
    p.rules.push_back(std::move(k));
  }
  if (variant == UniqueVariant::stable)
    for (Atom x : f.vocabulary) add_generator_pair(p, x.name());
  p.refresh_vocabulary();
  return p;
}

std::optional<Interpretation> least_model_oracle(const Program& f) {
  if (f.vocabulary.size() > 12)
    throw ResourceLimitError("least-model oracle is capped at 12 atoms");
  ModelSet ms = classical_models(f);
  if (ms.models.empty()) return std::nullopt;
  std::set<Atom> inter = ms.models.front().true_atoms;
  for (const auto& m : ms.models) {
    std::set<Atom> next;
    std::set_intersection(inter.begin(), inter.end(), m.true_atoms.begin(),
                          m.true_atoms.end(), std::inserter(next, next.begin()));
    inter = std::move(next);
  }
  Interpretation candidate(std::move(inter));
  for (const auto& m : ms.models)
    if (m == candidate) return candidate;
  return std::nullopt;
}

namespace {

void emit_hc_encoding(std::ostringstream& os, const Digraph& g, const std::string& edge_pred) {
  os << "hc(X,Y) :- " << edge_pred << "(X,Y), not nhc(X,Y).\n";
  os << "nhc(X,Y) :- " << edge_pred << "(X,Y), not hc(X,Y).\n";
  os << ":- hc(X,Y), nhc(X,Y).\n";
  // pairwise degree-1 constraints, ground (the surface language has no
  // inequality built-in)
  for (const auto& v : g.vertices)
    for (const auto& u1 : g.vertices)
      for (const auto& u2 : g.vertices) {
        if (u1 >= u2 || u1 == v || u2 == v) continue;
        os << ":- hc(" << v << "," << u1 << "), hc(" << v << "," << u2 << ").\n";
        os << ":- hc(" << u1 << "," << v << "), hc(" << u2 << "," << v << ").\n";
      }
  const std::string& start = g.vertices.front();
  os << "reach(Y) :- hc(" << start << ",Y).\n";
  os << "reach(Y) :- reach(X), hc(X,Y).\n";
  os << ":- vtx(X), not reach(X).\n";
}

void emit_facts(std::ostringstream& os, const Digraph& g) {
  for (const auto& v : g.vertices) os << "vtx(" << v << ").\n";
  for (const auto& [a, b] : g.edges) os << "edge(" << a << "," << b << ").\n";
}

}  // namespace

SourceProgram gen_hc_critical(const Digraph& g) {
  if (g.vertices.size() > 6)
    throw ResourceLimitError("hamiltonian-cycle generation is capped at 6 vertices");
  std::ostringstream os;
  emit_facts(os, g);
  emit_hc_encoding(os, g, "edge");
  os << "critical(X,Y) :- edge(X,Y), K hc(X,Y).\n";
  return parse_program(os.str(), Dialect::two_valued);
}

SourceProgram gen_extension(const Digraph& g, int p, int k) {
  if (g.vertices.size() > 6)
    throw ResourceLimitError("hamiltonian-cycle generation is capped at 6 vertices");
  std::ostringstream os;
  emit_facts(os, g);
  os << "newEdge(X,Y) :- vtx(X), vtx(Y), not noNewEdge(X,Y).\n";
  os << "noNewEdge(X,Y) :- vtx(X), vtx(Y), not newEdge(X,Y).\n";
  os << ":- newEdge(X,Y), noNewEdge(X,Y).\n";
  os << ":- newEdge(X,X).\n";
  os << ":- newEdge(X,Y), edge(X,Y).\n";
  os << ":- " << p + 1 << " { newEdge(X,Y) : vtx(X), vtx(Y) }.\n";
  os << "edgeEG(X,Y) :- edge(X,Y).\n";
  os << "edgeEG(X,Y) :- newEdge(X,Y).\n";
  emit_hc_encoding(os, g, "edgeEG");
  os << "critical(X,Y) :- edgeEG(X,Y), K hc(X,Y).\n";
  os << ":- " << k + 1 << " { critical(X,Y) : edgeEG(X,Y) }.\n";
  return parse_program(os.str(), Dialect::two_valued);
}

HamiltonianAnswer hamiltonian_oracle(const Digraph& g) {
  if (g.vertices.size() > 7)
    throw ResourceLimitError("hamiltonian oracle is capped at 7 vertices");
  HamiltonianAnswer out;
  if (g.vertices.empty()) return out;
  std::vector<std::string> rest(g.vertices.begin() + 1, g.vertices.end());
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<std::string> tour;
    tour.push_back(g.vertices.front());
    tour.insert(tour.end(), rest.begin(), rest.end());
    std::set<std::pair<std::string, std::string>> cyc;
    bool ok = true;
    for (std::size_t i = 0; i < tour.size(); ++i) {
      auto e = std::make_pair(tour[i], tour[(i + 1) % tour.size()]);
      if (!g.edges.count(e)) { ok = false; break; }
      cyc.insert(std::move(e));
    }
    if (ok && tour.size() >= 2) out.cycles.push_back(std::move(cyc));
  } while (std::next_permutation(rest.begin(), rest.end()));
  if (out.cycles.empty()) {
    out.critical = g.edges;
  } else {
    out.critical = out.cycles.front();
    for (const auto& c : out.cycles) {
      std::set<std::pair<std::string, std::string>> next;
      std::set_intersection(out.critical.begin(), out.critical.end(), c.begin(), c.end(),
                            std::inserter(next, next.begin()));
      out.critical = std::move(next);
    }
  }
  return out;
}

std::vector<PossibleWorldStructure> brute_world_view_oracle(const Program& p, Semantics sem) {
  if (p.dialect == Dialect::gelfond) return gelfond_world_views(p, GelfondMethod::direct);
  if (p.vocabulary.size() > 3)
    throw ResourceLimitError("brute world-view oracle is capped at 3 atoms");
  std::vector<Interpretation> worlds;
  std::size_t n = p.vocabulary.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::set<Atom> atoms;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) atoms.insert(p.vocabulary[i]);
    worlds.emplace_back(std::move(atoms));
  }
  std::vector<PossibleWorldStructure> views;
  std::size_t families = std::size_t(1) << worlds.size();
  for (std::size_t mask = 1; mask < families; ++mask) {
    std::vector<Interpretation> fam;
    for (std::size_t i = 0; i < worlds.size(); ++i)
      if ((mask >> i) & 1) fam.push_back(worlds[i]);
    auto a = PossibleWorldStructure::of(fam);
    ModelSet s = base_models(epistemic_reduct(p, a, ReductMode::rulewise), sem);
    if (s.models == a.two) views.push_back(std::move(a));
  }
  std::sort(views.begin(), views.end());
  return views;
}

// --- random generators ------------------------------------------------------

namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng) { return pick(rng, 0, 1) == 1; }

std::vector<Atom> letter_atoms(int n) {
  static const char* names[] = {"a", "b", "c", "d", "e"};
  std::vector<Atom> out;
  for (int i = 0; i < n; ++i) out.push_back(Atom::intern(names[i]));
  return out;
}

Formula::Ptr random_formula(Rng& rng, const std::vector<Atom>& atoms, int depth,
                            bool kleene_neg) {
  if (depth == 0 || pick(rng, 0, 2) == 0)
    return Formula::atom(atoms[pick(rng, 0, int(atoms.size()) - 1)]);
  switch (pick(rng, 0, 3)) {
    case 0: return Formula::neg(random_formula(rng, atoms, depth - 1, kleene_neg));
    case 1:
      return Formula::conj(random_formula(rng, atoms, depth - 1, kleene_neg),
                           random_formula(rng, atoms, depth - 1, kleene_neg));
    case 2:
      return Formula::disj(random_formula(rng, atoms, depth - 1, kleene_neg),
                           random_formula(rng, atoms, depth - 1, kleene_neg));
    default:
      return Formula::implies(random_formula(rng, atoms, depth - 1, kleene_neg),
                              random_formula(rng, atoms, depth - 1, kleene_neg));
  }
}

Program random_program_impl(Rng& rng, Dialect dialect, int max_atoms, int max_rules,
                            int max_modal) {
  std::vector<Atom> atoms = letter_atoms(std::max(1, pick(rng, 1, max_atoms)));
  bool gelfond = dialect == Dialect::gelfond;

  std::vector<Formula::Ptr> modal_pool;
  int pool_size = pick(rng, 0, max_modal);
  for (int i = 0; i < pool_size; ++i) modal_pool.push_back(random_formula(rng, atoms, 2, gelfond));

  Program p;
  p.dialect = dialect;
  int n_rules = pick(rng, 1, max_rules);
  for (int i = 0; i < n_rules; ++i) {
    Rule r;
    int n_head = pick(rng, 0, 2);
    for (int h = 0; h < n_head; ++h)
      r.head.push_back(
          ObjLiteral(atoms[pick(rng, 0, int(atoms.size()) - 1)], gelfond && coin(rng)));
    int n_body = pick(rng, 0, 2);
    for (int b = 0; b < n_body; ++b)
      r.body.push_back(BodyElem::literal(
          ObjLiteral(atoms[pick(rng, 0, int(atoms.size()) - 1)], gelfond && coin(rng)),
          coin(rng)));
    if (!modal_pool.empty()) {
      int n_prem = pick(rng, 0, 2);
      for (int m = 0; m < n_prem; ++m)
        r.premise.emplace_back(modal_pool[pick(rng, 0, int(modal_pool.size()) - 1)], coin(rng),
                               gelfond && coin(rng));
    }
    if (r.head.empty() && r.body.empty() && r.premise.empty()) continue;
    p.rules.push_back(std::move(r));
  }
  for (Atom a : atoms) p.vocabulary.push_back(a);
  p.refresh_vocabulary();
  return p;
}

std::vector<QbfLit> random_clause(Rng& rng, const std::vector<std::string>& vars, int size) {
  std::vector<QbfLit> c;
  for (int i = 0; i < size; ++i)
    c.push_back({vars[pick(rng, 0, int(vars.size()) - 1)], coin(rng)});
  return c;
}

}  // namespace

Program random_epistemic_program(Rng& rng, int max_atoms, int max_rules, int max_modal) {
  return random_program_impl(rng, Dialect::two_valued, max_atoms, max_rules, max_modal);
}

Program random_gelfond_program(Rng& rng, int max_atoms, int max_rules, int max_modal) {
  return random_program_impl(rng, Dialect::gelfond, max_atoms, max_rules, max_modal);
}

QbfInstance random_qbf2(Rng& rng, int y_vars, int z_vars) {
  QbfInstance q;
  QbfInstance::Block ys{QbfInstance::Quant::exists, {}}, zs{QbfInstance::Quant::forall, {}};
  std::vector<std::string> all;
  for (int i = 1; i <= y_vars; ++i) ys.vars.push_back("y" + std::to_string(i));
  for (int i = 1; i <= z_vars; ++i) zs.vars.push_back("z" + std::to_string(i));
  all.insert(all.end(), ys.vars.begin(), ys.vars.end());
  all.insert(all.end(), zs.vars.begin(), zs.vars.end());
  q.blocks = {std::move(ys), std::move(zs)};
  int n = pick(rng, 1, 4);
  for (int i = 0; i < n; ++i) q.matrix.push_back(random_clause(rng, all, pick(rng, 1, 3)));
  return q;
}

QbfInstance random_qbf3(Rng& rng, int x_vars, int y_vars, int z_vars) {
  QbfInstance q;
  q.matrix_is_cnf = true;
  QbfInstance::Block xs{QbfInstance::Quant::exists, {}}, ys{QbfInstance::Quant::forall, {}},
      zs{QbfInstance::Quant::exists, {}};
  std::vector<std::string> all;
  for (int i = 1; i <= x_vars; ++i) xs.vars.push_back("x" + std::to_string(i));
  for (int i = 1; i <= y_vars; ++i) ys.vars.push_back("y" + std::to_string(i));
  for (int i = 1; i <= z_vars; ++i) zs.vars.push_back("z" + std::to_string(i));
  all.insert(all.end(), xs.vars.begin(), xs.vars.end());
  all.insert(all.end(), ys.vars.begin(), ys.vars.end());
  all.insert(all.end(), zs.vars.begin(), zs.vars.end());
  q.blocks = {std::move(xs), std::move(ys), std::move(zs)};
  int n = pick(rng, 1, 4);
  for (int i = 0; i < n; ++i) q.matrix.push_back(random_clause(rng, all, 3));
  return q;
}

Digraph random_digraph(Rng& rng, int vertices) {
  Digraph g;
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g"};
  for (int i = 0; i < vertices; ++i) g.vertices.push_back(names[i]);
  for (int i = 0; i < vertices; ++i)
    for (int j = 0; j < vertices; ++j)
      if (i != j && coin(rng)) g.edges.emplace(g.vertices[i], g.vertices[j]);
  return g;
}

Program random_constraint_theory(Rng& rng, int max_atoms, int max_constraints) {
  std::vector<Atom> atoms = letter_atoms(std::max(1, pick(rng, 1, max_atoms)));
  Program p;
  int n = pick(rng, 1, max_constraints);
  for (int i = 0; i < n; ++i) {
    Rule r;
    int len = pick(rng, 1, 3);
    for (int j = 0; j < len; ++j)
      r.body.push_back(
          BodyElem::literal(ObjLiteral(atoms[pick(rng, 0, int(atoms.size()) - 1)]), coin(rng)));
    p.rules.push_back(std::move(r));
  }
  for (Atom a : atoms) p.vocabulary.push_back(a);
  p.refresh_vocabulary();
  return p;
}

}  // namespace elp
