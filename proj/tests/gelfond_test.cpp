#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "elp/bench.hpp"
#include "elp/gelfond.hpp"
#include "elp/ground.hpp"

using namespace elp;

namespace {

Atom at(const char* n) { return Atom::intern(n); }

ThreeValuedWorld world3(std::initializer_list<const char*> pos,
                        std::initializer_list<const char*> neg) {
  std::set<ObjLiteral> lits;
  for (const char* a : pos) lits.insert(ObjLiteral(at(a)));
  for (const char* a : neg) lits.insert(ObjLiteral(at(a), true));
  return ThreeValuedWorld(std::move(lits));
}

Formula::Ptr F(const std::string& s) {
  Program p = parse_and_ground("#dialect gelfond.\n:- K (" + s + ").");
  return p.rules.at(0).premise.at(0).body;
}

std::string str(const Formula::Ptr& f, Dialect d = Dialect::two_valued) {
  return f->to_string(d);
}

/// Every formula of depth <= `depth` over the given atoms (grown bottom-up).
std::vector<Formula::Ptr> formulas_up_to(int depth, const std::vector<Atom>& atoms) {
  std::vector<Formula::Ptr> layer;
  layer.push_back(Formula::falsum());
  for (Atom a : atoms) layer.push_back(Formula::atom(a));
  std::vector<Formula::Ptr> all = layer;
  for (int d = 0; d < depth; ++d) {
    std::vector<Formula::Ptr> next;
    for (const auto& f : layer) next.push_back(Formula::neg(f));
    // pair each last-layer formula with an atom to keep the count tame
    for (const auto& f : layer)
      for (Atom a : atoms) {
        next.push_back(Formula::conj(f, Formula::atom(a)));
        next.push_back(Formula::disj(Formula::atom(a), f));
        next.push_back(Formula::implies(f, Formula::atom(a)));
      }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

const char* kMikeGelfond = R"(#dialect gelfond.
eligible(mike) :- highGPA(mike).
eligible(mike) :- underrep(mike), fairGPA(mike).
-eligible(mike) :- lowGPA(mike).
interview(mike) :- not K eligible(mike), not K (-eligible(mike)).
fairGPA(mike) | highGPA(mike).
)";

}  // namespace

TEST_CASE("primed vocabulary is grammatical and collision-free") {
  auto pv = PrimedVocabulary::make({at("a"), at("a_p"), at("p(x,y)")});
  CHECK(pv.primed(at("p(x,y)")).name() == "p_p(x,y)");
  CHECK(pv.primed(at("a")).name() != "a_p");  // a_p is taken by the vocabulary itself
  CHECK(pv.base_of(pv.primed(at("a"))) == at("a"));
  CHECK_FALSE(pv.base_of(at("a")).has_value());
  CHECK_THROWS_AS(pv.primed(at("zzz")), std::invalid_argument);
}

TEST_CASE("signed translation of the basic shapes") {
  auto pv = PrimedVocabulary::make({at("a"), at("b")});
  auto a = Formula::atom(at("a"));
  auto b = Formula::atom(at("b"));

  auto pa = plus_minus(a, pv);
  CHECK(str(pa.plus) == "a");
  CHECK(str(pa.minus) == "~a_p");

  auto pna = plus_minus(Formula::neg(a), pv);
  CHECK(str(pna.plus) == "~~a_p");
  CHECK(str(pna.minus) == "~a");

  auto pimp = plus_minus(Formula::implies(a, b), pv);
  CHECK(str(pimp.plus) == "(~a_p -> b)");
  CHECK(str(pimp.minus) == "(a -> ~b_p)");

  auto pconj = plus_minus(Formula::conj(a, b), pv);
  CHECK(str(pconj.plus) == "(a & b)");
  CHECK(str(pconj.minus) == "(~a_p & ~b_p)");

  auto pfalsum = plus_minus(Formula::falsum(), pv);
  CHECK(str(pfalsum.plus) == "#false");
  CHECK(str(pfalsum.minus) == "#false");
}

TEST_CASE("signed translation tracks three-valued truth and falsity") {
  std::vector<Atom> atoms{at("a"), at("b")};
  auto pv = PrimedVocabulary::make(atoms);
  auto formulas = formulas_up_to(3, atoms);
  REQUIRE(formulas.size() > 100);

  std::vector<ThreeValuedWorld> worlds;
  for (int va = 0; va < 3; ++va)
    for (int vb = 0; vb < 3; ++vb) {
      std::set<ObjLiteral> lits;
      if (va != 1) lits.insert(ObjLiteral(at("a"), va == 0));
      if (vb != 1) lits.insert(ObjLiteral(at("b"), vb == 0));
      worlds.push_back(ThreeValuedWorld(std::move(lits)));
    }

  for (const auto& f : formulas) {
    auto pm = plus_minus(f, pv);
    for (const auto& w : worlds) {
      Interpretation enc = prime_encode(w, pv);
      Truth v = eval3(f, w);
      // plus tracks truth; minus tracks non-falsity
      CHECK(eval2(pm.plus, enc) == (v == Truth::t));
      CHECK(eval2(pm.minus, enc) == (v != Truth::f));
      // and the decode round trip is exact
      CHECK(prime_decode(enc, pv) == w);
    }
  }
}

TEST_CASE("prime decoding rejects inconsistency") {
  auto pv = PrimedVocabulary::make({at("a")});
  Interpretation bad(std::set<Atom>{at("a"), pv.primed(at("a"))});
  CHECK_THROWS_AS(prime_decode(bad, pv), std::invalid_argument);
}

TEST_CASE("strong-negation elimination of the interview program") {
  Program p = parse_and_ground(kMikeGelfond);
  PrimedVocabulary pv;
  Program q = sigma_translate(p, &pv);
  CHECK(q.dialect == Dialect::two_valued);
  // -eligible :- lowGPA maps its head to the primed atom
  bool saw_primed_head = false, saw_consistency = false;
  for (const auto& r : q.rules) {
    if (!r.head.empty() && r.head[0].atom.name() == "eligible_p(mike)") saw_primed_head = true;
    if (r.is_constraint() && r.body.size() == 2 && r.premise.empty() &&
        pv.base_of(r.body[1].lit.atom))
      saw_consistency = true;
    for (const auto& h : r.head) CHECK_FALSE(h.strong_neg);
    for (const auto& e : r.body)
      if (e.kind == BodyElem::Kind::literal) CHECK_FALSE(e.lit.strong_neg);
  }
  CHECK(saw_primed_head);
  CHECK(saw_consistency);
  // a `not K eligible` premise stays a single negated modal conjunct
  const Rule* interview = nullptr;
  for (const auto& r : q.rules)
    if (!r.head.empty() && r.head[0].atom.name() == "interview(mike)") interview = &r;
  REQUIRE(interview != nullptr);
  REQUIRE(interview->premise.size() == 2);
  CHECK(interview->premise[0].default_neg);
  CHECK(interview->premise[0].body->to_string(Dialect::two_valued) == "eligible(mike)");
  // not K -eligible reads the primed side non-falsity
  CHECK(interview->premise[1].default_neg);
  CHECK(interview->premise[1].body->to_string(Dialect::two_valued) == "~~eligible_p(mike)");

  // the output survives a parser round trip
  Program again = parse_and_ground(q.to_string());
  CHECK(again.to_string() == q.to_string());

  CHECK_THROWS_AS(sigma_translate(parse_and_ground("a.")), std::invalid_argument);
}

TEST_CASE("reduct of the interview program against its intended view") {
  Program p = parse_and_ground(kMikeGelfond);
  auto w1 = world3({"eligible(mike)", "highGPA(mike)", "interview(mike)"}, {});
  auto w2 = world3({"fairGPA(mike)", "interview(mike)"}, {});
  auto a = PossibleWorldStructure::of(std::vector<ThreeValuedWorld>{w1, w2});

  DisjunctionSet r1 = g_reduct(p, a, w1);
  // fired: eligible :- highGPA, interview (premises hold), the disjunctive fact
  REQUIRE(r1.disjunctions.size() == 3);
  DisjunctionSet r2 = g_reduct(p, a, w2);
  REQUIRE(r2.disjunctions.size() == 2);  // interview + disjunctive fact
  // and both worlds are minimal closed sets of their reducts
  for (const auto& [w, r] : {std::pair{w1, r1}, std::pair{w2, r2}}) {
    auto mins = min_closed_sets(r);
    CHECK(std::count(mins.begin(), mins.end(), w.literals) == 1);
  }
}

TEST_CASE("world views of the interview program, both methods") {
  Program p = parse_and_ground(kMikeGelfond);
  auto views = gelfond_world_views(p, GelfondMethod::via_sigma);
  REQUIRE(views.size() == 1);
  REQUIRE(views[0].three.size() == 2);
  CHECK(views[0].three[0] ==
        world3({"eligible(mike)", "highGPA(mike)", "interview(mike)"}, {}));
  CHECK(views[0].three[1] == world3({"fairGPA(mike)", "interview(mike)"}, {}));
  // 5 vocabulary atoms is beyond the direct cap; it must refuse, not guess
  CHECK_THROWS(gelfond_world_views(p, GelfondMethod::direct));
}

TEST_CASE("reduct factorization: modal premises then object bodies") {
  Rng rng(808);
  for (int i = 0; i < 200; ++i) {
    Program p = random_gelfond_program(rng, 3, 4, 2);
    auto worlds = all_consistent_worlds(p.vocabulary);
    if (worlds.size() > 27) continue;
    auto a = PossibleWorldStructure::of(std::vector<ThreeValuedWorld>{worlds[0], worlds.back()});
    Program stripped = epistemic_reduct(p, a, ReductMode::rulewise);
    for (const auto& w : worlds) {
      DisjunctionSet direct = g_reduct(p, a, w);
      DisjunctionSet staged = supp_reduct(stripped, w);
      // same multiset of head disjunctions
      auto key = [](DisjunctionSet d) {
        std::vector<std::string> out;
        for (auto& h : d.disjunctions) {
          std::sort(h.begin(), h.end());
          std::string s;
          for (const auto& l : h) s += l.to_string() + ";";
          out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        return out;
      };
      CHECK(key(direct) == key(staged));
    }
  }
}

TEST_CASE("translation route matches the exhaustive definition") {
  Rng rng(1991);
  int seen = 0, with_views = 0;
  for (int i = 0; i < 250 && seen < 200; ++i) {
    Program p = random_gelfond_program(rng, 2, 4, 2);
    if (p.vocabulary.size() > 2) continue;
    ++seen;
    auto direct = gelfond_world_views(p, GelfondMethod::direct);
    auto sigma = gelfond_world_views(p, GelfondMethod::via_sigma);
    REQUIRE(direct == sigma);
    if (!direct.empty()) ++with_views;
  }
  CHECK(seen >= 200);
  CHECK(with_views > 40);
}
