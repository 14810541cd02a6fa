#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "elp/bench.hpp"
#include "elp/epistemic.hpp"
#include "elp/errors.hpp"
#include "elp/gelfond.hpp"
#include "elp/ground.hpp"

using namespace elp;

namespace {

QbfInstance qbf2(std::vector<std::string> ys, std::vector<std::string> zs,
                 std::vector<std::vector<QbfLit>> dnf) {
  QbfInstance q;
  q.blocks.push_back({QbfInstance::Quant::exists, std::move(ys)});
  q.blocks.push_back({QbfInstance::Quant::forall, std::move(zs)});
  q.matrix = std::move(dnf);
  q.matrix_is_cnf = false;
  return q;
}

QbfInstance qbf3(std::vector<std::string> xs, std::vector<std::string> ys,
                 std::vector<std::string> zs, std::vector<std::vector<QbfLit>> cnf) {
  QbfInstance q;
  q.blocks.push_back({QbfInstance::Quant::exists, std::move(xs)});
  q.blocks.push_back({QbfInstance::Quant::forall, std::move(ys)});
  q.blocks.push_back({QbfInstance::Quant::exists, std::move(zs)});
  q.matrix = std::move(cnf);
  q.matrix_is_cnf = true;
  return q;
}

Digraph graph(std::vector<std::string> vs,
              std::vector<std::pair<std::string, std::string>> es) {
  Digraph g;
  g.vertices = std::move(vs);
  g.edges.insert(es.begin(), es.end());
  return g;
}

bool has_stable_view(const Program& p) {
  return !enumerate_world_views(p, Semantics::stable).empty();
}

}  // namespace

TEST_CASE("quantified evaluation by expansion") {
  // exists y forall z: (y & z) | (y & ~z) is true (pick y)
  CHECK(qbf_eval(qbf2({"y"}, {"z"}, {{{"y", false}, {"z", false}}, {{"y", false}, {"z", true}}})));
  // exists y forall z: y & z is false (z can be false)
  CHECK_FALSE(qbf_eval(qbf2({"y"}, {"z"}, {{{"y", false}, {"z", false}}})));
  // exists x forall y exists z: x | y | z is true
  CHECK(qbf_eval(qbf3({"x"}, {"y"}, {"z"}, {{{"x", false}, {"y", false}, {"z", false}}})));
  // x & ~x as two clauses is false
  CHECK_FALSE(qbf_eval(qbf3({"x"}, {"y"}, {"z"},
                            {{{"x", false}, {"x", false}, {"x", false}},
                             {{"x", true}, {"x", true}, {"x", true}}})));
}

TEST_CASE("two-block reduction has the documented shape") {
  auto q = qbf2({"y"}, {"z"}, {{{"y", false}, {"z", true}}});
  Program p = gen_sigma2_program(q);
  CHECK(p.rules.size() == 8);
  CHECK(p.dialect == Dialect::two_valued);
  // exactly one rule with a negated modal premise (the final constraint)
  int final_constraints = 0;
  for (const auto& r : p.rules)
    if (r.is_constraint() && r.premise.size() == 1 && r.premise[0].default_neg)
      ++final_constraints;
  CHECK(final_constraints == 1);
}

TEST_CASE("two-block reduction: view existence tracks the formula") {
  // true instance -> at least one epistemic stable view
  CHECK(has_stable_view(gen_sigma2_program(
      qbf2({"y"}, {"z"}, {{{"y", false}, {"z", false}}, {{"y", false}, {"z", true}}}))));
  // false instance -> none
  CHECK_FALSE(has_stable_view(gen_sigma2_program(
      qbf2({"y"}, {"z"}, {{{"y", false}, {"z", false}}}))));
  // trivially true: a single disjunct over y only
  CHECK(has_stable_view(gen_sigma2_program(qbf2({"y"}, {"z"}, {{{"y", false}}}))));
}

TEST_CASE("three-block reduction has the documented shape") {
  auto q = qbf3({"x"}, {"y"}, {"z"}, {{{"x", false}, {"y", false}, {"z", false}}});
  Program p = gen_sigma3_program(q);
  CHECK(p.rules.size() == 13);
}

TEST_CASE("three-block reduction: view existence tracks the formula") {
  CHECK(has_stable_view(gen_sigma3_program(
      qbf3({"x"}, {"y"}, {"z"}, {{{"x", false}, {"y", false}, {"z", false}}}))));
  CHECK_FALSE(has_stable_view(gen_sigma3_program(
      qbf3({"x"}, {"y"}, {"z"},
           {{{"x", false}, {"x", false}, {"x", false}},
            {{"x", true}, {"x", true}, {"x", true}}}))));
}

TEST_CASE("least-model oracle") {
  // :- not a  forces a; least model {a}
  auto least = least_model_oracle(parse_and_ground(":- not a."));
  REQUIRE(least.has_value());
  CHECK(least->true_atoms == std::set<Atom>{Atom::intern("a")});
  // a | b choice has no least model
  CHECK_FALSE(least_model_oracle(parse_and_ground(":- not a, not b.\n:- a, b.")).has_value());
  // unconstrained vocabulary: least model is empty
  auto empty = least_model_oracle(parse_and_ground(":- a, b."));
  REQUIRE(empty.has_value());
  CHECK(empty->true_atoms.empty());
}

TEST_CASE("unique-model programs track least-model existence") {
  Rng rng(5150);
  int with_least = 0;
  for (int i = 0; i < 100; ++i) {
    Program f = random_constraint_theory(rng);
    bool least = least_model_oracle(f).has_value();
    if (least) ++with_least;
    Program cls = gen_unique_model_program(f, UniqueVariant::classical);
    Program stb = gen_unique_model_program(f, UniqueVariant::stable);
    CHECK(least == !enumerate_world_views(cls, Semantics::classical).empty());
    CHECK(least == !enumerate_world_views(stb, Semantics::stable).empty());
  }
  CHECK(with_least > 20);
  CHECK(with_least < 100);
  // rejects non-constraint input
  CHECK_THROWS_AS(gen_unique_model_program(parse_and_ground("a."), UniqueVariant::classical),
                  std::invalid_argument);
}

TEST_CASE("cycle oracle on fixed graphs") {
  auto triangle = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto ans = hamiltonian_oracle(triangle);
  REQUIRE(ans.cycles.size() == 1);
  CHECK(ans.critical == triangle.edges);

  auto two_cycle = graph({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(hamiltonian_oracle(two_cycle).cycles.size() == 1);
  CHECK(hamiltonian_oracle(two_cycle).critical.size() == 2);

  // complete bidirectional triangle: two cycles, no critical edge
  auto k3 = graph({"a", "b", "c"},
                  {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}, {"a", "c"}, {"c", "a"}});
  CHECK(hamiltonian_oracle(k3).cycles.size() == 2);
  CHECK(hamiltonian_oracle(k3).critical.empty());

  // no cycle: by convention every edge counts as critical
  auto path = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(hamiltonian_oracle(path).cycles.empty());
  CHECK(hamiltonian_oracle(path).critical == path.edges);
}

TEST_CASE("cycle program: critical edges appear in the view's knowledge") {
  auto triangle = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  Program p = ground_program(gen_hc_critical(triangle));
  auto views = enumerate_world_views(p, Semantics::stable);
  REQUIRE(views.size() == 1);
  REQUIRE(views[0].structure.two.size() == 1);
  const Interpretation& w = views[0].structure.two[0];
  for (const char* e : {"critical(a,b)", "critical(b,c)", "critical(c,a)"})
    CHECK(w.contains(Atom::intern(e)));

  auto path = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(enumerate_world_views(ground_program(gen_hc_critical(path)), Semantics::stable).empty());

  auto k3 = graph({"a", "b", "c"},
                  {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}, {"a", "c"}, {"c", "a"}});
  auto k3_views = enumerate_world_views(ground_program(gen_hc_critical(k3)), Semantics::stable);
  REQUIRE(k3_views.size() == 1);
  CHECK(k3_views[0].structure.two.size() == 2);  // both cycles
  for (const auto& w2 : k3_views[0].structure.two)
    for (Atom a : w2.true_atoms) CHECK(a.name().rfind("critical", 0) != 0);
}

TEST_CASE("extension program: small budget instances") {
  // a path needs one added edge to close the cycle
  auto path = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Program closed = ground_program(gen_extension(path, 1, 3));
  auto views = enumerate_world_views(closed, Semantics::stable);
  REQUIRE(views.size() == 1);
  REQUIRE(views[0].structure.two.size() == 1);
  CHECK(views[0].structure.two[0].contains(Atom::intern("newEdge(c,a)")));
  // with no budget the path stays acyclic
  CHECK(enumerate_world_views(ground_program(gen_extension(path, 0, 3)), Semantics::stable)
            .empty());
  // a triangle works with no additions, but its whole cycle is critical
  auto triangle = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK_FALSE(enumerate_world_views(ground_program(gen_extension(triangle, 0, 3)),
                                    Semantics::stable)
                  .empty());
  CHECK(enumerate_world_views(ground_program(gen_extension(triangle, 0, 2)), Semantics::stable)
            .empty());
}

TEST_CASE("brute-force world-view oracle caps and basics") {
  Program p = parse_and_ground("a :- K a.");
  auto views = brute_world_view_oracle(p, Semantics::stable);
  REQUIRE(views.size() == 2);
  CHECK(views[0].two == std::vector<Interpretation>{Interpretation{}});
  Program wide = parse_and_ground("x :- a, b, c, d.");
  CHECK_THROWS_AS(brute_world_view_oracle(wide, Semantics::stable), ResourceLimitError);
}

TEST_CASE("seeded generators are deterministic and in range") {
  Rng r1(7), r2(7);
  CHECK(random_epistemic_program(r1).to_string() == random_epistemic_program(r2).to_string());
  CHECK(gen_sigma2_program(random_qbf2(r1)).to_string() ==
        gen_sigma2_program(random_qbf2(r2)).to_string());
  Rng r3(11);
  for (int i = 0; i < 20; ++i) {
    Digraph g = random_digraph(r3, 4);
    CHECK(g.vertices.size() == 4);
    for (const auto& [u, v] : g.edges) CHECK(u != v);
    QbfInstance q = random_qbf3(r3);
    CHECK(q.blocks.size() == 3);
    for (const auto& c : q.matrix) CHECK(c.size() == 3);
  }
}
