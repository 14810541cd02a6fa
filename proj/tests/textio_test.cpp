#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "elp/errors.hpp"
#include "elp/ground.hpp"
#include "elp/report.hpp"

using namespace elp;

namespace {

const char* kMike = R"(
:- eligible(mike), neligible(mike).
fairGPA(mike) | highGPA(mike).
eligible(mike) :- highGPA(mike).
eligible(mike) :- underrep(mike), fairGPA(mike).
neligible(mike) :- lowGPA(mike).
interview(mike) :- not K eligible(mike), not K neligible(mike).
)";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("parsing the interview program") {
  SourceProgram src = parse_program(kMike);
  CHECK(src.dialect == Dialect::two_valued);
  CHECK_FALSE(src.explicit_dialect);
  REQUIRE(src.statements.size() == 6);
  CHECK(src.statements[0].head.empty());
  CHECK(src.statements[1].head.size() == 2);
  const NGRule& last = src.statements[5];
  REQUIRE(last.body.size() == 2);
  CHECK(last.body[0].kind == NGBodyElem::Kind::modal);
  CHECK(last.body[0].modal.default_neg);
  CHECK(last.body[1].modal.to_string(Dialect::two_valued) == "not K neligible(mike)");
}

TEST_CASE("gelfond-dialect rule with every element kind") {
  SourceProgram src = parse_program("#dialect gelfond.\na | -d :- b, not -c, -K (d | -c).");
  CHECK(src.dialect == Dialect::gelfond);
  CHECK(src.explicit_dialect);
  REQUIRE(src.statements.size() == 1);
  const NGRule& r = src.statements[0];
  REQUIRE(r.head.size() == 2);
  CHECK_FALSE(r.head[0].strong_neg);
  CHECK(r.head[1].strong_neg);
  CHECK(r.head[1].atom.pred == "d");
  REQUIRE(r.body.size() == 3);
  CHECK(r.body[1].default_neg);
  CHECK(r.body[1].lit.strong_neg);
  CHECK(r.body[2].kind == NGBodyElem::Kind::modal);
  CHECK(r.body[2].modal.strong_neg);
  CHECK(r.body[2].modal.body->to_string(Dialect::gelfond) == "(d | -c)");
}

TEST_CASE("dialect rules are enforced") {
  CHECK_THROWS_AS(parse_program("-a :- b."), ParseError);  // strong negation needs gelfond
  CHECK_THROWS_AS(parse_program("#dialect gelfond.\na :- ~b."), ParseError);
  CHECK_THROWS_AS(parse_program("a :- K K a."), ParseError);  // nested modal operator
  CHECK_THROWS_AS(parse_program(":- K (K a)."), ParseError);
  CHECK_THROWS_AS(parse_program("#dialect gelfond.", Dialect::two_valued), ParseError);
  CHECK_THROWS_AS(parse_program("a :- b.\n#dialect gelfond."), ParseError);  // too late
  // forced dialect overrides the default
  CHECK(parse_program("-a.", Dialect::gelfond).dialect == Dialect::gelfond);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_program("a :- b.\nc :- ;");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() > 1);
  }
}

TEST_CASE("unsafe variables are rejected") {
  CHECK_THROWS_WITH_AS(parse_program("p(X) :- not q(X)."),
                       doctest::Contains("unsafe variable 'X'"), ParseError);
  CHECK_THROWS_AS(parse_program("p(X)."), ParseError);
  CHECK_THROWS_AS(parse_program("p :- K q(X)."), ParseError);
  // positive body literals and #domain directives both make a variable safe
  CHECK_NOTHROW(parse_program("q(a).\np(X) :- q(X)."));
  CHECK_NOTHROW(parse_program("v(a).\n#domain v(X).\np(X)."));
}

TEST_CASE("grounding instantiates positive-body variables") {
  Program p = parse_and_ground(R"(
edge(a,b). edge(b,c). edge(c,a).
edgeEG(X,Y) :- edge(X,Y).
critical(X,Y) :- edgeEG(X,Y), K hc(X,Y).
)");
  int critical = 0;
  for (const auto& r : p.rules)
    if (!r.head.empty() && r.head[0].atom.name().rfind("critical", 0) == 0) {
      ++critical;
      REQUIRE(r.premise.size() == 1);
    }
  CHECK(critical == 3);
  CHECK(p.modal_atoms().size() == 3);
}

TEST_CASE("grounding a variable-free program is the identity") {
  std::string text = "a :- b, not c.\nb.\n:- a, c.\nd :- K (a & ~c).";
  Program p = parse_and_ground(text);
  Program again = parse_and_ground(p.to_string());
  CHECK(p.to_string() == again.to_string());
  CHECK(p.rules.size() == 4);
}

TEST_CASE("domain directives bind otherwise-free variables") {
  Program p = parse_and_ground(R"(
vtx(a). vtx(b).
#domain vtx(X).
#domain vtx(Y).
critical(X,Y) :- K hc(X,Y).
)");
  int critical = 0;
  for (const auto& r : p.rules)
    if (!r.head.empty() && r.head[0].atom.name().rfind("critical", 0) == 0) ++critical;
  CHECK(critical == 4);  // 2 x 2 bindings
}

TEST_CASE("grounding is monotone in the facts") {
  std::string rules = "p(X) :- q(X).\n";
  Program small = parse_and_ground("q(a).\n" + rules);
  Program large = parse_and_ground("q(a). q(b).\n" + rules);
  CHECK(small.rules.size() == 2);
  CHECK(large.rules.size() == 4);
}

TEST_CASE("cardinality guards ground to member lists") {
  Program p = parse_and_ground(R"(
vtx(a). vtx(b).
pick(X) :- vtx(X), not skip(X).
skip(X) :- vtx(X), not pick(X).
:- 2 { pick(X) : vtx(X) }.
)");
  const Rule* guard_rule = nullptr;
  for (const auto& r : p.rules)
    if (r.guard) guard_rule = &r;
  REQUIRE(guard_rule != nullptr);
  CHECK(guard_rule->is_constraint());
  CHECK(guard_rule->guard->bound == 2);
  REQUIRE(guard_rule->guard->atoms.size() == 2);
  CHECK(guard_rule->guard->atoms[0].name() == "pick(a)");
  CHECK(guard_rule->guard->atoms[1].name() == "pick(b)");
  // guards only appear in constraints, and at most once
  CHECK_THROWS_AS(parse_program("x :- 1 { a, b }."), ParseError);
  CHECK_THROWS_AS(parse_program(":- 1 { a }, 1 { b }."), ParseError);
}

TEST_CASE("print-parse round trip reaches a fixpoint on the corpus") {
  for (const char* path : {"../corpus/mike.elp", "../corpus/mike_gelfond.elp",
                           "../corpus/noview.elp"}) {
    Program p = parse_and_ground(slurp(path));
    std::string once =
        (p.dialect == Dialect::gelfond ? std::string("#dialect gelfond.\n") : std::string()) +
        p.to_string();
    Program q = parse_and_ground(once);
    std::string twice =
        (q.dialect == Dialect::gelfond ? std::string("#dialect gelfond.\n") : std::string()) +
        q.to_string();
    CHECK(once == twice);
  }
}

TEST_CASE("reports are canonical and injective") {
  Program p = parse_and_ground("a :- K a.");
  EngineStats stats;
  auto views = enumerate_world_views(p, Semantics::stable, {}, &stats);
  REQUIRE(views.size() == 2);
  SolveReport rep = make_report(p, views, Semantics::stable, stats);
  // canonical world order: the empty-world view sorts first
  REQUIRE(rep.views.size() == 2);
  CHECK(rep.views[0].worlds == std::vector<std::vector<std::string>>{{}});
  CHECK(rep.views[1].worlds == std::vector<std::vector<std::string>>{{"a"}});
  CHECK(rep.views[0].k_false == std::vector<std::string>{"K a"});
  CHECK(rep.views[1].k_true == std::vector<std::string>{"K a"});

  std::string text = emit_report(rep, ReportFormat::text);
  std::string json = emit_report(rep, ReportFormat::json);
  CHECK(text == emit_report(rep, ReportFormat::text));
  CHECK(json.find("\"world_views\"") != std::string::npos);
  CHECK(json.find("\"k_true\"") != std::string::npos);

  SolveReport other = rep;
  other.views.pop_back();
  CHECK(emit_report(other, ReportFormat::json) != json);
  CHECK(emit_report(other, ReportFormat::text) != text);

  SolveReport empty;
  CHECK(emit_report(empty, ReportFormat::json).find("\"world_views\": []") != std::string::npos);
}

TEST_CASE("timing stays zero unless requested") {
  Program p = parse_and_ground("a.");
  EngineStats stats;
  auto views = enumerate_world_views(p, Semantics::stable, {}, &stats);
  SolveReport rep = make_report(p, views, Semantics::stable, stats);
  CHECK(rep.ms == 0);
  CHECK(emit_report(rep, ReportFormat::json).find("\"ms\": 0") != std::string::npos);
}
