#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "elp/bench.hpp"
#include "elp/epistemic.hpp"
#include "elp/errors.hpp"
#include "elp/gelfond.hpp"
#include "elp/ground.hpp"
#include "elp/report.hpp"

namespace {

constexpr int kExitViews = 0;
constexpr int kExitNoView = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Options {
  std::string input = "-";
  std::string dialect;  // "", "lk", "gelfond"
  std::string semantics = "stable";
  std::string enumerate = "all";
  std::string format = "text";
  int max_modal = 20;
  unsigned seed = 1;
  bool direct_oracle = false;
  bool timing = false;

  std::optional<elp::Dialect> forced_dialect() const {
    if (dialect == "lk") return elp::Dialect::two_valued;
    if (dialect == "gelfond") return elp::Dialect::gelfond;
    return std::nullopt;
  }
  elp::Semantics sem() const {
    if (semantics == "classical") return elp::Semantics::classical;
    if (semantics == "supported") return elp::Semantics::supported;
    return elp::Semantics::stable;
  }
};

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "input file ('-' for stdin)");
  cmd->add_option("--dialect", o.dialect, "input dialect")
      ->check(CLI::IsMember({"lk", "gelfond"}));
  cmd->add_option("--semantics", o.semantics, "base semantics")
      ->check(CLI::IsMember({"classical", "stable", "supported"}));
  cmd->add_option("--enumerate", o.enumerate, "report all views or just the first")
      ->check(CLI::IsMember({"all", "first"}));
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-modal", o.max_modal, "partition cap exponent");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_flag("--direct-oracle", o.direct_oracle,
                "use the exhaustive oracle path instead of the engine");
  cmd->add_flag("--timing", o.timing, "include elapsed milliseconds in reports");
}

int cmd_solve(const Options& o) {
  auto start = std::chrono::steady_clock::now();
  elp::Program p = elp::parse_and_ground(read_input(o.input), o.forced_dialect());
  elp::EngineOptions eopts;
  eopts.max_modal = o.max_modal;
  elp::EngineStats stats;

  elp::SolveReport report;
  bool any = false;
  if (p.dialect == elp::Dialect::gelfond) {
    auto method = o.direct_oracle ? elp::GelfondMethod::direct : elp::GelfondMethod::via_sigma;
    auto views = elp::gelfond_world_views(p, method, eopts, &stats);
    if (o.enumerate == "first" && views.size() > 1) views.resize(1);
    any = !views.empty();
    report = elp::make_report(p, views, stats);
  } else {
    std::vector<elp::WorldView> views;
    if (o.direct_oracle) {
      for (auto& s : elp::brute_world_view_oracle(p, o.sem())) {
        elp::WorldView v;
        v.structure = std::move(s);
        v.semantics = o.sem();
        v.verified = true;
        views.push_back(std::move(v));
      }
    } else {
      views = elp::enumerate_world_views(p, o.sem(), eopts, &stats);
    }
    if (o.enumerate == "first" && views.size() > 1) views.resize(1);
    any = !views.empty();
    report = elp::make_report(p, views, o.sem(), stats);
  }
  if (o.timing)
    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  std::cout << elp::emit_report(report, o.format == "json" ? elp::ReportFormat::json
                                                           : elp::ReportFormat::text);
  return any ? kExitViews : kExitNoView;
}

int cmd_translate(const Options& o) {
  auto forced = o.forced_dialect();
  elp::Program p =
      elp::parse_and_ground(read_input(o.input), forced.value_or(elp::Dialect::gelfond));
  std::cout << elp::sigma_translate(p).to_string();
  return kExitViews;
}

int cmd_ground(const Options& o) {
  elp::Program p = elp::parse_and_ground(read_input(o.input), o.forced_dialect());
  if (p.dialect == elp::Dialect::gelfond) std::cout << "#dialect gelfond.\n";
  std::cout << p.to_string();
  return kExitViews;
}

int cmd_gen(const std::string& kind, const Options& o, int vertices, int max_new, int max_crit) {
  elp::Rng rng(o.seed);
  if (kind == "sigma2") {
    std::cout << elp::gen_sigma2_program(elp::random_qbf2(rng)).to_string();
  } else if (kind == "sigma3") {
    std::cout << elp::gen_sigma3_program(elp::random_qbf3(rng)).to_string();
  } else if (kind == "unique") {
    auto f = elp::random_constraint_theory(rng);
    std::cout << elp::gen_unique_model_program(f, elp::UniqueVariant::stable).to_string();
  } else if (kind == "hc") {
    std::cout << elp::gen_hc_critical(elp::random_digraph(rng, vertices)).to_string();
  } else {
    std::cout << elp::gen_extension(elp::random_digraph(rng, vertices), max_new, max_crit)
                     .to_string();
  }
  return kExitViews;
}

int cmd_verify(const Options& o) {
  elp::Program p = elp::parse_and_ground(read_input(o.input), o.forced_dialect());
  std::vector<elp::PossibleWorldStructure> solver, oracle;
  if (p.dialect == elp::Dialect::gelfond) {
    solver = elp::gelfond_world_views(p, elp::GelfondMethod::via_sigma);
    oracle = elp::gelfond_world_views(p, elp::GelfondMethod::direct);
  } else {
    elp::EngineOptions eopts;
    eopts.max_modal = o.max_modal;
    for (const auto& v : elp::enumerate_world_views(p, o.sem(), eopts))
      solver.push_back(v.structure);
    oracle = elp::brute_world_view_oracle(p, o.sem());
  }
  auto render = [](const std::vector<elp::PossibleWorldStructure>& vs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : vs) arr.push_back(s.to_string());
    return arr;
  };
  bool match = solver == oracle;
  nlohmann::ordered_json verdict;
  verdict["instance"] = o.input;
  verdict["oracle"] = render(oracle);
  verdict["solver"] = render(solver);
  verdict["match"] = match;
  std::cout << verdict.dump(2) << "\n";
  return match ? kExitViews : kExitNoView;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epistemic logic program solver"};
  app.require_subcommand(1);
  Options o;

  CLI::App* solve = app.add_subcommand("solve", "compute world views");
  add_common_flags(solve, o);
  CLI::App* translate =
      app.add_subcommand("translate", "eliminate strong negation from a Gelfond program");
  add_common_flags(translate, o);
  CLI::App* ground = app.add_subcommand("ground", "print the ground instantiation");
  add_common_flags(ground, o);
  CLI::App* verify = app.add_subcommand("verify", "compare the engine against the brute oracle");
  add_common_flags(verify, o);

  CLI::App* gen = app.add_subcommand("gen", "generate benchmark instances");
  gen->require_subcommand(1);
  int vertices = 4, max_new = 1, max_crit = 2;
  std::vector<CLI::App*> gen_subs;
  for (const char* kind : {"sigma2", "sigma3", "unique", "hc", "ext"}) {
    CLI::App* sub = gen->add_subcommand(kind);
    sub->add_option("--seed", o.seed, "random seed");
    if (std::string(kind) == "hc" || std::string(kind) == "ext")
      sub->add_option("--vertices", vertices, "vertex count");
    if (std::string(kind) == "ext") {
      sub->add_option("--new-edges", max_new, "edge-addition budget");
      sub->add_option("--critical", max_crit, "critical-edge budget");
    }
    gen_subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(o);
    if (translate->parsed()) return cmd_translate(o);
    if (ground->parsed()) return cmd_ground(o);
    if (verify->parsed()) return cmd_verify(o);
    static const char* kinds[] = {"sigma2", "sigma3", "unique", "hc", "ext"};
    for (std::size_t i = 0; i < gen_subs.size(); ++i)
      if (gen_subs[i]->parsed()) return cmd_gen(kinds[i], o, vertices, max_new, max_crit);
  } catch (const elp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const elp::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
