#include "elp/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace elp {
namespace {

std::string dialect_name(Dialect d) { return d == Dialect::gelfond ? "gelfond" : "lk"; }

std::string modal_name(const Formula::Ptr& body, Dialect d) {
  if (body->kind() == Formula::Kind::atom) return "K " + body->atom_ref().name();
  return "K (" + body->to_string(d) + ")";
}

void fill_modal_split(const Program& p, const PossibleWorldStructure& s, SolveReport::View& v) {
  for (const auto& body : p.modal_atoms()) {
    if (sat_modal(s, ModalLiteral(body)))
      v.k_true.push_back(modal_name(body, p.dialect));
    else
      v.k_false.push_back(modal_name(body, p.dialect));
  }
}

SolveReport::View view_of(const Program& p, const PossibleWorldStructure& s) {
  SolveReport::View v;
  if (s.dialect == Dialect::two_valued) {
    for (const auto& w : s.two) {
      std::vector<std::string> names;
      for (Atom a : w.true_atoms) names.push_back(a.name());
      v.worlds.push_back(std::move(names));
    }
  } else {
    for (const auto& w : s.three) {
      std::vector<std::string> names;
      for (const auto& l : w.literals) names.push_back(l.to_string());
      v.worlds.push_back(std::move(names));
    }
  }
  fill_modal_split(p, s, v);
  return v;
}

}  // namespace

SolveReport make_report(const Program& p, const std::vector<WorldView>& views, Semantics sem,
                        const EngineStats& stats) {
  SolveReport r;
  r.dialect = p.dialect;
  r.semantics = sem;
  for (const auto& v : views) r.views.push_back(view_of(p, v.structure));
  r.partitions_checked = stats.partitions_checked;
  r.base_calls = stats.base_calls;
  return r;
}

SolveReport make_report(const Program& p, const std::vector<PossibleWorldStructure>& views,
                        const EngineStats& stats) {
  SolveReport r;
  r.dialect = p.dialect;
  r.semantics = Semantics::supported;
  for (const auto& s : views) r.views.push_back(view_of(p, s));
  r.partitions_checked = stats.partitions_checked;
  r.base_calls = stats.base_calls;
  return r;
}

std::string emit_report(const SolveReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["dialect"] = dialect_name(report.dialect);
    j["semantics"] = to_string(report.semantics);
    j["world_views"] = nlohmann::ordered_json::array();
    for (const auto& v : report.views) {
      nlohmann::ordered_json jv;
      jv["worlds"] = v.worlds;
      jv["k_true"] = v.k_true;
      jv["k_false"] = v.k_false;
      j["world_views"].push_back(std::move(jv));
    }
    j["stats"] = {{"partitions_checked", report.partitions_checked},
                  {"base_calls", report.base_calls},
                  {"ms", report.ms}};
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "dialect: " << dialect_name(report.dialect) << "\n"
     << "semantics: " << to_string(report.semantics) << "\n"
     << "world views: " << report.views.size() << "\n";
  for (std::size_t i = 0; i < report.views.size(); ++i) {
    const auto& v = report.views[i];
    os << "view " << i + 1 << ":\n";
    for (const auto& w : v.worlds) {
      os << "  { ";
      for (std::size_t k = 0; k < w.size(); ++k) os << (k ? ", " : "") << w[k];
      os << " }\n";
    }
    os << "  known:";
    for (const auto& s : v.k_true) os << " " << s << ";";
    os << "\n  not known:";
    for (const auto& s : v.k_false) os << " " << s << ";";
    os << "\n";
  }
  os << "stats: partitions=" << report.partitions_checked << " base_calls=" << report.base_calls
     << " ms=" << report.ms << "\n";
  return os.str();
}

}  // namespace elp
