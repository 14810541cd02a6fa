#pragma once

#include <string>
#include <vector>

#include "elp/epistemic.hpp"

namespace elp {

enum class ReportFormat { text, json };

/// Canonical, serialization-ready solve result. Worlds and views are
/// sorted; modal atoms are listed by their surface form.
struct SolveReport {
  Dialect dialect = Dialect::two_valued;
  Semantics semantics = Semantics::stable;

  struct View {
    std::vector<std::vector<std::string>> worlds;  // each world: sorted literal names
    std::vector<std::string> k_true, k_false;      // modal atoms by structure-level truth
  };
  std::vector<View> views;

  long partitions_checked = 0;
  long base_calls = 0;
  long ms = 0;  // stays 0 unless timing was explicitly requested
};

/// Assemble a report for two-valued results.
SolveReport make_report(const Program& p, const std::vector<WorldView>& views, Semantics sem,
                        const EngineStats& stats);
/// Assemble a report for Gelfond results.
SolveReport make_report(const Program& p, const std::vector<PossibleWorldStructure>& views,
                        const EngineStats& stats);

/// Deterministic rendering; identical reports yield identical bytes and
/// distinct canonical reports yield distinct bytes.
std::string emit_report(const SolveReport& report, ReportFormat format);

}  // namespace elp
