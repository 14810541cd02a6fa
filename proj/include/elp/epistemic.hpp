#pragma once

#include <optional>
#include <vector>

#include "elp/base_semantics.hpp"
#include "elp/program.hpp"

namespace elp {

/// A split of the program's modal atoms: phi assumed to hold, psi assumed
/// not to. Entries are the K-guarded bodies, identified by canonical form.
struct Partition {
  std::vector<Formula::Ptr> phi, psi;
};

enum class ReductMode { rulewise, substitution };

/// Epistemic reduct with respect to a candidate structure.
/// rulewise: drop rules whose premise fails, strip premises elsewhere.
/// substitution: replace each modal atom by #true/#false inside its
/// (possibly negated) premise conjunct, keeping every rule.
Program epistemic_reduct(const Program& p, const PossibleWorldStructure& a, ReductMode mode);

/// P restricted by a partition: rules whose premise contains K(psi) with
/// psi assumed false, or a negated K(phi) with phi assumed true, are
/// dropped; premises are stripped from the survivors.
Program blocked_program(const Program& p, const Partition& part);

struct WorldView {
  PossibleWorldStructure structure;
  Semantics semantics = Semantics::stable;
  std::optional<Partition> origin;
  bool verified = false;
};

struct EngineOptions {
  int max_modal = 20;  // refuse above 2^max_modal partitions
};

struct EngineStats {
  long partitions_checked = 0;
  long base_calls = 0;
  long fixpoint_rejections = 0;  // partitions passing conditions 1-3 but not the fixpoint
};

/// Candidate check for one partition: base models of the blocked program
/// must be nonempty, agree with phi everywhere, refute each psi somewhere,
/// and pass the direct fixpoint against the rulewise reduct.
std::optional<WorldView> check_partition(const Program& p, const Partition& part,
                                         Semantics sem, EngineStats* stats = nullptr);

/// All verified world views, deduplicated and canonically ordered.
std::vector<WorldView> enumerate_world_views(const Program& p, Semantics sem,
                                             const EngineOptions& opts = {},
                                             EngineStats* stats = nullptr);

enum class QueryMode { cautious, brave };

bool holds_in_view(const WorldView& v, const Formula::Ptr& query, QueryMode mode);
bool holds_in_view(const WorldView& v, const ModalLiteral& query, QueryMode mode);

}  // namespace elp
