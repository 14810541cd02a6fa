#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "elp/program.hpp"

namespace elp {

enum class Semantics { classical, stable, supported };
std::string to_string(Semantics sem);

/// A set of head disjunctions. Disjunctions are normally nonempty; the
/// G-reduct of a fired constraint contributes an empty one, which makes
/// the minimal-closed-set family empty.
struct DisjunctionSet {
  std::vector<std::vector<ObjLiteral>> disjunctions;
};

/// All inclusion-minimal consistent literal sets sharing at least one
/// literal with every disjunction. Min({}) = {{}}.
std::vector<std::set<ObjLiteral>> min_closed_sets(const DisjunctionSet& h);

struct ModelSet {
  Semantics tag = Semantics::classical;
  std::vector<Interpretation> models;  // sorted, unique

  bool operator==(const ModelSet& o) const { return models == o.models; }
};

/// Streaming enumeration of models under `sem`; cb returning false aborts.
/// Returns true iff the enumeration ran to completion.
bool for_each_model(const Program& p, Semantics sem,
                    const std::function<bool(const Interpretation&)>& cb);

ModelSet classical_models(const Program& p);
ModelSet stable_models(const Program& p);
ModelSet supported_models(const Program& p);
ModelSet base_models(const Program& p, Semantics sem);

/// Gelfond-Lifschitz reduct of a modal-free program: rules whose
/// default-negated body literals are all false in m, those literals removed.
Program gl_reduct(const Program& p, const Interpretation& m);

/// Heads of rules whose object bodies the world satisfies (membership
/// reading of body literals).
DisjunctionSet supp_reduct(const Program& p, const Interpretation& m);
DisjunctionSet supp_reduct(const Program& p, const ThreeValuedWorld& w);

/// Supported answer sets of a modal-free Gelfond program: consistent W
/// with W in Min(supp_reduct(p, W)).
std::vector<ThreeValuedWorld> supported_answer_sets(const Program& p);

/// Every consistent literal set over the vocabulary (3^n of them).
std::vector<ThreeValuedWorld> all_consistent_worlds(const std::vector<Atom>& vocab,
                                                    std::size_t cap = std::size_t(1) << 20);

}  // namespace elp
