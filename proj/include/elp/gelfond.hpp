#pragma once

#include <map>
#include <optional>
#include <vector>

#include "elp/base_semantics.hpp"
#include "elp/epistemic.hpp"
#include "elp/program.hpp"

namespace elp {

/// Bijection between a vocabulary and fresh primed atoms standing for the
/// strong negations. Primed names use an identifier-safe `_p` suffix so
/// translated programs survive the parser round trip.
class PrimedVocabulary {
 public:
  static PrimedVocabulary make(const std::vector<Atom>& vocab);

  Atom primed(Atom base) const;
  std::optional<Atom> base_of(Atom maybe_primed) const;
  bool is_primed(Atom a) const { return base_of(a).has_value(); }
  const std::vector<Atom>& bases() const { return bases_; }

 private:
  std::vector<Atom> bases_;
  std::map<Atom, Atom> to_primed_, to_base_;
};

/// phi+ / phi- over the primed vocabulary: under a world's prime encoding,
/// phi+ is two-valued true iff phi is three-valued true, and phi- is
/// two-valued true iff phi is not three-valued false.
struct SignedFormulaPair {
  Formula::Ptr plus, minus;
};

SignedFormulaPair plus_minus(const Formula::Ptr& phi, const PrimedVocabulary& pv);

/// Heads of rules whose entire body is satisfied by the pair (a, w):
/// object literals three-valued against w, modal conjuncts against a.
DisjunctionSet g_reduct(const Program& p, const PossibleWorldStructure& a,
                        const ThreeValuedWorld& w);

/// Strong-negation elimination: literals map to atoms/primed atoms, modal
/// conjuncts through phi+/phi-, and one consistency constraint
/// x & x_p -> #false per vocabulary atom. Output is a valid two-valued
/// epistemic program.
Program sigma_translate(const Program& p, PrimedVocabulary* out_pv = nullptr);

Interpretation prime_encode(const ThreeValuedWorld& w, const PrimedVocabulary& pv);
/// Throws std::invalid_argument when the input holds both x and x_p.
ThreeValuedWorld prime_decode(const Interpretation& m, const PrimedVocabulary& pv);

enum class GelfondMethod { via_sigma, direct };

/// World views per Gelfond's fixpoint. via_sigma runs the two-valued
/// engine on sigma(P) under epistemic supported models and decodes;
/// direct exhaustively tests every nonempty family of consistent literal
/// sets (oracle mode, small vocabularies only).
std::vector<PossibleWorldStructure> gelfond_world_views(const Program& p, GelfondMethod method,
                                                        const EngineOptions& opts = {},
                                                        EngineStats* stats = nullptr);

}  // namespace elp
