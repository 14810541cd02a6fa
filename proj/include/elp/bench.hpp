#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "elp/base_semantics.hpp"
#include "elp/parse.hpp"
#include "elp/program.hpp"

namespace elp {

// --- QBF ------------------------------------------------------------------

struct QbfLit {
  std::string var;
  bool neg = false;
};

struct QbfInstance {
  enum class Quant { exists, forall };
  struct Block {
    Quant quant;
    std::vector<std::string> vars;
  };
  std::vector<Block> blocks;                // 2 or 3 blocks
  std::vector<std::vector<QbfLit>> matrix;  // disjuncts (DNF) or clauses (CNF)
  bool matrix_is_cnf = false;

  std::size_t var_count() const;
};

/// Truth by exhaustive quantifier expansion; capped at 12 variables.
bool qbf_eval(const QbfInstance& q);

/// Reduction from exists-forall DNF truth to epistemic-stable-model
/// existence: copy rules y <- K y / y' <- K y', both-polarity exclusion
/// constraints on the y pairs, z/z' generators, one rule to w per
/// disjunct (with negated matrix literals reading the primed atom), and
/// the final constraint :- not K w.
Program gen_sigma2_program(const QbfInstance& q);

/// Reduction from exists-forall-exists 3-CNF truth: the sigma2 copy and
/// exclusion groups over X, the f/g flip-flop, y/z disjunctive
/// generators under f, z-saturation under f and w, one rule to w per
/// clause (negated matrix literals reading the plain atom), f & ~w -> w,
/// and the final constraint :- not K (~w).
Program gen_sigma3_program(const QbfInstance& q);

// --- least/unique model ---------------------------------------------------

enum class UniqueVariant { classical, stable };

/// F union F^K (every atom x replaced by K x in the copy); the stable
/// variant adds the complementary x/x_p generator pairs. Input must
/// consist of constraints over [not] atoms only.
Program gen_unique_model_program(const Program& f, UniqueVariant variant);

/// Subset-least classical model of a constraint theory, if one exists
/// (the intersection of all models, when it is itself a model).
std::optional<Interpretation> least_model_oracle(const Program& f);

// --- graphs ---------------------------------------------------------------

struct Digraph {
  std::vector<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;  // ordered, no self-loops
};

/// Hamiltonian-cycle + critical-edge program: a standard HC guess
/// (complementary hc/nhc pairs, pairwise degree-1 constraints,
/// reachability from the first vertex) plus
/// critical(X,Y) :- edge(X,Y), K hc(X,Y).
SourceProgram gen_hc_critical(const Digraph& g);

/// Graph-extension variant: guess at most p new edges (no self-loops, no
/// duplicates of existing edges), run the HC program over the extended
/// edge set, and require at most k critical edges.
SourceProgram gen_extension(const Digraph& g, int p, int k);

struct HamiltonianAnswer {
  std::vector<std::set<std::pair<std::string, std::string>>> cycles;
  std::set<std::pair<std::string, std::string>> critical;  // all edges when no cycle
};

/// Fixed-start permutation enumeration; capped at 7 vertices.
HamiltonianAnswer hamiltonian_oracle(const Digraph& g);

// --- brute-force world views ----------------------------------------------

/// Test every nonempty family of interpretations (or consistent literal
/// sets in the Gelfond dialect) directly against the fixpoint definition
/// of a world view. Caps: 3 vocabulary atoms two-valued, 2 Gelfond.
std::vector<PossibleWorldStructure> brute_world_view_oracle(const Program& p, Semantics sem);

// --- seeded random instances ----------------------------------------------

using Rng = std::mt19937;

Program random_epistemic_program(Rng& rng, int max_atoms = 3, int max_rules = 5,
                                 int max_modal = 3);
Program random_gelfond_program(Rng& rng, int max_atoms = 4, int max_rules = 5,
                               int max_modal = 3);
QbfInstance random_qbf2(Rng& rng, int y_vars = 3, int z_vars = 3);
QbfInstance random_qbf3(Rng& rng, int x_vars = 2, int y_vars = 2, int z_vars = 2);
Digraph random_digraph(Rng& rng, int vertices);
Program random_constraint_theory(Rng& rng, int max_atoms = 4, int max_constraints = 4);

}  // namespace elp
