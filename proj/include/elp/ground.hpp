#pragma once

#include "elp/parse.hpp"
#include "elp/program.hpp"

namespace elp {

/// Instantiate a source program over the constants reachable from its
/// facts. Variables bound by positive body literals range over a
/// bottom-up derivation fixpoint that ignores default negation, modal
/// premises, and guards (an over-approximation of what any model can
/// make true); variables covered by #domain directives range over the
/// derived extension of the domain predicate. Fully ground conjuncts are
/// never used as instantiation filters, so a variable-free program
/// grounds to itself. Cardinality guards are expanded to ground member
/// lists against the final derivation.
Program ground_program(const SourceProgram& src);

/// Convenience: parse + ground in one step.
Program parse_and_ground(const std::string& text,
                         std::optional<Dialect> dialect = std::nullopt);

}  // namespace elp
