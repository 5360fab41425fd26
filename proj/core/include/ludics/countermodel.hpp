#pragma once

// Countermodel extraction from failed proof search.
//
// A failed or diverging deterministic search yields an open branch. From it
// we build one negative model per context variable such that substituting
// them into the root subject makes the closed interaction diverge. Per
// positive level i of the branch, the level model is
//   M(i) = a(xs). xs_k | b<M(y1)..M(yl)>  +  Sum_{c in alpha0 \ {a}} c(ws).daimon
// where (a, k, b, ys) are the branch data at that level, and per variable
//   M(y) = Meet { M(j) : level j has head variable y, j after y's binding }.
// Since every M(j) at a variable's connective carries all of its actions
// (daimon on the non-chosen ones), the meet is computed symbolically as the
// branch-wise union of the single head predesigns, and an empty meet is the
// all-daimon sum over the connective's actions.
//
// Periodic branches (the search revisited a state) produce genuinely
// infinite branches; their models are periodic and are represented by a
// cyclic definition system: each bound variable of each level becomes a
// guarded zero-parameter definition, and the wrap-around contributions are
// collected along the orbit of the period's variable renaming. Truncated
// branches only support the finite approximants.

#include <cstdint>
#include <optional>

#include "ludics/normalize.hpp"
#include "ludics/proofsys.hpp"

namespace ludics {

struct ModelAssignment {
  // The model for each root context variable (all-daimon sum if the variable
  // never heads a level).
  std::map<Var, DesignPtr> models;
  // The level models M(i), one per branch step.
  std::vector<DesignPtr> mi;
  // Negative roots: the positive counter-design x0|b<M(ys)> for the forced
  // first negative step; null for positive roots.
  DesignPtr counter_positive;
  // True when the models use a cyclic definition system (Periodic branch).
  bool cyclic = false;
  // Set when the assignment is the finite approximant at cut height K.
  std::optional<std::size_t> approx;
};

// Runs the deterministic search and returns its open branch, or nullopt if
// the sequent is derivable.
std::optional<OpenBranch> open_branch(const Sequent& s, Engine& eng,
                                      std::uint64_t fuel, bool linear = false);

// Builds the model assignment of the branch. StuckOmega/StuckName use the
// finite construction; Periodic uses the cyclic one. Truncated branches are
// refused (use build_approximant).
ModelAssignment build_countermodel(const OpenBranch& br, Engine& eng);

// The approximant at cut height K <= steps: the branch is chopped there and
// the topmost level model degenerates to the all-daimon sum. Approximants
// are monotone in K (conjunct-wise) and converge to the full models.
ModelAssignment build_approximant(const OpenBranch& br, Engine& eng,
                                  std::size_t K);

struct DefeatReport {
  Verdict verdict = Verdict::Unknown;
  EvalOutcome outcome;
  std::string detail;
};

// Substitutes the models into the root subject (through the counter-design
// for negative roots) and evaluates the closed interaction. A definitive
// branch end should yield Omega; an approximant of a truncated branch
// converges once it consumes the built levels, which the report flags as
// progress only.
DefeatReport verify_defeat(const OpenBranch& br, const ModelAssignment& ma,
                           Engine& eng, std::uint64_t fuel);

struct MembershipReport {
  bool all_passed = true;
  std::size_t checks = 0;
  std::string detail;  // one line per failed or skipped check
};

// Evidence that each model inhabits the dual of its variable's behaviour:
// every enumerated ethics member of the behaviour must interact to daimon
// with the model (and, for negative roots, the counter-design must interact
// to daimon with every enumerated member of the negative behaviour).
MembershipReport verify_countermodel_membership(const OpenBranch& br,
                                                const ModelAssignment& ma,
                                                Engine& eng, std::uint64_t fuel,
                                                std::size_t size);

}  // namespace ludics
