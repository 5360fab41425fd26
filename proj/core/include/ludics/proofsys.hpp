#pragma once

// Sequents D |- ctx over logical behaviours, the two deterministic rule
// schemas, proof search, derivation checking (including the cut rule), and
// bounded proof enumeration.
//
// Proof search is deterministic: a positive sequent's head variable and
// action determine the unique applicable positive rule; a negative sequent
// always decomposes by the unique negative rule of the context's negative
// behaviour. Search fails either at an Omega subject or at an action name
// outside the context behaviour's connective.

#include <cstdint>
#include <optional>

#include "ludics/behaviour.hpp"
#include "ludics/design.hpp"

namespace ludics {

struct Sequent {
  DesignPtr subject;
  Context ctx;  // negative iff ctx.negative is set; must match the subject
};

struct RuleTag {
  enum Kind { Positive, Negative, Cut } kind = Positive;
  std::string conn;     // connective cname
  Name action;          // Positive: the action a
  Var variable;         // Positive: context variable z; Cut: cut variable
  BehaviourPtr lemma;   // Cut: the lemma behaviour P
};

struct Derivation {
  Sequent sequent;
  RuleTag rule;
  std::vector<Derivation> premises;
};

enum class StuckKind { None, StuckOmega, StuckName };

struct RuleStep {
  RuleTag tag;
  std::vector<Sequent> premises;
  // Positive rule: binders x.. of the chosen action (premise j corresponds
  // to binder j). Negative rule: per-premise fresh binders, in the premise
  // order (actions sorted by name).
  std::vector<std::vector<Var>> binders;
};

struct NextRuleResult {
  std::optional<RuleStep> step;
  StuckKind stuck = StuckKind::None;
  Name stuck_name;            // StuckName: the offending action
  BehaviourPtr blocking;      // StuckName: the behaviour whose connective lacks it
};

// The unique applicable rule, or the reason none applies. `linear` uses the
// linearized positive rule: the context is split among premises by free
// variables instead of duplicated. Throws on malformed sequents (subject not
// a proof, free variables outside the context).
NextRuleResult next_rule(const Sequent& s, Engine& eng, bool linear = false);

// One record per positive level of the open branch (read bottom-up):
// P_i |- Theta_i decomposes by the positive rule at (z, alpha, a), premise k
// is taken, whose negative sequent decomposes by (beta) and continues into
// the premise at action b with fresh binders ys.
struct BranchStep {
  Sequent pos_seq;
  Var z;
  BehaviourPtr z_beh;       // positive behaviour of z (connective alpha)
  Name a;
  std::vector<Var> xs;      // binders of a (the subject's own binders)
  std::size_t k = 0;        // 0-based premise index taken
  Sequent neg_seq;
  BehaviourPtr neg_beh;     // the negative behaviour decomposed (connective beta)
  Name b;
  std::vector<Var> ys;      // fresh binders introduced for b
};

enum class BranchEnd { StuckOmega, StuckName, Truncated, Periodic };

struct OpenBranch {
  Sequent root;
  // For a negative root: the single forced negative step taken first.
  struct NegPrefix {
    Sequent seq;
    BehaviourPtr neg_beh;
    Name b;
    std::vector<Var> ys;
  };
  std::optional<NegPrefix> neg_prefix;
  std::vector<BranchStep> steps;
  Sequent terminal;  // the positive sequent where the branch ends
  BranchEnd end = BranchEnd::StuckOmega;
  Name stuck_name;
  BehaviourPtr blocking;
  // Periodic: steps[period_start..steps.size()) repeat forever modulo the
  // renaming that carries the live variables at the repetition point back to
  // those at period_start.
  std::size_t period_start = 0;
  std::map<Var, Var> period_renaming;  // live vars at repetition -> at start
};

struct ProveResult {
  enum Kind { Derived, Failed, OutOfFuel } kind = Failed;
  std::optional<Derivation> derivation;  // Derived
  std::optional<OpenBranch> branch;      // Failed / OutOfFuel
};

// Deterministic proof search. Fuel counts rule applications. A repeated
// search state on the current path short-circuits to OutOfFuel with a
// Periodic branch (the deterministic search can then never terminate).
ProveResult prove(const Sequent& s, Engine& eng, std::uint64_t fuel,
                  bool linear = false);

// Validates every node against its rule schema. check_cut_derivation allows
// Cut nodes and proofs-with-cuts; it also returns the normal form of the
// root subject.
bool check_derivation(const Derivation& d, Engine& eng, std::string* why = nullptr);
std::pair<bool, DesignPtr> check_cut_derivation(const Derivation& d, Engine& eng,
                                                std::uint64_t fuel, int depth,
                                                std::string* why = nullptr);

// Every derivable (subject, derivation) over the context with at most `size`
// derivation nodes, each subject once up to equivalence, ordered by
// (design size, canonical key). Subjects are proofs by construction, with
// Omega at branches foreign to the decomposed connectives.
std::vector<std::pair<DesignPtr, Derivation>> enumerate_proofs(
    const Context& ctx, Engine& eng, std::size_t size);

// Indented, rule-tagged serialization of a derivation (stable golden format).
std::string print_derivation(const Derivation& d);

// Sequent files: `DESIGN |- x:BPOS, y:BPOS [, BNEG]`, preceded by optional
// sig/def/conn declarations.
Sequent parse_sequent(const std::string& text, Engine& eng);

}  // namespace ludics
