#pragma once

// Constant-only polarized linear logic: formulas, strict sequents, synthetic
// connectives, the two translations between formulas and logical behaviours,
// and two independent provers used to cross-check each other.
//
// ASCII formula syntax: units `0 1 T B` (B is bottom), binary `* + & |` for
// times/plus/with/par (left-associative, one precedence level), prefixes `!`
// and `?`. Parenthesized subformulas as needed. Polarity is checked: `*`/`+`
// take positive operands, `&`/`|` negative, `!` a negative operand, `?` a
// positive one.

#include <cstdint>
#include <memory>

#include "ludics/behaviour.hpp"
#include "ludics/design.hpp"

namespace ludics {

enum class LLPKind {
  Zero, One, Tensor, Plus, OfCourse,  // positive
  Top, Bot, Par, With, WhyNot,        // negative
};

struct LLPFormula;
using LLPPtr = std::shared_ptr<const LLPFormula>;

struct LLPFormula {
  LLPKind kind;
  LLPPtr left;   // binary: left operand; OfCourse/WhyNot: the operand
  LLPPtr right;  // binary only
};

Polarity llp_polarity(LLPKind k);
inline Polarity llp_polarity(const LLPPtr& f) { return llp_polarity(f->kind); }

LLPPtr llp_make(LLPKind kind, LLPPtr left = nullptr, LLPPtr right = nullptr);
LLPPtr parse_llp(const std::string& text);
std::string print_llp(const LLPPtr& f);
LLPPtr llp_dual(const LLPPtr& f);
bool llp_equal(const LLPPtr& a, const LLPPtr& b);

// A synthetic connective: the maximal same-polarity top layer of a formula,
// with !/? leaves replaced by numbered variables. Kinds reuse LLPKind;
// OfCourse/WhyNot nodes carry the variable index and no operand.
struct Syn;
using SynPtr = std::shared_ptr<const Syn>;
struct Syn {
  LLPKind kind;
  SynPtr left, right;
  std::size_t var = 0;  // OfCourse/WhyNot: the variable index
};

struct SyntheticDecomposition {
  Polarity pol;
  SynPtr conn;
  // One argument per !/? occurrence, in left-to-right order; occurrences of
  // equal subformulas get distinct variables, so the layer of a formula always
  // satisfies the disjointness condition of the times/par sides.
  std::vector<LLPPtr> args;
};

// Extracts the top synthetic layer of a formula.
SyntheticDecomposition synthetic_decompose(const LLPPtr& f);

// Checks the disjointness condition of an explicit synthetic-connective
// expression; returns the offending description or empty.
std::string syn_disjointness_violation(const SynPtr& s);

// Formula -> logical behaviour. Negative layers translate by the action
// clauses (top: no actions; bot: {*}; ?x: {up(x)}; par: pairwise derived
// wp-names; with: pi1/pi2-prefixed names); positive layers via the dual
// layer. Library shapes (top, bot, single ?x) map onto the library
// connectives. Deterministic: equal formulas yield identical connectives,
// including the generated connective identifiers.
BehaviourPtr bullet(const LLPPtr& f, Engine& eng);

// Logical behaviour -> formula. Actions become par-chains of ?-arguments
// (bottom when nullary), connectives become with-chains of their actions
// (top when empty), positive behaviours via duality.
LLPPtr circ(const BehaviourPtr& b);

// Roundtrip comparison: bullet(f) and bullet(circ(bullet(f))) are compared
// as name-erased behaviours: an action is identified with the tuple of
// (recursively erased) argument behaviours it carries, and the action set is
// compared as a sorted set. This forgets action/parameter names and parameter
// sharing, which is the committed reading of the translations being mutually
// inverse up to associativity/commutativity bookkeeping of the with/par
// layering.
bool erased_equal(const BehaviourPtr& a, const BehaviourPtr& b);
bool llp_roundtrip(const LLPPtr& f, Engine& eng);

// Strict sequent |- ?G, D: the ?-prefixed positives are stored stripped.
struct LLPSequent {
  std::vector<LLPPtr> qgamma;  // the P of each ?P
  LLPPtr focus;                // D; null when absent
};

// Comma-separated formula list; every `?P` goes to the ?-part, at most one
// other formula is the focus.
LLPSequent parse_llp_sequent(const std::string& text);
std::string print_llp_sequent(const LLPSequent& s);

struct LLPResult {
  enum Kind { Derivable, Underivable, OutOfFuel } kind = Underivable;
  // Derivable (translation-based prover only): a subject design for the
  // translated behaviour sequent.
  DesignPtr witness;
};

// Derivability via translation: bullet the sequent into a behaviour context
// and search the design proof system, reconstructing the subject from the
// rule choices. A positive focus is decomposed immediately and consumed by
// that step (the strict discipline); only the ?-part is reusable context.
// Fuel bounds the number of search nodes.
LLPResult prove_llp(const LLPSequent& s, Engine& eng, std::uint64_t fuel);

// Independent oracle: the three native rule schemas on formulas (enumerated
// positive subderivations, the unique negative subderivation, ?-dereliction),
// with memoized least-fixpoint search.
LLPResult prove_llp_syn_direct(const LLPSequent& s, std::uint64_t fuel);

}  // namespace ludics
