#pragma once

// Logical connectives and logical behaviours.
//
// A connective is a vector of placeholder variables plus a finite set of
// name-distinct negative actions over those placeholders. Every behaviour
// here is logical: a finite alternating tree of connectives. A positive
// behaviour over connective alpha is the biorthogonal closure of its ethics
// {x0|a<N..> : a in alpha0, N in the argument behaviours}; the negative
// behaviour is its dual. Membership is exact for proofs (via proof search)
// and evidential for models (via sampled orthogonality).

#include <cstdint>
#include <memory>

#include "ludics/design.hpp"
#include "ludics/normalize.hpp"

namespace ludics {

struct Connective {
  // Display/registry identifier ("par", "with", "up", "bot", "top", or a
  // user-declared name).
  std::string cname;
  std::vector<Var> params;
  // Action name -> its variables, a duplicate-free subvector of params.
  std::map<Name, std::vector<Var>> actions;

  std::size_t arity() const { return params.size(); }
  // Placeholder indices i_1..i_m of action a's variables within params.
  std::vector<std::size_t> indices(const Name& a) const;
};

// Validates the connective conditions: distinct params, action variables
// drawn from params without repetition, distinct action names.
Connective make_connective(std::string cname, std::vector<Var> params,
                           std::map<Name, std::vector<Var>> actions);

struct Behaviour;
using BehaviourPtr = std::shared_ptr<const Behaviour>;

// A behaviour stores arguments of the *opposite* polarity: a positive
// behaviour alpha<N1..Nn> holds negative arguments, a negative behaviour
// alpha(P1..Pn) holds positive ones. dual() flips the polarity and duals
// every argument, so dual(dual(b)) is structurally equal to b.
struct Behaviour {
  Polarity pol;
  Connective conn;
  std::vector<BehaviourPtr> args;
};

BehaviourPtr behaviour(Polarity pol, Connective conn, std::vector<BehaviourPtr> args);
BehaviourPtr dual(const BehaviourPtr& b);

// Canonical fingerprint; equal keys iff structurally equal behaviours.
std::string behaviour_key(const BehaviourPtr& b);
bool same_behaviour(const BehaviourPtr& a, const BehaviourPtr& b);

// Text in the behaviour grammar (library connectives printed via their
// sugar: one/zero/bot/top/up/down/par/with/tensor/plus).
std::string print_behaviour(const BehaviourPtr& b);

// The linear-logic connective table.
const Connective& conn_par();   // (x1, x2, {wp(x1,x2)})
const Connective& conn_with();  // (x1, x2, {pi1(x1), pi2(x2)})
const Connective& conn_up();    // (x, {up(x)})
const Connective& conn_bot();   // (eps, {*})
const Connective& conn_top();   // (eps, {})

// Library behaviours.
BehaviourPtr one();
BehaviourPtr bot();
BehaviourPtr zero();
BehaviourPtr top();
BehaviourPtr down(BehaviourPtr n);                  // positive, negative arg
BehaviourPtr up(BehaviourPtr p);                    // negative, positive arg
BehaviourPtr tensor(BehaviourPtr n, BehaviourPtr m);  // positive
BehaviourPtr par(BehaviourPtr p, BehaviourPtr q);     // negative
BehaviourPtr plus(BehaviourPtr n, BehaviourPtr m);    // positive
BehaviourPtr with_(BehaviourPtr p, BehaviourPtr q);   // negative

// Declares every action name reachable in b into the signature.
void declare_behaviour_names(const BehaviourPtr& b, Signature& sig);

// "conn name(params) { a(x, y) b }" — declaration form for user connectives.
std::string print_connective(const Connective& c);

// Collects the non-library connectives reachable in b, keyed by cname.
void collect_connectives(const BehaviourPtr& b,
                         std::map<std::string, Connective>& out);

// A positive context assigns positive behaviours to distinct variables; a
// negative context adds one negative behaviour with no variable.
struct Context {
  std::vector<std::pair<Var, BehaviourPtr>> positives;
  BehaviourPtr negative;  // null for positive contexts

  bool is_negative() const { return negative != nullptr; }
};

// Named user connectives available to the behaviour parser.
using ConnectiveTable = std::map<std::string, Connective>;

// Behaviour grammar:
//   conn  := "conn" IDENT "(" vars? ")" "{" (NAME "(" vars? ")")* "}"
//   bpos  := "pos" IDENT "<" (bneg ("," bneg)*)? ">" | "one" | "zero"
//          | "down" "(" bneg ")" | "tensor" "(" bneg "," bneg ")"
//          | "plus" "(" bneg "," bneg ")"
//   bneg  := "neg" IDENT "(" (bpos ("," bpos)*)? ")" | "bot" | "top"
//          | "up" "(" bpos ")" | "par" "(" bpos "," bpos ")"
//          | "with" "(" bpos "," bpos ")"
// Context files: `x:BPOS, y:BPOS [, BNEG]` after any conn declarations.
BehaviourPtr parse_behaviour(const std::string& text, ConnectiveTable& table);
Context parse_context(const std::string& text, ConnectiveTable& table);

// Enumerated members of a positive behaviour's ethics: x0|a<N1..Nm> with the
// N_i drawn from enumerated members of the argument behaviours, total design
// size bounded by `size`. Deterministic order: (size, canonical key).
std::vector<DesignPtr> ethics_members(const BehaviourPtr& b, Engine& eng,
                                      std::size_t size);

// Enumerated members of a negative behaviour used as counter-designs:
// enumerated proofs of |- b plus model variants (the all-daimon sum over
// b's actions, and meets of pairs).
std::vector<DesignPtr> members_negative(const BehaviourPtr& b, Engine& eng,
                                        std::size_t size);

// Exact membership for proofs, via the proof system: every action a(x..) of
// b's connective must have a derivable branch body in the context formed by
// the corresponding argument behaviours. Branches at foreign names are
// ignored. Throws if n is not a proof.
bool member_negative(const DesignPtr& n, const BehaviourPtr& b, Engine& eng,
                     std::uint64_t fuel);

struct EntailReport {
  Verdict verdict = Verdict::Unknown;  // Daimon: all samples converged
  std::size_t samples_run = 0;
  std::string failure;  // description of the first refuting sample
};

// Sampled semantical entailment d |= ctx: draws counter-design tuples from
// the duals of the context behaviours and evaluates the closed interactions.
// A refutation (Omega) is definitive; success is evidence only.
EntailReport entails_sampled(const DesignPtr& d, const Context& ctx, Engine& eng,
                             std::uint64_t fuel, std::size_t samples);

}  // namespace ludics
