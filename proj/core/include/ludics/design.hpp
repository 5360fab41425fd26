#pragma once

// Designs: the common term language subsuming proofs and models.
//
// Positive designs are Omega, conjunctions of predesigns (the empty
// conjunction is the daimon), or references into a definition system.
// Negative designs are variables, named sums of abstractions, or references.
// Infinite designs are represented exclusively by guarded finite definition
// systems; unfolding a reference is always productive.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ludics {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(col)),
        line(line), col(col) {}
  int line;
  int col;
};

using Var = std::string;
using Name = std::string;

// Variables generated internally start with this prefix; the parser rejects
// it in user input, so capture-avoiding renaming can never collide.
inline constexpr char kFreshPrefix = '$';

// The interaction variable of orthogonality; never usable as a name.
inline const Var kInteractionVar = "x0";

// True for identifiers in the variable lexical class: first char in [t-z],
// remaining chars digits, primes, or underscores (x, y, z0, w', t1).
bool is_variable_token(const std::string& s);

// Derived-name constructors; canonical structured spellings.
Name pi1_name(const Name& a);
Name pi2_name(const Name& a);
Name wp_name(const Name& a, const Name& b);

class Signature {
public:
  void declare(const Name& name, int arity);
  // Resolves declared atoms and the derived forms pi1(a), pi2(a), wp(a,b).
  std::optional<int> arity(const Name& name) const;
  const std::map<Name, int>& atoms() const { return atoms_; }
  bool declared(const Name& name) const { return atoms_.count(name) != 0; }

  // A schematic signature stands for an infinite family of names; only the
  // finitely many names actually mentioned are materialized. Operations that
  // must range over *all* names (fax) refuse schematic signatures.
  bool schematic = false;

private:
  std::map<Name, int> atoms_;
};

struct Design;
using DesignPtr = std::shared_ptr<const Design>;

struct Omega {};

// A conjunction of predesigns; empty = daimon. Elements are Pred nodes or
// positive Refs, kept sorted by canonical key with duplicates removed.
struct Conj {
  std::vector<DesignPtr> conjuncts;
};

// N0|a<N1..Nn>: a cut when the head is an abstraction, a head normal form
// when the head is a variable. Appears only as a Conj element.
struct Pred {
  DesignPtr head;
  Name action;
  std::vector<DesignPtr> args;
};

struct VarRef {
  Var var;
};

struct SumBranch {
  std::vector<Var> binders;
  DesignPtr body;  // positive
};

// Named sum of abstractions; names absent from the map are the Omega
// component (partial-sum convention).
struct Sum {
  std::map<Name, SumBranch> branches;
};

// Reference into the enclosing DefSystem; arguments are variables only.
struct Ref {
  std::string def;
  std::vector<Var> args;
};

// Truncation marker used in normal forms when the depth or fuel bound is hit.
struct Hole {};

struct Design {
  std::variant<Omega, Conj, Pred, VarRef, Sum, Ref, Hole> node;
  // Lazily computed canonical fingerprint (closed-environment form).
  mutable std::string key_cache;
};

// Node constructors. conj() canonicalizes (sorts by key, deduplicates).
DesignPtr omega();
DesignPtr daimon();
DesignPtr conj(std::vector<DesignPtr> parts);
DesignPtr pred(DesignPtr head, Name action, std::vector<DesignPtr> args);
DesignPtr pred1(DesignPtr head, Name action, std::vector<DesignPtr> args);
DesignPtr var(Var v);
DesignPtr sum(std::map<Name, SumBranch> branches);
DesignPtr ref(std::string def, std::vector<Var> args);
DesignPtr hole();

inline const Conj* as_conj(const DesignPtr& d) { return std::get_if<Conj>(&d->node); }
inline const Pred* as_pred(const DesignPtr& d) { return std::get_if<Pred>(&d->node); }
inline const VarRef* as_var(const DesignPtr& d) { return std::get_if<VarRef>(&d->node); }
inline const Sum* as_sum(const DesignPtr& d) { return std::get_if<Sum>(&d->node); }
inline const Ref* as_ref(const DesignPtr& d) { return std::get_if<Ref>(&d->node); }
inline bool is_omega(const DesignPtr& d) { return std::holds_alternative<Omega>(d->node); }
inline bool is_hole(const DesignPtr& d) { return std::holds_alternative<Hole>(d->node); }
inline bool is_daimon(const DesignPtr& d) {
  auto* c = as_conj(d);
  return c && c->conjuncts.empty();
}

struct Definition {
  std::vector<Var> params;
  DesignPtr body;
};

class DefSystem {
public:
  void add(const std::string& name, Definition def);
  void set_body(const std::string& name, DesignPtr body);
  const Definition* find(const std::string& name) const;
  const Definition& at(const std::string& name) const;
  const std::map<std::string, Definition>& all() const { return defs_; }
  bool empty() const { return defs_.empty(); }

private:
  std::map<std::string, Definition> defs_;
};

// Polarity of a design node, resolving references through the definitions.
enum class Polarity { Positive, Negative };
Polarity polarity(const DesignPtr& d, const DefSystem& defs);
inline bool is_positive(const DesignPtr& d, const DefSystem& defs) {
  return polarity(d, defs) == Polarity::Positive;
}
inline bool is_negative(const DesignPtr& d, const DefSystem& defs) {
  return polarity(d, defs) == Polarity::Negative;
}

// The engine context owns the signature, the definition system, the fresh
// variable generator, and the specialization memo. All design values are
// immutable; this is the only mutable state. Distinct engines are fully
// independent; a single engine is not meant to be shared across threads.
class Engine {
public:
  Signature sig;
  DefSystem defs;

  Var fresh_var();
  std::string fresh_def(const std::string& base);

  // Memo for Ref specialization under substitution:
  // (definition, binding fingerprint) -> derived definition name.
  std::map<std::string, std::string> spec_memo;

private:
  long counter_ = 0;
};

// Free variables; Ref free variables are the argument variables actually
// used by the (transitively unfolded) body.
std::set<Var> free_vars(const DesignPtr& d, const DefSystem& defs);

// Which parameter positions of a definition are used in its unfolding.
std::vector<bool> used_params(const std::string& def, const DefSystem& defs);

// One-step unfolding of a Ref node (capture-avoiding parameter renaming).
DesignPtr unfold(const DesignPtr& refNode, Engine& eng);

// Checks the DefSystem invariants: free variables of bodies among parameters,
// references resolved with matching argument counts, and guardedness (every
// cyclic reference path crosses an action). Throws Error on violation.
void validate_defs(const DefSystem& defs);

// Well-formedness of a design against the engine's signature and definitions.
void validate(const DesignPtr& d, const Engine& eng);

// Canonical structural fingerprint: alpha-normalized (de Bruijn numbering of
// binders), conjunction-canonicalized. Equal keys imply design equivalence;
// references are compared by identity, so the converse may fail across
// distinct definitions with equal unfoldings (equiv handles those).
const std::string& canonical_key(const DesignPtr& d);

// Flattens a positive design to its conjunct predesigns, unfolding positive
// references (including reference conjuncts); nullopt means the design is,
// or unfolds to, Omega.
std::optional<std::vector<DesignPtr>> flatten_positive(const DesignPtr& d, Engine& eng);

// Negative daimon over a set of actions: every listed action maps to daimon.
DesignPtr daimon_minus(const std::map<Name, int>& actions, Engine& eng);

}  // namespace ludics
