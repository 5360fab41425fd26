#pragma once

// Core algebra on designs: equivalence, substitution, the meet operations,
// the <= order on positives, structural classification, and the fax design.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ludics/design.hpp"

namespace ludics {

// Design equivalence: hereditary alpha-equivalence with conjunction-set
// matching in both directions, decided as a coinductive bisimulation over
// reference-unfolding states with a visited set of renamed state pairs.
bool equiv(const DesignPtr& a, const DesignPtr& b, Engine& eng);

// Simultaneous capture-free substitution of negative designs for variables.
// References are specialized: binding a parameter to a non-variable creates
// a memoized derived definition in the engine.
DesignPtr substitute(const DesignPtr& d, const std::map<Var, DesignPtr>& bindings,
                     Engine& eng);

// Meet of two designs of the same polarity: conjunction-union on positives
// (Omega absorbing, daimon neutral), branchwise on abstractions. Meet with a
// bare variable is an error.
DesignPtr meet(const DesignPtr& p, const DesignPtr& q, Engine& eng);

// Meet of a finite set; the empty meet of positives is the daimon. An empty
// set of abstractions has no canonical polarity here and is an error (the
// callers that need the negative daimon build it explicitly).
DesignPtr big_meet(const std::vector<DesignPtr>& xs, Engine& eng);

// p <= q iff p = Omega, or both are conjunctions and every conjunct of q is
// (up to equiv) a conjunct of p. Omega <= P <= daimon.
bool leq(const DesignPtr& p, const DesignPtr& q, Engine& eng);

struct Classification {
  bool total = false;
  bool closed = false;
  bool linear = false;
  bool deterministic = false;
  bool cut_free = false;
  bool identity_free = false;
  bool unary_conjunctions = false;
  // Count of positive-action occurrences in the unfolding; nullopt = infinite.
  std::optional<std::uint64_t> cardinality;

  bool standard() const { return total && cut_free && identity_free; }
  bool is_proof() const { return standard() && unary_conjunctions; }
  bool is_model() const { return standard() && linear; }
};

// All flags are computed on the unfolding graph: a property fails iff some
// reachable node violates it.
Classification classify(const DesignPtr& d, Engine& eng);

// Syntactic size: number of applications plus abstraction branches, without
// unfolding references (each reference counts 1). Used for deterministic
// enumeration order.
std::size_t design_size(const DesignPtr& d);

// The infinitary eta-expansion of a variable over the engine's signature:
//   eta(x) = Sum a(y1..yn). x|a<eta(y1)..eta(yn)>
// Registers one definition and returns the reference applied to x.
DesignPtr fax(Engine& eng, const Var& x);

}  // namespace ludics
