#pragma once

// Reduction, closed evaluation with divergence detection, normal forms, and
// orthogonality.
//
// Normalization is universally nondeterministic: a closed positive design
// evaluates to daimon only if every maximal reduction path ends in daimon.
// A reachable Omega, or a revisited canonical state (an infinite reduction
// sequence), certifies divergence. Fuel bounds make this a semi-decision
// procedure; Unknown is never silently coerced.

#include <cstdint>
#include <utility>
#include <vector>

#include "ludics/design.hpp"

namespace ludics {

enum class Verdict { Daimon, Omega, Unknown };

struct EvalOutcome {
  Verdict verdict = Verdict::Unknown;
  // Daimon: the exhaustively explored reduction DAG over canonical states.
  std::map<std::string, std::vector<std::string>> dag;
  // Omega: root-to-evidence path of canonical states; 'cycle' tells whether
  // the evidence is a revisited state (else an Omega redex).
  std::vector<std::string> path;
  bool cycle = false;
  std::uint64_t explored = 0;
};

// One reduction step per cut conjunct: pairs (conjunct, successor design).
// Head-normal-form conjuncts produce no successor; step(Omega) = step(daimon)
// = {}.
std::vector<std::pair<DesignPtr, DesignPtr>> step(const DesignPtr& p, Engine& eng);

EvalOutcome evaluate_closed(const DesignPtr& p, Engine& eng, std::uint64_t fuel);

// Cut-free normal form down to `depth` action levels; holes ("...") mark
// positions truncated by the depth bound or by fuel exhaustion, Omega marks
// certified divergence.
DesignPtr normal_form(const DesignPtr& d, Engine& eng, std::uint64_t fuel,
                      int depth);

// evaluate_closed(p[n/x0]); p must be atomic positive (standard, fv within
// {x0}), n atomic negative (standard, closed).
EvalOutcome orthogonal(const DesignPtr& p, const DesignPtr& n, Engine& eng,
                       std::uint64_t fuel);

}  // namespace ludics
