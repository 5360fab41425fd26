// Reduction steps (golden), closed evaluation with divergence certificates,
// normal forms, orthogonality, and the tree-automaton spot checks.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "automaton.hpp"
#include "ludics/normalize.hpp"
#include "ludics/ops.hpp"
#include "ludics/parse.hpp"
#include "ludics/print.hpp"

using namespace ludics;

namespace {

DesignPtr P(const std::string& text, Engine& eng) {
  return parse_design(text, eng);
}

std::vector<std::string> step_prints(const DesignPtr& d, Engine& eng) {
  std::vector<std::string> out;
  for (auto& [cut, succ] : step(d, eng)) out.push_back(print_design(succ));
  return out;
}

}  // namespace

TEST_CASE("reduction golden: converging cut") {
  Engine eng;
  DesignPtr d = P("{ a(x) => daimon } | a< { c(y) => daimon } >", eng);
  CHECK(step_prints(d, eng) == std::vector<std::string>{"daimon"});
}

TEST_CASE("reduction golden: mismatched name hits the Omega component") {
  Engine eng;
  DesignPtr d = P("{ b(x) => daimon } | a< { c(y) => daimon } >", eng);
  CHECK(step_prints(d, eng) == std::vector<std::string>{"omega"});
}

TEST_CASE("reduction golden: a conjunction reduces per cut conjunct") {
  Engine eng;
  DesignPtr d = P(
      "/\\{ { a(x) => daimon } | a< { c(y) => daimon } >,"
      "     { b(x) => daimon } | a< { c(y) => daimon } > }",
      eng);
  auto succs = step_prints(d, eng);
  std::sort(succs.begin(), succs.end());
  CHECK(succs == std::vector<std::string>{"daimon", "omega"});
  CHECK(evaluate_closed(d, eng, 100).verdict == Verdict::Omega);
}

TEST_CASE("reduction golden: the self-application loop") {
  Engine eng;
  // N = a(x). x|a<x>;  P = N|a<N> reduces to itself forever.
  DesignPtr d = P("{ a(x) => x | a< x > } | a< { a(x) => x | a< x > } >", eng);
  auto succs = step_prints(d, eng);
  REQUIRE(succs.size() == 1);
  CHECK(succs[0] == print_design(d));
  EvalOutcome out = evaluate_closed(d, eng, 100);
  CHECK(out.verdict == Verdict::Omega);
  CHECK(out.cycle);
  CHECK(out.explored <= 3);
}

TEST_CASE("reduction golden: cut under a conjunction with a spectator") {
  Engine eng;
  // P = (a(y). (y|b<w> /\ z|c<M>)) | a< b(t).Q >  with M = y and Q = daimon.
  DesignPtr d = P(
      "{ a(y) => /\\{ y | b< w >, z | c< y > } } | a< { b(t) => daimon } >",
      eng);
  auto s1 = step_prints(d, eng);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0] == "/\\{ { b(t) => daimon }|b<w>, z|c<{ b(t) => daimon }> }");
  // The inner cut fires next and drops the head-normal-form spectator.
  DesignPtr next = step(d, eng)[0].second;
  CHECK(step_prints(next, eng) == std::vector<std::string>{"daimon"});
}

TEST_CASE("daimon and Omega are inert") {
  Engine eng;
  CHECK(step(daimon(), eng).empty());
  CHECK(step(omega(), eng).empty());
  CHECK(evaluate_closed(daimon(), eng, 10).verdict == Verdict::Daimon);
  CHECK(evaluate_closed(omega(), eng, 10).verdict == Verdict::Omega);
}

TEST_CASE("evaluation reports Unknown when fuel runs out") {
  Engine eng;
  // Needs two explored states to converge; one unit of fuel is not enough.
  DesignPtr d = P(
      "{ a(x) => { a(y) => daimon } | a< x > } | a< { c(w) => daimon } >",
      eng);
  CHECK(evaluate_closed(d, eng, 1).verdict == Verdict::Unknown);
  CHECK(evaluate_closed(d, eng, 100).verdict == Verdict::Daimon);
}

TEST_CASE("normal form clauses") {
  Engine eng;
  CHECK(print_design(normal_form(P("x", eng), eng, 100, 8)) == "x");
  DesignPtr s = P("{ a(x) => { b(y) => daimon } | b< x > }", eng);
  DesignPtr nf = normal_form(s, eng, 1000, 8);
  CHECK(print_design(nf) == "{ a(x) => daimon }");
  // Divergent positions become Omega.
  DesignPtr loop = P(
      "{ c => { a(x) => x | a< x > } | a< { a(x) => x | a< x > } > }", eng);
  CHECK(print_design(normal_form(loop, eng, 1000, 8)) == "{ c => omega }");
}

TEST_CASE("normal form truncates at the depth bound with holes") {
  Engine eng;
  DesignPtr d = P("def f(x) = x | a< { b(y) => f(y) } >  f(z)", eng);
  DesignPtr nf = normal_form(d, eng, 10000, 2);
  std::string text = print_design(nf);
  CHECK(text.find("...") != std::string::npos);
}

TEST_CASE("orthogonality examples at down/up") {
  Engine eng;
  DesignPtr p = P("x0 | down< { up(y) => daimon } >", eng);
  CHECK(orthogonal(p, P("{ up(z) => daimon }", eng), eng, 100).verdict ==
        Verdict::Daimon);
  CHECK(orthogonal(p, P("{ up(z) => z | down< { up(w) => daimon } > }", eng),
                   eng, 100)
            .verdict == Verdict::Daimon);
  CHECK(orthogonal(p, P("{}", eng), eng, 100).verdict == Verdict::Omega);
  // Non-atomic inputs are rejected.
  CHECK_THROWS_AS(orthogonal(P("x1 | down< { up(y) => daimon } >", eng),
                             P("{ up(z) => daimon }", eng), eng, 100),
                  Error);
}

TEST_CASE("automaton accepts the chain family and rejects others") {
  using namespace testutil;
  Engine eng;
  TreePtr b = leaf('b');
  TreePtr abb = node('a', b, b);
  TreePtr ababb = node('a', b, abb);
  for (auto& t : {b, abb, ababb}) {
    CHECK(evaluate_closed(automaton_run(t, eng), eng, 100000).verdict ==
          Verdict::Daimon);
  }
  std::vector<TreePtr> rejected = {
      eps_tree(),
      leaf('a'),
      node('b', leaf('a'), leaf('a')),
      node('a', leaf('a'), leaf('b')),
      node('a', abb, b),
      node('b', b, abb),
  };
  for (auto& t : rejected) {
    CAPTURE(tree_text(t));
    CHECK(evaluate_closed(automaton_run(t, eng), eng, 100000).verdict ==
          Verdict::Omega);
  }
}
