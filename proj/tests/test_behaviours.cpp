// Connectives, logical behaviours, duality, printing/parsing, member
// enumeration, exact membership for proofs, and sampled entailment.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ludics/behaviour.hpp"
#include "ludics/ops.hpp"
#include "ludics/parse.hpp"
#include "ludics/print.hpp"

using namespace ludics;

namespace {

DesignPtr P(const std::string& text, Engine& eng) {
  return parse_design(text, eng);
}

bool contains_design(const std::vector<DesignPtr>& xs, const std::string& text,
                     Engine& eng) {
  DesignPtr want = P(text, eng);
  return std::any_of(xs.begin(), xs.end(), [&](const DesignPtr& d) {
    return equiv(d, want, eng);
  });
}

}  // namespace

TEST_CASE("connective validation") {
  CHECK_NOTHROW(make_connective("c", {"x1", "x2"},
                                {{"a", {"x1"}}, {"b", {"x1", "x2"}}}));
  // Duplicate parameters.
  CHECK_THROWS_AS(make_connective("c", {"x1", "x1"}, {}), Error);
  // Action variable outside the parameters.
  CHECK_THROWS_AS(make_connective("c", {"x1"}, {{"a", {"x2"}}}), Error);
  // Repeated action variable.
  CHECK_THROWS_AS(make_connective("c", {"x1"}, {{"a", {"x1", "x1"}}}), Error);
}

TEST_CASE("dual is an involution and flips the polarity") {
  BehaviourPtr b = down(up(one()));
  CHECK(b->pol == Polarity::Positive);
  BehaviourPtr d = dual(b);
  CHECK(d->pol == Polarity::Negative);
  CHECK(same_behaviour(dual(d), b));
  CHECK(behaviour_key(b) != behaviour_key(d));
  CHECK(same_behaviour(dual(one()), bot()));
  CHECK(same_behaviour(dual(zero()), top()));
  CHECK(same_behaviour(dual(tensor(up(one()), up(zero()))),
                       par(down(bot()), down(top()))));
  CHECK(same_behaviour(dual(plus(up(one()), up(one()))),
                       with_(down(bot()), down(bot()))));
}

TEST_CASE("behaviour printing uses the library sugar and parses back") {
  for (BehaviourPtr b : {one(), zero(), down(up(one())),
                         tensor(up(one()), up(zero())),
                         plus(up(one()), up(zero()))}) {
    ConnectiveTable table;
    BehaviourPtr back = parse_behaviour(print_behaviour(b), table);
    CHECK(same_behaviour(b, back));
    BehaviourPtr dback = parse_behaviour(print_behaviour(dual(b)), table);
    CHECK(same_behaviour(dual(b), dback));
  }
  CHECK(print_behaviour(down(up(one()))) == "down(up(one))");
  CHECK(print_behaviour(dual(down(up(one())))) == "up(down(bot))");
}

TEST_CASE("user connectives print as declarations and parse back") {
  Connective c = make_connective("tri", {"x1", "x2"},
                                 {{"a", {"x1", "x2"}}, {"b", {}}});
  BehaviourPtr b =
      behaviour(Polarity::Negative, c, {one(), down(up(one()))});
  std::string decl = print_connective(c);
  ConnectiveTable table;
  BehaviourPtr back = parse_behaviour(decl + "\n" + print_behaviour(b), table);
  CHECK(same_behaviour(b, back));
  std::map<std::string, Connective> found;
  collect_connectives(b, found);
  CHECK(found.count("tri") == 1);
}

TEST_CASE("contexts parse with an optional trailing negative") {
  ConnectiveTable table;
  Context c1 = parse_context("x : one, y : down(up(one))", table);
  CHECK(!c1.is_negative());
  CHECK(c1.positives.size() == 2);
  Context c2 = parse_context("x : one, up(one)", table);
  CHECK(c2.is_negative());
  CHECK(same_behaviour(c2.negative, up(one())));
}

TEST_CASE("ethics members of the units") {
  Engine eng;
  auto ms = ethics_members(one(), eng, 8);
  REQUIRE(ms.size() == 1);
  CHECK(print_design(ms[0]) == "x0|*");
  CHECK(ethics_members(zero(), eng, 8).empty());
}

TEST_CASE("ethics members of down(up(one))") {
  Engine eng;
  auto ms = ethics_members(down(up(one())), eng, 8);
  CHECK(ms.size() == 2);
  CHECK(contains_design(ms, "x0 | down< { up(x) => daimon } >", eng));
  CHECK(contains_design(ms, "x0 | down< { up(x) => x|* } >", eng));
  // All enumerated members are models or proofs, linear in x0.
  for (auto& m : ms) {
    Classification c = classify(m, eng);
    CHECK(c.standard());
    CHECK(free_vars(m, eng.defs) == std::set<Var>{"x0"});
  }
}

TEST_CASE("negative members include proofs and model variants") {
  Engine eng;
  auto ms = members_negative(up(one()), eng, 8);
  CHECK(contains_design(ms, "{ up(x) => x|* }", eng));
  CHECK(contains_design(ms, "{ up(x) => daimon }", eng));
  for (auto& m : ms) CHECK(classify(m, eng).is_model());
}

TEST_CASE("member_negative is exact for proofs") {
  Engine eng;
  CHECK(member_negative(P("{ up(y) => y|* }", eng), up(one()), eng, 1000));
  // Body stuck at a name outside the connective of one.
  CHECK(!member_negative(P("{ up(y) => y|b }", eng), up(one()), eng, 1000));
  // Branches at foreign names are ignored.
  CHECK(member_negative(P("{ up(y) => y|* ; c(w) => w|b }", eng), up(one()),
                        eng, 1000));
  // Not a proof: daimon bodies have a non-unary conjunction.
  CHECK_THROWS_AS(
      member_negative(P("{ up(y) => daimon }", eng), up(one()), eng, 1000),
      Error);
}

TEST_CASE("sampled entailment certifies refutations") {
  Engine eng;
  ConnectiveTable table;
  Context ctx = parse_context("x0 : down(up(one))", table);
  EntailReport good = entails_sampled(
      P("x0 | down< { up(y) => daimon } >", eng), ctx, eng, 10000, 10);
  CHECK(good.verdict == Verdict::Daimon);
  CHECK(good.samples_run == 10);
  EntailReport bad =
      entails_sampled(P("x0 | b", eng), ctx, eng, 10000, 10);
  CHECK(bad.verdict == Verdict::Omega);
  CHECK(!bad.failure.empty());
}

TEST_CASE("declare_behaviour_names covers derived action names") {
  Signature sig;
  declare_behaviour_names(par(down(bot()), down(top())), sig);
  CHECK(sig.arity(wp_name("up", "up")).has_value());
  CHECK(sig.arity("up") == 1);
}
