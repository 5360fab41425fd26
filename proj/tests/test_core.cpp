// Core term language: parsing, printing, canonical keys, equivalence,
// substitution, meets, the order on positives, classification, and fax.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ludics/design.hpp"
#include "ludics/ops.hpp"
#include "ludics/parse.hpp"
#include "ludics/print.hpp"

using namespace ludics;

namespace {

DesignPtr P(const std::string& text, Engine& eng) {
  return parse_design(text, eng);
}

}  // namespace

TEST_CASE("parse/print roundtrip on basic shapes") {
  for (const char* text : {
           "daimon",
           "omega",
           "x | a",
           "x | a< { b(y) => daimon } >",
           "/\\{ x|a, x|b }",
           "{ a(x, y) => x | c< y > ; b => omega }",
       }) {
    Engine eng;
    DesignPtr d = P(text, eng);
    Engine eng2;
    eng2.sig = eng.sig;
    DesignPtr back = parse_design(print_design(d), eng2);
    CHECK(canonical_key(d) == canonical_key(back));
  }
}

TEST_CASE("daimon is the empty conjunction; conj canonicalizes") {
  Engine eng;
  CHECK(is_daimon(P("daimon", eng)));
  CHECK(is_omega(P("omega", eng)));
  DesignPtr c1 = P("/\\{ x|a, x|b }", eng);
  DesignPtr c2 = P("/\\{ x|b, x|a, x|a }", eng);
  CHECK(canonical_key(c1) == canonical_key(c2));
}

TEST_CASE("variable lexical class") {
  CHECK(is_variable_token("x"));
  CHECK(is_variable_token("z0"));
  CHECK(is_variable_token("w'"));
  CHECK(!is_variable_token("a"));
  CHECK(!is_variable_token("foo"));
}

TEST_CASE("the down co-name aliases up in applications") {
  Engine eng;
  DesignPtr d = P("x | down< { up(y) => daimon } >", eng);
  const Conj* c = as_conj(d);
  REQUIRE(c);
  const Pred* p = as_pred(c->conjuncts[0]);
  REQUIRE(p);
  CHECK(p->action == "up");
  CHECK(print_design(d) == "x|down<{ up(y) => daimon }>");
}

TEST_CASE("alpha equivalence and conjunction-set equivalence") {
  Engine eng;
  CHECK(equiv(P("{ a(x) => x|b }", eng), P("{ a(y) => y|b }", eng), eng));
  CHECK(equiv(P("/\\{ x|c, x|d }", eng), P("/\\{ x|d, x|c }", eng), eng));
  CHECK(!equiv(P("{ a(x) => x|b }", eng), P("{ a(y) => daimon }", eng), eng));
}

TEST_CASE("equivalence across distinct definitions with equal unfoldings") {
  Engine eng;
  DesignPtr a = P("def f(x) = x | a< { b(y) => f(y) } >  f(z)", eng);
  DesignPtr b = P("def g(x) = x | a< { b(w) => g(w) } >  g(z)", eng);
  CHECK(equiv(a, b, eng));
  DesignPtr c = P("def h(x) = x | a< { b(y) => daimon } >  h(z)", eng);
  CHECK(!equiv(a, c, eng));
}

TEST_CASE("substitution creates cuts and avoids capture") {
  Engine eng;
  DesignPtr body = P("x | a< { b(y) => y | c } >", eng);
  DesignPtr n = P("{ a(z) => daimon }", eng);
  DesignPtr cut = substitute(body, {{"x", n}}, eng);
  CHECK(print_design(cut) == "{ a(z) => daimon }|a<{ b(y) => y|c }>");

  // The substituted design mentions y free; the binder must be renamed.
  DesignPtr outer = P("{ b(y) => x | a< y > }", eng);
  DesignPtr withy = P("{ a(z) => y | d }", eng);
  DesignPtr r = substitute(outer, {{"x", withy}}, eng);
  auto fv = free_vars(r, eng.defs);
  CHECK(fv.count("y") == 1);
  const Sum* s = as_sum(r);
  REQUIRE(s);
  // Binder renamed away from y, so the free y survives inside the branch.
  CHECK(s->branches.at("b").binders[0] != "y");
}

TEST_CASE("substitution into references specializes definitions") {
  Engine eng;
  DesignPtr d = P("def f(x) = x | a< { b(y) => f(y) } >  f(z)", eng);
  DesignPtr n = P("{ a(w) => daimon }", eng);
  DesignPtr r = substitute(d, {{"z", n}}, eng);
  CHECK(free_vars(r, eng.defs).empty());
  validate_defs(eng.defs);
}

TEST_CASE("meet on positives is conjunction union") {
  Engine eng;
  DesignPtr a = P("x|a", eng), b = P("x|b", eng);
  CHECK(print_design(meet(a, b, eng)) == "/\\{ x|a, x|b }");
  CHECK(equiv(meet(a, daimon(), eng), a, eng));
  CHECK(is_omega(meet(a, omega(), eng)));
  CHECK(is_daimon(big_meet({}, eng)));
}

TEST_CASE("meet on negatives is branchwise with absent branches as Omega") {
  Engine eng;
  // Disjoint branch sets: both components meet with Omega, so nothing
  // survives (partial-sum convention).
  DesignPtr m = meet(P("{ a(x) => x|c }", eng), P("{ b(x) => daimon }", eng), eng);
  const Sum* s = as_sum(m);
  REQUIRE(s);
  CHECK(s->branches.empty());
  // Shared branch: bodies meet; the daimon body is neutral.
  DesignPtr mm = meet(P("{ a(x) => x|c ; k => daimon }", eng),
                      P("{ a(y) => y|d ; k => daimon }", eng), eng);
  const Sum* s2 = as_sum(mm);
  REQUIRE(s2);
  CHECK(s2->branches.size() == 2);
  CHECK(print_design(mm) == "{ a(x) => /\\{ x|c, x|d }; k => daimon }");
  CHECK_THROWS_AS(meet(P("x", eng), P("{ a(y) => daimon }", eng), eng), Error);
}

TEST_CASE("the order on positives") {
  Engine eng;
  DesignPtr a = P("x|a", eng), ab = P("/\\{ x|a, x|b }", eng);
  CHECK(leq(omega(), a, eng));
  CHECK(leq(a, daimon(), eng));
  CHECK(leq(ab, a, eng));
  CHECK(!leq(a, ab, eng));
  CHECK(leq(a, a, eng));
}

TEST_CASE("classification flags") {
  {
    // Daimon is a model (empty conjunction) but not a proof: proofs have
    // strictly unary conjunctions.
    Engine e;
    Classification d = classify(P("daimon", e), e);
    CHECK(d.total);
    CHECK(d.cut_free);
    CHECK(d.is_model());
    CHECK(!d.is_proof());
    CHECK(d.cardinality == std::uint64_t{0});
  }
  {
    Engine e;
    CHECK(!classify(P("omega", e), e).total);
  }
  {
    Engine e;
    CHECK(!classify(P("{ a(x) => daimon } | a< y >", e), e).cut_free);
  }
  {
    // Nonlinear: y used twice in one positive scope. A bare variable
    // argument is an identity, so it is additionally not identity-free.
    Engine e;
    CHECK(!classify(P("x | a< y, y >", e), e).linear);
    CHECK(!classify(P("x | a< y, y >", e), e).identity_free);
    Engine e2;
    Classification nl =
        classify(P("x | a< { b(z) => y|c }, { b(w) => y|d } >", e2), e2);
    CHECK(!nl.linear);
    CHECK(nl.is_proof());
  }
  {
    // Infinite unfolding has no finite cardinality.
    Engine e;
    Classification inf =
        classify(P("def f(x) = x | a< { b(y) => f(y) } >  f(z)", e), e);
    CHECK(!inf.cardinality.has_value());
    CHECK(inf.total);
  }
}

TEST_CASE("design_size counts applications and branches") {
  Engine e1, e2, e3;
  CHECK(design_size(P("daimon", e1)) == 0);
  CHECK(design_size(P("x|a", e2)) == 1);
  CHECK(design_size(P("x | a< { b(y) => daimon } >", e3)) == 2);
}

TEST_CASE("fax is total, cut-free, and defined over the whole signature") {
  Engine eng;
  eng.sig.declare("a", 2);
  eng.sig.declare("b", 0);
  DesignPtr f = fax(eng, "x");
  validate_defs(eng.defs);
  Classification c = classify(f, eng);
  CHECK(c.total);
  CHECK(c.cut_free);
  CHECK(!c.cardinality.has_value());
  auto fv = free_vars(f, eng.defs);
  CHECK(fv == std::set<Var>{"x"});

  Engine sch;
  sch.sig.declare("a", 1);
  sch.sig.schematic = true;
  CHECK_THROWS_AS(fax(sch, "x"), Error);
}

TEST_CASE("defsystem validation rejects unguarded recursion") {
  DefSystem defs;
  defs.add("l", {{"x"}, conj({pred(var("x"), "a", {})})});
  CHECK_NOTHROW(validate_defs(defs));
  DefSystem bad;
  bad.add("u", {{"x"}, ref("u", {"x"})});
  CHECK_THROWS_AS(validate_defs(bad), Error);
}

TEST_CASE("flatten_positive unfolds reference conjuncts") {
  Engine eng;
  DesignPtr d = P("def f(x) = x | a  /\\{ f(z), z|b }", eng);
  auto parts = flatten_positive(d, eng);
  REQUIRE(parts.has_value());
  CHECK(parts->size() == 2);
  CHECK(!flatten_positive(omega(), eng).has_value());
}

TEST_CASE("parser rejects reserved spellings") {
  Engine eng;
  CHECK_THROWS_AS(P("x | a< $y >", eng), Error);
  CHECK_THROWS_AS(P("{ down(x) => daimon }", eng), Error);
  CHECK_THROWS_AS(P("...", eng), Error);
}

TEST_CASE("signature declarations are enforced when present") {
  Engine eng;
  CHECK_THROWS_AS(P("sig { a/1 }  x | b", eng), Error);
  Engine eng2;
  CHECK_THROWS_AS(P("sig { a/1 }  x | a< y, z >", eng2), Error);
  Engine eng3;
  CHECK_NOTHROW(P("sig { a/1 }  x | a< y >", eng3));
}
