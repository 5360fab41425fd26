// Constant-only polarized linear logic: formula syntax, duality, synthetic
// decomposition, the two translations, and the pair of provers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ludics/llp.hpp"
#include "ludics/ops.hpp"
#include "ludics/print.hpp"

using namespace ludics;

TEST_CASE("formula parsing, printing, and polarity checking") {
  for (std::string text : {"1", "0", "T", "B", "1*1", "B|T", "?1|?1",
                           "!(T&B)*!?1", "1+!B*1", "?!T&?0"}) {
    LLPPtr f = parse_llp(text);
    CHECK(llp_equal(f, parse_llp(print_llp(f))));
  }
  // Binary operators are left-associative at a single precedence level.
  CHECK(llp_equal(parse_llp("1*1+0"), parse_llp("(1*1)+0")));
  // Polarity violations are syntax errors.
  CHECK_THROWS_AS(parse_llp("1&1"), Error);
  CHECK_THROWS_AS(parse_llp("B*1"), Error);
  CHECK_THROWS_AS(parse_llp("!1"), Error);
  CHECK_THROWS_AS(parse_llp("?B"), Error);
  CHECK_THROWS_AS(parse_llp(""), Error);
}

TEST_CASE("duality is an involution and swaps shapes") {
  for (std::string text : {"1", "0", "T", "B", "1*1", "?1|?1", "!(T&B)*!?1"}) {
    LLPPtr f = parse_llp(text);
    CHECK(llp_polarity(llp_dual(f)) != llp_polarity(f));
    CHECK(llp_equal(llp_dual(llp_dual(f)), f));
  }
  CHECK(print_llp(llp_dual(parse_llp("1*1"))) == "B|B");
  CHECK(print_llp(llp_dual(parse_llp("!(T&B)*!?1"))) == "?(0+1)|?!B");
}

TEST_CASE("synthetic decomposition is occurrence-based") {
  SyntheticDecomposition d = synthetic_decompose(parse_llp("?1|?1"));
  CHECK(d.pol == Polarity::Negative);
  REQUIRE(d.args.size() == 2);
  CHECK(llp_equal(d.args[0], d.args[1]));
  CHECK(d.conn->kind == LLPKind::Par);
  CHECK(d.conn->left->var != d.conn->right->var);

  SyntheticDecomposition e =
      synthetic_decompose(parse_llp("?1|(?(1*1)&?(1+1))"));
  REQUIRE(e.args.size() == 3);
  CHECK(print_llp(e.args[1]) == "1*1");

  // Units decompose to the nullary layer.
  CHECK(synthetic_decompose(parse_llp("T")).args.empty());
  CHECK(synthetic_decompose(parse_llp("1")).pol == Polarity::Positive);
}

TEST_CASE("explicit synthetic expressions can violate disjointness") {
  auto leaf = [](std::size_t v) {
    auto s = std::make_shared<Syn>();
    s->kind = LLPKind::WhyNot;
    s->var = v;
    return SynPtr(s);
  };
  auto join = [](LLPKind k, SynPtr l, SynPtr r) {
    auto s = std::make_shared<Syn>();
    s->kind = k;
    s->left = std::move(l);
    s->right = std::move(r);
    return SynPtr(s);
  };
  CHECK(syn_disjointness_violation(join(LLPKind::Par, leaf(0), leaf(1)))
            .empty());
  CHECK(!syn_disjointness_violation(join(LLPKind::Par, leaf(0), leaf(0)))
             .empty());
  // With-branches may share variables; only times/par sides must not.
  CHECK(syn_disjointness_violation(join(LLPKind::With, leaf(0), leaf(0)))
            .empty());
}

TEST_CASE("bullet maps library shapes onto the library behaviours") {
  Engine eng;
  CHECK(same_behaviour(bullet(parse_llp("B"), eng), bot()));
  CHECK(same_behaviour(bullet(parse_llp("T"), eng), top()));
  CHECK(same_behaviour(bullet(parse_llp("1"), eng), one()));
  CHECK(same_behaviour(bullet(parse_llp("0"), eng), zero()));
  CHECK(same_behaviour(bullet(parse_llp("?1"), eng), up(one())));
  // Deterministic: equal formulas give identical behaviours, including the
  // generated connective identifiers.
  LLPPtr f = parse_llp("?1|(?(1*1)&?(1+1))");
  CHECK(behaviour_key(bullet(f, eng)) == behaviour_key(bullet(f, eng)));
}

TEST_CASE("circ reads behaviours back as formulas") {
  CHECK(print_llp(circ(bot())) == "B");
  CHECK(print_llp(circ(top())) == "T");
  CHECK(print_llp(circ(one())) == "1");
  CHECK(print_llp(circ(zero())) == "0");
  CHECK(print_llp(circ(up(one()))) == "?1");
  CHECK(print_llp(circ(down(bot()))) == "!B");
}

TEST_CASE("roundtrip through the translations up to erased structure") {
  Engine eng;
  for (std::string text :
       {"1", "0", "T", "B", "?1", "!B", "?1|?1", "1*1", "B|T", "!(T&B)*!?1",
        "?1|(?(1*1)&?(1+1))", "?!B&T", "1+!(B&B)"}) {
    CAPTURE(text);
    CHECK(llp_roundtrip(parse_llp(text), eng));
  }
  // erased_equal forgets names but not structure or polarity.
  CHECK(erased_equal(up(one()), up(one())));
  CHECK(!erased_equal(up(one()), up(down(bot()))));
  CHECK(!erased_equal(one(), bot()));
}

TEST_CASE("sequent parsing splits the ?-part from the focus") {
  LLPSequent s = parse_llp_sequent("?1, B|T");
  REQUIRE(s.qgamma.size() == 1);
  CHECK(print_llp(s.qgamma[0]) == "1");
  REQUIRE(s.focus);
  CHECK(print_llp(s.focus) == "B|T");
  CHECK(print_llp_sequent(s) == "|- ?1, B|T");
  LLPSequent g = parse_llp_sequent("?1, ?(1*1)");
  CHECK(g.qgamma.size() == 2);
  CHECK(!g.focus);
  // At most one non-? formula.
  CHECK_THROWS_AS(parse_llp_sequent("1, 1"), Error);
}

TEST_CASE("both provers agree on the named sequents") {
  struct Case {
    std::string text;
    LLPResult::Kind want;
  };
  for (const Case& c : std::initializer_list<Case>{
           {"1", LLPResult::Derivable},
           {"B|T", LLPResult::Derivable},
           {"0", LLPResult::Underivable},
           {"B", LLPResult::Underivable},
           {"B|B", LLPResult::Underivable},
           {"T", LLPResult::Derivable},
           {"?1", LLPResult::Derivable},
           {"1*1", LLPResult::Derivable},
           {"?0, 1", LLPResult::Derivable},
           // The positive focus cannot be bypassed through the ?-part.
           {"?1, 0", LLPResult::Underivable},
           {"?(1*1), 0", LLPResult::Underivable},
           {"?(1*1), B|B", LLPResult::Derivable},
           {"?0", LLPResult::Underivable}}) {
    CAPTURE(c.text);
    Engine eng;
    LLPSequent s = parse_llp_sequent(c.text);
    LLPResult via = prove_llp(s, eng, 100000);
    LLPResult direct = prove_llp_syn_direct(s, 100000);
    CHECK(via.kind == c.want);
    CHECK(direct.kind == c.want);
    if (via.kind == LLPResult::Derivable) CHECK(via.witness != nullptr);
  }
}

TEST_CASE("the translation-based witness is a proof of the translation") {
  Engine eng;
  LLPSequent s = parse_llp_sequent("?(1*1), B|B");
  LLPResult r = prove_llp(s, eng, 100000);
  REQUIRE(r.kind == LLPResult::Derivable);
  CHECK(print_design(r.witness) == "{ wp(*,*) => u1|wp(*,*) }");
  CHECK(classify(r.witness, eng).is_proof());
}
