#pragma once

// Recursive-descent parser for the design grammar, shared by the design,
// behaviour, and sequent file parsers (which drive it for embedded design
// fragments and sig/def declarations).

#include "ludics/ops.hpp"
#include "lexer.hpp"

namespace ludics::internal {

inline bool is_design_keyword(const std::string& s) {
  return s == "sig" || s == "def" || s == "omega" || s == "daimon";
}

class DesignParser {
public:
  DesignParser(Lexer& lx, Engine& eng) : lx_(lx), eng_(eng) {}

  std::optional<DesignPtr> file() {
    if (lx_.at(Tok::Ident) && lx_.peek().text == "sig") sigdecl();
    while (lx_.at(Tok::Ident) && lx_.peek().text == "def") definition();
    std::optional<DesignPtr> expr;
    if (!lx_.at(Tok::End)) expr = any();
    lx_.expect(Tok::End, "end of input");
    validate_all();
    if (expr) validate(*expr, eng_);
    return expr;
  }

  void sigdecl() {
    lx_.next();  // sig
    lx_.expect(Tok::LBrace, "'{'");
    for (;;) {
      Name n = name();
      if (n == "down") lx_.fail("'down' is the reserved co-name of 'up'");
      lx_.expect(Tok::Slash, "'/'");
      Token a = lx_.expect(Tok::Nat, "arity");
      eng_.sig.declare(n, std::stoi(a.text));
      if (!lx_.at(Tok::Comma)) break;
      lx_.next();
    }
    lx_.expect(Tok::RBrace, "'}'");
    strict_ = true;
  }

  void definition() {
    lx_.next();  // def
    Token id = lx_.expect(Tok::Ident, "definition identifier");
    if (is_variable_token(id.text) || is_design_keyword(id.text))
      throw ParseError("invalid definition identifier '" + id.text + "'", id.line,
                       id.col);
    lx_.expect(Tok::LParen, "'('");
    std::vector<Var> params;
    if (!lx_.at(Tok::RParen)) {
      for (;;) {
        params.push_back(variable());
        if (!lx_.at(Tok::Comma)) break;
        lx_.next();
      }
    }
    lx_.expect(Tok::RParen, "')'");
    lx_.expect(Tok::Eq, "'='");
    DesignPtr body = any();
    eng_.defs.add(id.text, Definition{std::move(params), std::move(body)});
  }

  // Positive, negative, or predesign expression; predesigns become unary
  // conjunctions.
  DesignPtr any() {
    if (lx_.at(Tok::Ident)) {
      const std::string& t = lx_.peek().text;
      if (t == "omega") { lx_.next(); return omega(); }
      if (t == "daimon") { lx_.next(); return daimon(); }
    }
    if (lx_.at(Tok::Conj)) {
      lx_.next();
      lx_.expect(Tok::LBrace, "'{'");
      std::vector<DesignPtr> parts;
      parts.push_back(conjunct());
      while (lx_.at(Tok::Comma)) {
        lx_.next();
        parts.push_back(conjunct());
      }
      lx_.expect(Tok::RBrace, "'}'");
      return conj(std::move(parts));
    }
    DesignPtr n = neg();
    if (lx_.at(Tok::Bar)) return conj({finish_pred(n)});
    return n;
  }

  // Checks the definition system and all bodies; call once after all input
  // for one engine has been consumed.
  void validate_all() {
    validate_defs(eng_.defs);
    for (auto& [n, df] : eng_.defs.all()) validate(df.body, eng_);
  }

  Engine& engine() { return eng_; }

private:
  // A conjunction element: predesign or positive reference.
  DesignPtr conjunct() {
    DesignPtr n = neg();
    if (lx_.at(Tok::Bar)) return finish_pred(n);
    if (as_ref(n)) return n;
    lx_.fail("expected '|' after negative design in conjunction");
  }

  DesignPtr finish_pred(DesignPtr head) {
    lx_.expect(Tok::Bar, "'|'");
    Name a = name();
    // 'down' is the reserved co-name for positive uses of 'up'.
    if (a == "down") a = "up";
    std::vector<DesignPtr> args;
    if (lx_.at(Tok::LAngle)) {
      lx_.next();
      if (!lx_.at(Tok::RAngle)) {
        for (;;) {
          args.push_back(neg());
          if (!lx_.at(Tok::Comma)) break;
          lx_.next();
        }
      }
      lx_.expect(Tok::RAngle, "'>'");
    }
    use_name(a, static_cast<int>(args.size()));
    return pred(std::move(head), std::move(a), std::move(args));
  }

  DesignPtr neg() {
    if (lx_.at(Tok::Ident)) {
      Token t = lx_.peek();
      if (is_variable_token(t.text)) {
        lx_.next();
        return var(t.text);
      }
      if (is_design_keyword(t.text))
        throw ParseError("unexpected keyword '" + t.text + "'", t.line, t.col);
      lx_.next();
      return reference(t);
    }
    if (lx_.at(Tok::LBrace)) return abstraction();
    lx_.fail("expected a design");
  }

  DesignPtr abstraction() {
    lx_.expect(Tok::LBrace, "'{'");
    std::map<Name, SumBranch> branches;
    if (!lx_.at(Tok::RBrace)) {
      for (;;) {
        Name a = name();
        if (a == "down")
          lx_.fail("'down' is the co-name of 'up' and cannot head a branch");
        std::vector<Var> binders;
        if (lx_.at(Tok::LParen)) {
          lx_.next();
          if (!lx_.at(Tok::RParen)) {
            for (;;) {
              binders.push_back(variable());
              if (!lx_.at(Tok::Comma)) break;
              lx_.next();
            }
          }
          lx_.expect(Tok::RParen, "')'");
        }
        lx_.expect(Tok::Arrow, "'=>'");
        DesignPtr body = any();
        use_name(a, static_cast<int>(binders.size()));
        if (branches.count(a)) lx_.fail("duplicate branch for name '" + a + "'");
        branches[a] = SumBranch{std::move(binders), std::move(body)};
        if (!lx_.at(Tok::Semi)) break;
        lx_.next();
      }
    }
    lx_.expect(Tok::RBrace, "'}'");
    return sum(std::move(branches));
  }

  DesignPtr reference(const Token& id) {
    lx_.expect(Tok::LParen, "'('");
    std::vector<DesignPtr> args;
    if (!lx_.at(Tok::RParen)) {
      for (;;) {
        args.push_back(neg());
        if (!lx_.at(Tok::Comma)) break;
        lx_.next();
      }
    }
    lx_.expect(Tok::RParen, "')'");
    bool all_vars = true;
    for (auto& a : args)
      if (!as_var(a)) all_vars = false;
    if (all_vars) {
      std::vector<Var> vs;
      for (auto& a : args) vs.push_back(as_var(a)->var);
      return ref(id.text, std::move(vs));
    }
    // Non-variable arguments fold in by specializing the definition; this
    // requires the definition to be available already.
    if (!eng_.defs.find(id.text))
      throw ParseError("reference '" + id.text +
                           "' with non-variable arguments must follow its definition",
                       id.line, id.col);
    std::vector<Var> tmp;
    std::map<Var, DesignPtr> bind;
    for (auto& a : args) {
      Var v = eng_.fresh_var();
      tmp.push_back(v);
      bind[v] = a;
    }
    return substitute(ref(id.text, std::move(tmp)), bind, eng_);
  }

  Name name() {
    Token t = lx_.expect(Tok::Ident, "a name");
    if (is_variable_token(t.text))
      throw ParseError("expected a name, found variable '" + t.text + "'", t.line,
                       t.col);
    if (is_design_keyword(t.text))
      throw ParseError("expected a name, found keyword '" + t.text + "'", t.line,
                       t.col);
    if ((t.text == "pi1" || t.text == "pi2" || t.text == "wp") &&
        lx_.at(Tok::LParen) && lx_.at(Tok::Ident, 1) &&
        !is_variable_token(lx_.peek(1).text)) {
      lx_.next();  // (
      Name a = name();
      if (t.text == "wp") {
        lx_.expect(Tok::Comma, "','");
        Name b = name();
        lx_.expect(Tok::RParen, "')'");
        return wp_name(a, b);
      }
      lx_.expect(Tok::RParen, "')'");
      return t.text == "pi1" ? pi1_name(a) : pi2_name(a);
    }
    return t.text;
  }

  Var variable() {
    Token t = lx_.expect(Tok::Ident, "a variable");
    if (!is_variable_token(t.text))
      throw ParseError("expected a variable, found '" + t.text + "'", t.line, t.col);
    return t.text;
  }

  void use_name(const Name& n, int arity) {
    auto known = eng_.sig.arity(n);
    if (known) {
      if (*known != arity)
        lx_.fail("arity mismatch for name '" + n + "': declared " +
                 std::to_string(*known) + ", used with " + std::to_string(arity));
      return;
    }
    if (strict_) lx_.fail("undeclared name '" + n + "'");
    eng_.sig.declare(n, arity);
  }

  Lexer& lx_;
  Engine& eng_;
  bool strict_ = false;
};

}  // namespace ludics::internal
