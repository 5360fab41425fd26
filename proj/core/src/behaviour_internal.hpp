#pragma once

// Recursive-descent parser for the behaviour and context grammars, driven by
// the behaviour and sequent file parsers.

#include "ludics/behaviour.hpp"
#include "lexer.hpp"

namespace ludics::internal {

class BehaviourParser {
public:
  BehaviourParser(Lexer& lx, ConnectiveTable& table) : lx_(lx), table_(table) {}

  bool at_conn_decl() const {
    return lx_.at(Tok::Ident) && lx_.peek().text == "conn";
  }

  // conn IDENT "(" vars? ")" "{" (NAME ("(" vars? ")")?)* "}"
  void conn_decl() {
    lx_.next();  // conn
    Token id = lx_.expect(Tok::Ident, "connective identifier");
    if (is_variable_token(id.text))
      throw ParseError("connective identifier cannot be a variable", id.line, id.col);
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
    lx_.expect(Tok::LBrace, "'{'");
    std::map<Name, std::vector<Var>> actions;
    while (!lx_.at(Tok::RBrace)) {
      Token a = lx_.expect(Tok::Ident, "an action name");
      if (is_variable_token(a.text))
        throw ParseError("action name cannot be a variable", a.line, a.col);
      std::vector<Var> vars;
      if (lx_.at(Tok::LParen)) {
        lx_.next();
        if (!lx_.at(Tok::RParen)) {
          for (;;) {
            vars.push_back(variable());
            if (!lx_.at(Tok::Comma)) break;
            lx_.next();
          }
        }
        lx_.expect(Tok::RParen, "')'");
      }
      if (actions.count(a.text))
        throw ParseError("duplicate action '" + a.text + "'", a.line, a.col);
      actions[a.text] = std::move(vars);
      if (lx_.at(Tok::Comma) || lx_.at(Tok::Semi)) lx_.next();
    }
    lx_.expect(Tok::RBrace, "'}'");
    if (table_.count(id.text))
      throw ParseError("connective '" + id.text + "' already declared", id.line,
                       id.col);
    table_.emplace(id.text,
                   make_connective(id.text, std::move(params), std::move(actions)));
  }

  BehaviourPtr beh() {
    const std::string& t = lx_.peek().text;
    if (t == "pos" || t == "one" || t == "zero" || t == "down" || t == "tensor" ||
        t == "plus")
      return bpos();
    return bneg();
  }

  BehaviourPtr bpos() {
    Token t = lx_.expect(Tok::Ident, "a positive behaviour");
    if (t.text == "one") return one();
    if (t.text == "zero") return zero();
    if (t.text == "down") {
      lx_.expect(Tok::LParen, "'('");
      BehaviourPtr n = bneg();
      lx_.expect(Tok::RParen, "')'");
      return down(std::move(n));
    }
    if (t.text == "tensor" || t.text == "plus") {
      lx_.expect(Tok::LParen, "'('");
      BehaviourPtr n = bneg();
      lx_.expect(Tok::Comma, "','");
      BehaviourPtr m = bneg();
      lx_.expect(Tok::RParen, "')'");
      return t.text == "tensor" ? tensor(std::move(n), std::move(m))
                                : plus(std::move(n), std::move(m));
    }
    if (t.text == "pos") {
      const Connective& c = lookup();
      std::vector<BehaviourPtr> args;
      lx_.expect(Tok::LAngle, "'<'");
      if (!lx_.at(Tok::RAngle)) {
        for (;;) {
          args.push_back(bneg());
          if (!lx_.at(Tok::Comma)) break;
          lx_.next();
        }
      }
      lx_.expect(Tok::RAngle, "'>'");
      return behaviour(Polarity::Positive, c, std::move(args));
    }
    throw ParseError("expected a positive behaviour, found '" + t.text + "'",
                     t.line, t.col);
  }

  BehaviourPtr bneg() {
    Token t = lx_.expect(Tok::Ident, "a negative behaviour");
    if (t.text == "bot") return bot();
    if (t.text == "top") return top();
    if (t.text == "up") {
      lx_.expect(Tok::LParen, "'('");
      BehaviourPtr p = bpos();
      lx_.expect(Tok::RParen, "')'");
      return up(std::move(p));
    }
    if (t.text == "par" || t.text == "with") {
      lx_.expect(Tok::LParen, "'('");
      BehaviourPtr p = bpos();
      lx_.expect(Tok::Comma, "','");
      BehaviourPtr q = bpos();
      lx_.expect(Tok::RParen, "')'");
      return t.text == "par" ? par(std::move(p), std::move(q))
                             : with_(std::move(p), std::move(q));
    }
    if (t.text == "neg") {
      const Connective& c = lookup();
      std::vector<BehaviourPtr> args;
      lx_.expect(Tok::LParen, "'('");
      if (!lx_.at(Tok::RParen)) {
        for (;;) {
          args.push_back(bpos());
          if (!lx_.at(Tok::Comma)) break;
          lx_.next();
        }
      }
      lx_.expect(Tok::RParen, "')'");
      return behaviour(Polarity::Negative, c, std::move(args));
    }
    throw ParseError("expected a negative behaviour, found '" + t.text + "'",
                     t.line, t.col);
  }

  // `x:BPOS, y:BPOS [, BNEG]`; the negative behaviour, if present, is last.
  Context context() {
    Context ctx;
    if (lx_.at(Tok::End)) return ctx;
    for (;;) {
      if (lx_.at(Tok::Ident) && is_variable_token(lx_.peek().text) &&
          lx_.at(Tok::Colon, 1)) {
        Token v = lx_.next();
        lx_.next();  // :
        for (auto& [x, b] : ctx.positives)
          if (x == v.text)
            throw ParseError("duplicate context variable '" + v.text + "'", v.line,
                             v.col);
        ctx.positives.emplace_back(v.text, bpos());
      } else {
        ctx.negative = bneg();
        break;
      }
      if (!lx_.at(Tok::Comma)) break;
      lx_.next();
    }
    return ctx;
  }

private:
  const Connective& lookup() {
    Token id = lx_.expect(Tok::Ident, "a connective identifier");
    auto it = table_.find(id.text);
    if (it == table_.end())
      throw ParseError("unknown connective '" + id.text + "'", id.line, id.col);
    return it->second;
  }

  Var variable() {
    Token t = lx_.expect(Tok::Ident, "a variable");
    if (!is_variable_token(t.text))
      throw ParseError("expected a variable, found '" + t.text + "'", t.line, t.col);
    return t.text;
  }

  Lexer& lx_;
  ConnectiveTable& table_;
};

}  // namespace ludics::internal
