#pragma once

// Shared token stream for the design, behaviour, and sequent grammars.

#include <string>
#include <vector>

#include "ludics/design.hpp"

namespace ludics::internal {

enum class Tok {
  Ident,   // identifiers and `*`
  Nat,
  LBrace, RBrace, LParen, RParen, LAngle, RAngle,
  Bar, Turnstile, Comma, Semi, Colon, Slash,
  Conj,    // the conjunction marker "/" followed by a backslash
  Arrow,   // =>
  Eq,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) {
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok k, std::string t) {
      toks_.push_back(Token{k, std::move(t), line, col});
    };
    while (i < text.size()) {
      char c = text[i];
      if (c == '\n') { ++line; col = 1; ++i; continue; }
      if (c == ' ' || c == '\t' || c == '\r') { ++col; ++i; continue; }
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
        continue;
      }
      int startcol = col;
      auto adv = [&](size_t n) { i += n; col += static_cast<int>(n); };
      if (isalpha(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < text.size() &&
               (isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                text[j] == '\''))
          ++j;
        toks_.push_back(Token{Tok::Ident, text.substr(i, j - i), line, startcol});
        col += static_cast<int>(j - i);
        i = j;
        continue;
      }
      if (isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
        toks_.push_back(Token{Tok::Nat, text.substr(i, j - i), line, startcol});
        col += static_cast<int>(j - i);
        i = j;
        continue;
      }
      switch (c) {
        case '*': push(Tok::Ident, "*"); adv(1); break;
        case '{': push(Tok::LBrace, "{"); adv(1); break;
        case '}': push(Tok::RBrace, "}"); adv(1); break;
        case '(': push(Tok::LParen, "("); adv(1); break;
        case ')': push(Tok::RParen, ")"); adv(1); break;
        case '<': push(Tok::LAngle, "<"); adv(1); break;
        case '>': push(Tok::RAngle, ">"); adv(1); break;
        case ',': push(Tok::Comma, ","); adv(1); break;
        case ';': push(Tok::Semi, ";"); adv(1); break;
        case ':': push(Tok::Colon, ":"); adv(1); break;
        case '|':
          if (i + 1 < text.size() && text[i + 1] == '-') {
            push(Tok::Turnstile, "|-"); adv(2);
          } else {
            push(Tok::Bar, "|"); adv(1);
          }
          break;
        case '/':
          if (i + 1 < text.size() && text[i + 1] == '\\') {
            push(Tok::Conj, "/\\"); adv(2);
          } else {
            push(Tok::Slash, "/"); adv(1);
          }
          break;
        case '=':
          if (i + 1 < text.size() && text[i + 1] == '>') {
            push(Tok::Arrow, "=>"); adv(2);
          } else {
            push(Tok::Eq, "="); adv(1);
          }
          break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line,
                           startcol);
      }
    }
    toks_.push_back(Token{Tok::End, "", line, col});
  }

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token next() {
    Token t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at(Tok k, size_t ahead = 0) const { return peek(ahead).kind == k; }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) {
      const Token& t = peek();
      throw ParseError("expected " + what + ", found '" +
                           (t.kind == Tok::End ? std::string("end of input") : t.text) +
                           "'",
                       t.line, t.col);
    }
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg, t.line, t.col);
  }

private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace ludics::internal
