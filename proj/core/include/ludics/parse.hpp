#pragma once

// Parser for the design text grammar (whitespace-insensitive, '#' comments):
//
//   file      := sigdecl? def* expr?
//   sigdecl   := "sig" "{" (NAME "/" NAT) ("," NAME "/" NAT)* "}"
//   def       := "def" IDENT "(" vars? ")" "=" (pos | neg)
//   pos       := "omega" | "daimon" | pred | "/\" "{" pred ("," pred)* "}"
//              | IDENT "(" negs? ")"
//   pred      := neg "|" NAME ("<" (neg ("," neg)*)? ">")?
//   neg       := VAR | "{" (branch (";" branch)*)? "}" | IDENT "(" negs? ")"
//   branch    := NAME ("(" vars? ")")? "=>" pos
//
// Identifier arguments of a reference may be arbitrary negative designs; a
// non-variable argument is folded in by specializing the definition. Without
// a sigdecl, name arities are inferred from use (and must be consistent);
// with one, every used name must be declared. "..." is printed for
// truncation but is not accepted on input.

#include <optional>
#include <string>

#include "ludics/design.hpp"

namespace ludics {

// Parses a full file into the engine (signature, definitions) and returns
// the trailing expression, if any. Throws ParseError / Error.
std::optional<DesignPtr> parse_file(const std::string& text, Engine& eng);

// As parse_file but requires the expression to be present.
DesignPtr parse_design(const std::string& text, Engine& eng);

}  // namespace ludics
