#include "ludics/parse.hpp"

#include "parse_internal.hpp"

namespace ludics {

std::optional<DesignPtr> parse_file(const std::string& text, Engine& eng) {
  internal::Lexer lx(text);
  internal::DesignParser p(lx, eng);
  return p.file();
}

DesignPtr parse_design(const std::string& text, Engine& eng) {
  auto d = parse_file(text, eng);
  if (!d) throw Error("input contains no design expression");
  return *d;
}

}  // namespace ludics
