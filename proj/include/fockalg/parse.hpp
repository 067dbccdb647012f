#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fockalg/expr.hpp"

namespace fockalg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the operator expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := 'a' | 'ad' | 'q' | 'p' | complex | '(' expr ')' | '[' expr ',' expr ']'
///   complex := decimal (('+'|'-') decimal 'i')?
/// Whitespace insensitive; 'a†' is accepted as an alias for 'ad'.
OpExpr parse(std::string_view src);

}  // namespace fockalg
