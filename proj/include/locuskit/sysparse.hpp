#pragma once

// Text front door: polynomial expressions and polynomial-system files.
//
// Expression grammar (whitespace insignificant, no implicit multiplication):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | identifier ('^' uint)? | '(' expr ')' ('^' uint)?
//   rational := int ('/' uint)? | decimal      (decimals converted exactly)
//
// System file:
//   vars: v1 v2 ...
//   eliminate: vi ...
//   <one polynomial per line>
// Blank lines and lines starting with '#' are ignored; CRLF is accepted.

#include <string>
#include <string_view>

#include "locuskit/errors.hpp"
#include "locuskit/system.hpp"

namespace locuskit {

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline constexpr unsigned kMaxParseExponent = 64;

/// `line` is only used for error positions.
Polynomial parse_poly(std::string_view text, const ContextPtr& ctx,
                      std::size_t line = 1);
PolySystem parse_system(std::string_view text);

std::string serialize(const Polynomial& p);
std::string serialize(const PolySystem& sys);

}  // namespace locuskit
