#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "lipopt/objective.hpp"

namespace lipopt {

/// Parsed arithmetic expression in one variable x.
///
/// Grammar (whitespace insignificant):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-'? power                  -- unary minus binds looser than '^'
///   power  := atom ('^' factor)?          -- right-associative
///   atom   := number | 'x' | ident '(' expr ')' | '(' expr ')'
/// Identifiers: sin cos tan exp log abs sqrt, constants pi and e.
/// There is no implicit multiplication; "2x" is a syntax error.
class ExprAst {
public:
  struct Node;

  /// Evaluates at x. Domain errors (log/sqrt of a negative, division by
  /// zero) surface as non-finite values, never as exceptions.
  double eval(double x) const;

  const std::string& source() const noexcept { return source_; }

  /// Objective named after the source text, backed by this AST.
  Objective to_objective() const;

private:
  friend ExprAst parse_expression(std::string_view text);
  std::shared_ptr<const Node> root_;
  std::string source_;
};

/// Throws SyntaxError (with byte offset and the expected-token set) or
/// UnknownIdentifierError; never crashes on arbitrary input bytes.
ExprAst parse_expression(std::string_view text);

}  // namespace lipopt
