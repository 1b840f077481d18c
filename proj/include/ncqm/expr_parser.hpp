#ifndef NCQM_EXPR_PARSER_HPP
#define NCQM_EXPR_PARSER_HPP

#include <string>
#include <string_view>

#include "ncqm/operator_poly.hpp"

namespace ncqm::sym {

// Recursive-descent parser for operator expressions.
//
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*      (the divisor must be scalar)
//   factor   := atom ('^' uint)?
//   atom     := 'x1'|'x2'|'p1'|'p2'|'tx1'|'tx2'|'tp1'|'tp2'
//             | 'a1'|'a2'|'a1d'|'a2d'
//             | 'comm(' expr ',' expr ')' | 'i' | rational | param
//             | '(' expr ')'
//   param    := 'hbar'|'eta'|'theta'|'mu'|'omega'|'xi'|'sigma'
//   rational := int ('/' uint)?
//
// Tilde and ladder names expand through OpPoly::generator; comm(a,b) is
// the commutator.  Errors carry the byte offset and the expected tokens.
OpPoly parse_expression(std::string_view text);

// Parses an expression that must reduce to a scalar (no generators);
// used for binding values.
Scalar parse_scalar_expression(std::string_view text);

// Parses "name=expr" into bindings; name is a parameter or xi/sigma.
void add_binding(Bindings& b, std::string_view spec);

// Caret diagnostic block for a ParseError, e.g.
//   x1 +* p1
//      ^
std::string caret_diagnostic(std::string_view text, std::size_t position);

}  // namespace ncqm::sym

#endif
