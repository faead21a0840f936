#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "septensor/errors.hpp"

namespace septensor {

// Arithmetic expressions over the variables x and y: literals, pi, unary
// minus, + - * / ^, and the functions sin, cos, exp, sqrt, abs. This is the
// whole language; there are no user-defined names.
enum class ExprKind {
  literal,
  var_x,
  var_y,
  pi,
  negate,
  add,
  sub,
  mul,
  div,
  pow,
  sin,
  cos,
  exp,
  sqrt,
  abs,
};

struct Expr {
  ExprKind kind;
  double value = 0.0;          // literal payload
  std::unique_ptr<Expr> lhs;   // sole child for unary nodes
  std::unique_ptr<Expr> rhs;
};

using ExprPtr = std::unique_ptr<Expr>;

/// Parses text into an AST. Precedence ^ > unary minus > * / > + -, with ^
/// right-associative. Whitespace is ignored everywhere.
/// Throws SyntaxError carrying the 0-based offset of the offending character.
ExprPtr parse_expr(std::string_view text);

/// IEEE double evaluation; NaN and infinity propagate as ordinary values.
double eval_expr(const Expr& e, double x, double y);

/// Renders the AST with the minimal parentheses needed to reparse into a
/// structurally identical tree.
std::string print_expr(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

ExprPtr clone_expr(const Expr& e);

}  // namespace septensor
