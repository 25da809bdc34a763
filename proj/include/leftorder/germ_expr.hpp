#pragma once

#include "leftorder/rational.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace leftorder {

enum class ExprOp { X, S, Const, Add, Sub, Mul, Div, Neg, Min, Max, Abs };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

// Immutable expression node; subtrees may be shared.
struct ExprNode {
    ExprOp op;
    Rational value;  // Const only
    Expr lhs;
    Expr rhs;
};

namespace expr {
Expr x();
Expr s();
Expr constant(const Rational& q);
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr div(Expr a, Expr b);
Expr neg(Expr a);
Expr min(Expr a, Expr b);
Expr max(Expr a, Expr b);
Expr abs(Expr a);
}  // namespace expr

// Arithmetic over x, s, integers, + - * /, unary minus, min(,), max(,), abs().
// Throws ParseError (line 1, column of the offending character).
Expr parse_expr(std::string_view text);

// Re-parseable text.
std::string to_string(const Expr& e);

// Exact value at (x, s); DomainError on division by zero.
Rational evaluate(const Expr& e, const Rational& x, const Rational& s);

bool depends_on_x(const Expr& e);

// e with every x replaced by `replacement`.
Expr substitute_x(const Expr& e, const Expr& replacement);

// Inverse in x for expressions affine in x (coefficients may depend on s) and
// min/max combinations of such; throws UnsupportedInverse otherwise.
Expr invert_in_x(const Expr& e);

}  // namespace leftorder
