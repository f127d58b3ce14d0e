#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>

#include "ore/orepoly.hpp"

namespace ore {

/// Expression front end.
///
/// Grammar (juxtaposition is NOT multiplication; '*' is mandatory and
/// order-preserving, since the target ring is noncommutative):
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := scalar | 'y' | 'x' | '(' expr ')'
///   scalar := uint ('/' uint)?

enum class ExprKind { scalar, gen_y, gen_x, add, sub, mul, pow };

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

struct Expression {
    ExprKind kind;
    mpq_class value;        // scalar literals
    ExprPtr lhs, rhs;       // binary nodes
    unsigned exponent = 0;  // pow nodes (base in lhs)
};

// SyntaxError with a 1-based position on malformed input.
ExprPtr parse_expression(std::string_view src);

// Minimal-parentheses rendering; parse(print(parse(s))) == parse(s).
std::string print_expression(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
bool expr_contains_x(const ExprPtr& e);

enum class MulMethod { naive, goodearl };

// Evaluates the AST over a context. Scalar literals are read through the
// ring's coefficient field; 'y' must name a basis generator. Over a
// non-unital ring any subterm that would require embedding a scalar or bare
// x-power into the ring is a ValidationError.
OrePoly evaluate(const ExprPtr& e, const ContextPtr& ctx, MulMethod method = MulMethod::naive);

}  // namespace ore
