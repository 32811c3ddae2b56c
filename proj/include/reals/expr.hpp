#pragma once

// Calculator expression layer: a small grammar over the kernel.
//
//   expr    := term (('+' | '-') term)*
//   term    := '-' term | primary
//   primary := number | name ['(' args ')'] | '(' expr ')'
//
// Numbers are integers, fractions n/d, or decimal literals, all read
// exactly.  Builtin constructors: abs(e), mid(e, e), geo(q) for the
// geometric-series limit q/(1-q), bigmid(unit|alt) for the frozen
// midpoint towers, and the named limits third and quarter.

#include "reals/rational.hpp"
#include "reals/real.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reals {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t pos)
        : std::runtime_error(message), position(pos) {}
    std::size_t position;  // byte offset into the source text
};

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

struct Expression {
    enum class Kind { Literal, Add, Sub, Neg, Abs, Mid, Builtin, BigMid };
    Kind kind = Kind::Literal;
    Rational literal;               // Literal
    ExprPtr lhs, rhs;               // Add/Sub/Mid both, Neg/Abs lhs only
    std::string name;               // Builtin: third|quarter|geo; BigMid: unit|alt
    std::optional<Rational> param;  // geo ratio
};

ExprPtr parse_expression(std::string_view text);

// Builds the Real; throws std::domain_error for out-of-range data
// (geo ratio with |q| >= 1).
Real evaluate(const Expression& e);

// Smallest n with 2^-n < 10^-digits.
unsigned digits_to_precision(unsigned digits);

// Decimal rendering with |printed - u| < 10^-digits, exactly: brackets u
// by rational_bounds at digits_to_precision(digits) and rounds the
// midpoint to digits+1 places.  The printed value always lies strictly
// inside the bracket.
std::string eval_decimal(const Real& u, unsigned digits);

}  // namespace reals
