#pragma once

// Expression grammar shared by the catalog and the command line:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' digits)?
//   atom  := digits | name | '(' expr ')'
//
// `x` is the covering variable, `i` the imaginary unit, `w` the generator of
// the declared quadratic extension, any other single letter the family
// parameter. Longer names refer to previously defined values.

#include <functional>
#include <string>

#include "pvialg/ratx.hpp"

namespace pvialg {

struct ParseContext {
  FieldPtr field;
  /// Parameter letter; 0 means "take the first one seen".
  char param = 0;
  /// Resolves multi-letter names; may be empty. Returns nullptr if unknown.
  std::function<const RatX*(const std::string&)> lookup;
};

RatX parse_expression(const std::string& text, ParseContext& ctx);

/// Parses an x-free expression.
ExtScalar parse_scalar(const std::string& text, ParseContext& ctx);

/// Parses a polynomial in the parameter with Q(i) coefficients.
QPoly parse_param_poly(const std::string& text, ParseContext& ctx);

/// Rational number "p", "-p" or "p/q".
mpq_class parse_rational(const std::string& text);

}  // namespace pvialg
