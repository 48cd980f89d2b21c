#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fakepoly/family.hpp"
#include "fakepoly/formula.hpp"
#include "fakepoly/group.hpp"

namespace fakepoly::cli {

/// Parsed function source. Concrete specs use x1, x2, ... (1-based);
/// schemas read "sum_i <expr in x_i and i>".
struct FunctionSpec {
  std::string source;
  FormulaPtr tree;  // the summand for schemas
  FunctionFamily family;

  bool is_schema() const { return family.is_schema(); }
  /// Canonical rendering; re-parses to an equal spec.
  std::string canonical() const;
};

/// Grammar (whitespace insignificant):
///   expr    := term (("+" | "-") term)*
///   term    := unary ("*" unary)*
///   unary   := "-" unary | power
///   power   := primary ("^" exponent)*
///   primary := rational | var | "(" expr ")"
///   exponent:= nat | "i"
/// Throws ParseError with line and column.
FunctionSpec parse_function(std::string_view src);

/// Concrete polynomial only (no schema); used for --p and --additive.
PolyExpr parse_polynomial(std::string_view src);

/// "[[1,0],[0,1]]": a JSON-style list of generator columns; the ambient
/// dimension is the column length.
Subgroup parse_subgroup(std::string_view src);

}  // namespace fakepoly::cli
