#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "fakepoly/polyexpr.hpp"
#include "fakepoly/rational.hpp"

namespace fakepoly {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable expression tree shared by concrete specs (x1, x2, ...) and
/// coordinate schemas (x_i, i). Rendering is canonical: parsing the
/// rendered text rebuilds an identical tree.
class Formula {
 public:
  enum class Kind {
    Constant,          // rational literal
    Coordinate,        // x_k with fixed 0-based k
    SchemaCoordinate,  // x_i
    Index,             // i used as a scalar
    Sum,
    Difference,
    Product,
    Negate,
    Power,       // child ^ exponent
    IndexPower,  // child ^ i
  };

  static FormulaPtr constant(const Rational& value);
  static FormulaPtr coordinate(std::size_t index);
  static FormulaPtr schema_coordinate();
  static FormulaPtr index();
  static FormulaPtr binary(Kind kind, FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr negate(FormulaPtr child);
  static FormulaPtr power(FormulaPtr base, unsigned exponent);
  static FormulaPtr index_power(FormulaPtr base);

  Kind kind() const noexcept { return kind_; }
  const Rational& value() const noexcept { return value_; }
  std::size_t coordinate_index() const noexcept { return coord_; }
  unsigned exponent() const noexcept { return exponent_; }
  const FormulaPtr& lhs() const noexcept { return lhs_; }
  const FormulaPtr& rhs() const noexcept { return rhs_; }

  /// True when x_i or i occurs.
  bool mentions_index() const;

  /// Concrete evaluation; throws on x_i or i.
  PolyExpr evaluate() const;
  /// Schema instance for the 1-based index i; x_i becomes variable i-1.
  PolyExpr instantiate(std::size_t i) const;

  std::string render() const;

  friend bool same_tree(const Formula& a, const Formula& b);

 private:
  Formula() = default;
  PolyExpr eval(const std::size_t* index) const;
  int precedence() const;

  Kind kind_ = Kind::Constant;
  Rational value_;
  std::size_t coord_ = 0;
  unsigned exponent_ = 0;
  FormulaPtr lhs_;
  FormulaPtr rhs_;
};

}  // namespace fakepoly
