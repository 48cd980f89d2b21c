#include "fakepoly/formula.hpp"

#include "fakepoly/error.hpp"

namespace fakepoly {

FormulaPtr Formula::constant(const Rational& value) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Kind::Constant;
  f->value_ = value;
  return f;
}

FormulaPtr Formula::coordinate(std::size_t index) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Kind::Coordinate;
  f->coord_ = index;
  return f;
}

FormulaPtr Formula::schema_coordinate() {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Kind::SchemaCoordinate;
  return f;
}

FormulaPtr Formula::index() {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Kind::Index;
  return f;
}

FormulaPtr Formula::binary(Kind kind, FormulaPtr lhs, FormulaPtr rhs) {
  if (kind != Kind::Sum && kind != Kind::Difference && kind != Kind::Product) {
    throw Error("Formula::binary: not a binary operator");
  }
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = kind;
  f->lhs_ = std::move(lhs);
  f->rhs_ = std::move(rhs);
  return f;
}

FormulaPtr Formula::negate(FormulaPtr child) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Kind::Negate;
  f->lhs_ = std::move(child);
  return f;
}

FormulaPtr Formula::power(FormulaPtr base, unsigned exponent) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Kind::Power;
  f->lhs_ = std::move(base);
  f->exponent_ = exponent;
  return f;
}

FormulaPtr Formula::index_power(FormulaPtr base) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Kind::IndexPower;
  f->lhs_ = std::move(base);
  return f;
}

bool Formula::mentions_index() const {
  switch (kind_) {
    case Kind::SchemaCoordinate:
    case Kind::Index:
    case Kind::IndexPower:
      return true;
    case Kind::Constant:
    case Kind::Coordinate:
      return false;
    default:
      return (lhs_ && lhs_->mentions_index()) || (rhs_ && rhs_->mentions_index());
  }
}

PolyExpr Formula::evaluate() const { return eval(nullptr); }

PolyExpr Formula::instantiate(std::size_t i) const {
  if (i == 0) throw Error("schema indices are 1-based");
  return eval(&i);
}

PolyExpr Formula::eval(const std::size_t* index) const {
  switch (kind_) {
    case Kind::Constant:
      return PolyExpr(value_);
    case Kind::Coordinate:
      return PolyExpr::variable(coord_);
    case Kind::SchemaCoordinate:
      if (!index) throw Error("x_i outside a sum_i schema");
      return PolyExpr::variable(*index - 1);
    case Kind::Index:
      if (!index) throw Error("index i outside a sum_i schema");
      return PolyExpr(Rational(static_cast<unsigned long>(*index)));
    case Kind::Sum:
      return lhs_->eval(index) + rhs_->eval(index);
    case Kind::Difference:
      return lhs_->eval(index) - rhs_->eval(index);
    case Kind::Product:
      return lhs_->eval(index) * rhs_->eval(index);
    case Kind::Negate:
      return -lhs_->eval(index);
    case Kind::Power:
      return lhs_->eval(index).pow(exponent_);
    case Kind::IndexPower:
      if (!index) throw Error("exponent i outside a sum_i schema");
      return lhs_->eval(index).pow(static_cast<unsigned>(*index));
  }
  return {};
}

int Formula::precedence() const {
  switch (kind_) {
    case Kind::Sum:
    case Kind::Difference:
      return 1;
    case Kind::Product:
      return 2;
    case Kind::Negate:
      return 3;
    case Kind::Power:
    case Kind::IndexPower:
      return 4;
    default:
      return sgn(value_) < 0 ? 3 : 5;
  }
}

std::string Formula::render() const {
  auto wrap = [](const Formula& child, int min_prec) {
    std::string s = child.render();
    return child.precedence() < min_prec ? "(" + s + ")" : s;
  };
  switch (kind_) {
    case Kind::Constant:
      return to_string(value_);
    case Kind::Coordinate:
      return default_variable_name(coord_);
    case Kind::SchemaCoordinate:
      return "x_i";
    case Kind::Index:
      return "i";
    case Kind::Sum:
      return wrap(*lhs_, 1) + " + " + wrap(*rhs_, 2);
    case Kind::Difference:
      return wrap(*lhs_, 1) + " - " + wrap(*rhs_, 2);
    case Kind::Product:
      return wrap(*lhs_, 2) + "*" + wrap(*rhs_, 3);
    case Kind::Negate:
      return "-" + wrap(*lhs_, 3);
    case Kind::Power:
      return wrap(*lhs_, 5) + "^" + std::to_string(exponent_);
    case Kind::IndexPower:
      return wrap(*lhs_, 5) + "^i";
  }
  return {};
}

bool same_tree(const Formula& a, const Formula& b) {
  if (a.kind_ != b.kind_ || a.value_ != b.value_ || a.coord_ != b.coord_ ||
      a.exponent_ != b.exponent_) {
    return false;
  }
  if (bool(a.lhs_) != bool(b.lhs_) || bool(a.rhs_) != bool(b.rhs_)) return false;
  if (a.lhs_ && !same_tree(*a.lhs_, *b.lhs_)) return false;
  if (a.rhs_ && !same_tree(*a.rhs_, *b.rhs_)) return false;
  return true;
}

}  // namespace fakepoly
