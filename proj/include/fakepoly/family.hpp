#pragma once

#include <cstddef>
#include <string>

#include "fakepoly/formula.hpp"
#include "fakepoly/polyexpr.hpp"

namespace fakepoly {

/// A coherent family f_n : Z^n -> Q modelling one function on Z_omega:
/// either a fixed polynomial on Z^n, or a schema f_n = sum_{i<=n} p_i(x_i).
class FunctionFamily {
 public:
  enum class Kind { Concrete, Schema };

  /// `ambient` is raised to f.variable_bound() if smaller.
  static FunctionFamily concrete(PolyExpr f, std::size_t ambient = 0);
  /// Validates coherence at levels 1..3; throws Error when it fails.
  static FunctionFamily schema(FormulaPtr summand);

  Kind kind() const noexcept { return kind_; }
  bool is_schema() const noexcept { return kind_ == Kind::Schema; }
  /// Concrete: dimension of the ambient Z^n. Schema: 0.
  std::size_t ambient() const noexcept { return ambient_; }
  const PolyExpr& polynomial() const noexcept { return poly_; }
  const FormulaPtr& summand() const noexcept { return summand_; }

  /// f_n on Z^n (coordinates n, n+1, ... set to zero).
  PolyExpr materialize(std::size_t level) const;

  /// Throws unless f_{n+1} restricted to Z^n equals f_n for n < up_to.
  void check_coherence(std::size_t up_to) const;

  /// Canonical text accepted by the DSL parser.
  std::string canonical() const;

 private:
  Kind kind_ = Kind::Concrete;
  std::size_t ambient_ = 0;
  PolyExpr poly_;
  FormulaPtr summand_;
};

}  // namespace fakepoly
