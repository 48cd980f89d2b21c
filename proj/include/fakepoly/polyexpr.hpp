#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fakepoly/group_element.hpp"
#include "fakepoly/rational.hpp"

namespace fakepoly {

/// Exponent multi-index with finite support: (variable, exponent) pairs
/// sorted by variable, exponents strictly positive.
class Monomial {
 public:
  using Entry = std::pair<std::size_t, unsigned>;

  Monomial() = default;
  static Monomial variable(std::size_t var, unsigned exponent = 1);
  /// Dense exponent vector; zero entries are dropped.
  static Monomial from_exponents(const std::vector<unsigned>& exponents);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_one() const noexcept { return entries_.empty(); }
  unsigned degree() const noexcept;
  unsigned exponent(std::size_t var) const noexcept;
  std::size_t variable_bound() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Graded lexicographic order: degree first, then the exponent of the
/// lowest-indexed variable decides (x1 > x2 > ... within a degree).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Variables are coordinate indices (0-based); no zero coefficient is ever
/// stored, so the zero polynomial has an empty term map.
class PolyExpr {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexLess>;
  using VariableNamer = std::function<std::string(std::size_t)>;

  PolyExpr() = default;
  PolyExpr(const Rational& constant);  // NOLINT(google-explicit-constructor)
  PolyExpr(long constant) : PolyExpr(Rational(constant)) {}  // NOLINT

  static PolyExpr variable(std::size_t var);
  static PolyExpr term(const Monomial& m, const Rational& coeff);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  std::optional<unsigned> total_degree() const;
  /// One past the largest variable index that occurs.
  std::size_t variable_bound() const;
  /// Leading monomial in graded-lex order; requires a nonzero polynomial.
  const Monomial& leading_monomial() const;

  PolyExpr& operator+=(const PolyExpr& other);
  PolyExpr& operator-=(const PolyExpr& other);
  PolyExpr& operator*=(const Rational& scalar);
  PolyExpr operator-() const;
  friend PolyExpr operator+(PolyExpr a, const PolyExpr& b) { return a += b; }
  friend PolyExpr operator-(PolyExpr a, const PolyExpr& b) { return a -= b; }
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator*(PolyExpr a, const Rational& s) { return a *= s; }
  friend PolyExpr operator*(const Rational& s, PolyExpr a) { return a *= s; }
  friend bool operator==(const PolyExpr&, const PolyExpr&) = default;

  /// Adds coeff * m in place.
  void add_term(const Monomial& m, const Rational& coeff);

  PolyExpr pow(unsigned exponent) const;

  /// Exact value at a group element (variable i reads coordinate i).
  Rational evaluate(const GroupElement& point) const;

  /// Simultaneous substitution; variables absent from the map stay as they are.
  PolyExpr substitute(const std::map<std::size_t, PolyExpr>& images) const;

  /// x -> f(x + shift).
  PolyExpr translate(const GroupElement& shift) const;

  /// Injective variable renaming.
  PolyExpr rename(const std::function<std::size_t(std::size_t)>& map) const;

  /// Formal partial derivative.
  PolyExpr derivative(std::size_t var) const;

  /// Keeps only terms whose variables all satisfy `keep`.
  PolyExpr filter_variables(const std::function<bool(std::size_t)>& keep) const;

  /// Canonical text: graded-lex descending, exact rational coefficients,
  /// variables rendered by `namer` (default x1, x2, ...).
  std::string render(const VariableNamer& namer = {}) const;

 private:
  Terms terms_;
};

// Spec-facing free functions.

PolyExpr scale(const PolyExpr& p, const Rational& s);
Rational evaluate(const PolyExpr& p, const GroupElement& point);
std::optional<unsigned> total_degree(const PolyExpr& p);
/// Sum of the terms of total degree exactly k.
PolyExpr homogeneous_part(const PolyExpr& p, unsigned k);

struct ShiftTerm {
  Monomial beta;
  PolyExpr coefficient;  // h_beta
};

/// q(t + s) = sum_beta s^beta h_beta(t); beta ascends in graded-lex order
/// starting at beta = 0 with h_0 = q. Terms with h_beta = 0 are omitted.
std::vector<ShiftTerm> shift_expand(const PolyExpr& q);

/// Variable names x1, x2, ... for index 0, 1, ...
std::string default_variable_name(std::size_t var);

}  // namespace fakepoly
