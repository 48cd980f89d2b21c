#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fakepoly/group_element.hpp"
#include "fakepoly/polyexpr.hpp"
#include "fakepoly/rational.hpp"

namespace fakepoly {

/// Finitely supported rational function on the group: an element of the
/// group algebra under convolution. Zero coefficients are never stored.
class Measure {
 public:
  using Atoms = std::map<GroupElement, Rational>;

  Measure() = default;
  static Measure delta(const GroupElement& at, const Rational& weight = 1);
  static Measure identity() { return delta(GroupElement{}); }

  const Atoms& atoms() const noexcept { return atoms_; }
  bool is_zero() const noexcept { return atoms_.empty(); }
  Rational operator[](const GroupElement& at) const;

  void add_atom(const GroupElement& at, const Rational& weight);

  Measure& operator+=(const Measure& other);
  Measure& operator-=(const Measure& other);
  Measure& operator*=(const Rational& s);
  friend Measure operator+(Measure a, const Measure& b) { return a += b; }
  friend Measure operator-(Measure a, const Measure& b) { return a -= b; }
  friend Measure operator*(Measure a, const Rational& s) { return a *= s; }
  friend bool operator==(const Measure&, const Measure&) = default;

  std::string to_string() const;

 private:
  Atoms atoms_;
};

/// (mu * nu)(x) = sum_y mu(x - y) nu(y).
Measure convolve(const Measure& mu, const Measure& nu);

/// Delta_y = delta_{-y} - delta_o; the zero measure for y = o.
Measure difference_measure(const GroupElement& y);

/// Delta_{y1} * ... * Delta_{yk}. Throws on an empty chain.
Measure iterated_difference(const std::vector<GroupElement>& ys);

/// (mu * f)(x) = sum_y f(x - y) mu(y), computed symbolically.
PolyExpr apply_measure(const Measure& mu, const PolyExpr& f);

/// Finitely generated subgroup of Z^n given by integer generator columns.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<GroupElement> generators, std::size_t ambient_dim);

  /// Coordinate subgroup spanned by the unit vectors e_i, i in `indices`.
  static Subgroup coordinate(const std::vector<std::size_t>& indices, std::size_t ambient_dim);
  static Subgroup full(std::size_t ambient_dim);

  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t rank() const;
  /// Canonical lattice basis (nonzero columns of the column Hermite form).
  const std::vector<GroupElement>& hermite_basis() const noexcept { return hermite_; }

  /// Generators as a dense ambient_dim x k integer matrix, column per generator.
  std::vector<std::vector<std::int64_t>> generator_columns() const;

  /// Same lattice (Hermite forms agree).
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.hermite_ == b.hermite_; }

 private:
  std::vector<GroupElement> generators_;
  std::size_t ambient_dim_ = 0;
  std::vector<GroupElement> hermite_;
};

std::size_t subgroup_rank(const Subgroup& h);

/// q(t) = f(B t) where B is the Hermite basis of H: a polynomial in rank(H)
/// parameters t_0, ..., t_{rank-1}.
PolyExpr restrict(const PolyExpr& f, const Subgroup& h);

/// Z^n (finite rank n) or the weak direct product Z_omega.
struct GroupDescriptor {
  enum class Kind { FreeFinite, WeakDirectProduct };
  Kind kind = Kind::FreeFinite;
  std::size_t rank = 0;

  static GroupDescriptor free(std::size_t n) { return {Kind::FreeFinite, n}; }
  static GroupDescriptor weak_direct_product() { return {Kind::WeakDirectProduct, 0}; }
  /// Accepts "Z^n", "Zn", "Z" and "Z_omega"; anything else throws.
  static GroupDescriptor parse(const std::string& text);
  std::string to_string() const;
};

struct HomDimension {
  bool infinite = false;
  std::size_t value = 0;
  friend bool operator==(const HomDimension&, const HomDimension&) = default;
};

/// Dimension of Hom(G, Q) for the supported descriptors.
HomDimension hom_dimension(const GroupDescriptor& g);

}  // namespace fakepoly
