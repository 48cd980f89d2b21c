#pragma once

// Exact linear algebra over Q (and Z where lattices are involved).

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "fakepoly/polyexpr.hpp"
#include "fakepoly/rational.hpp"

namespace fakepoly::linalg {

/// Incremental row echelon form over polynomials viewed as coefficient
/// vectors indexed by monomials. Each stored row has a distinct leading
/// monomial with coefficient 1.
class EchelonBasis {
 public:
  /// Reduces `p` against the stored rows; returns the remainder.
  PolyExpr reduce(PolyExpr p) const;
  /// Inserts `p` if it is independent of the stored rows.
  bool insert(const PolyExpr& p);
  bool contains(const PolyExpr& p) const { return reduce(p).is_zero(); }
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Fully reduced echelon rows, largest leading monomial first.
  std::vector<PolyExpr> reduced_rows() const;

 private:
  std::map<Monomial, PolyExpr, GradedLexLess> rows_;
};

std::size_t polynomial_rank(const std::vector<PolyExpr>& polys);

/// Canonical basis (reduced row echelon form) of span(polys).
std::vector<PolyExpr> canonical_basis(const std::vector<PolyExpr>& polys);

using Matrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols);
std::size_t rank(Matrix m);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols);
/// Some solution of m v = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, std::size_t cols,
                                           const std::vector<Rational>& b);

using IntMatrix = std::vector<std::vector<Integer>>;

/// Rank via fraction-free (Bareiss) elimination.
std::size_t bareiss_rank(IntMatrix m);

/// Column Hermite normal form of the lattice spanned by `columns` (each of
/// length `rows`): lower echelon, positive pivots, entries left of a pivot
/// reduced into [0, pivot). Returns only the nonzero columns.
IntMatrix column_hermite_form(IntMatrix columns, std::size_t rows);

}  // namespace fakepoly::linalg
