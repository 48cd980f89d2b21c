#pragma once

#include <cstddef>
#include <vector>

#include "fakepoly/group.hpp"
#include "fakepoly/polyexpr.hpp"

namespace fakepoly {

/// Symmetric k-additive form stored as a polynomial over k argument blocks;
/// argument j (0-based) occupies variables j*stride .. j*stride + stride - 1.
struct MultiadditiveForm {
  unsigned arity = 0;
  std::size_t stride = 1;
  PolyExpr body;

  std::size_t var(std::size_t block, std::size_t coord) const { return block * stride + coord; }
  /// Renders over argument names y1, y2, ... with coordinates y1_1, y1_2, ...
  std::string render() const;

  friend bool operator==(const MultiadditiveForm&, const MultiadditiveForm&) = default;
};

struct Polarization {
  /// forms[k-1] is A_k for k = 1..deg f; zero forms are kept in place.
  std::vector<MultiadditiveForm> forms;
  Rational constant;
};

/// f = A_n(x,...,x) + ... + A_1(x) + C with each A_k symmetric k-additive,
/// A_k(y1..yk) = (1/k!) Delta_{y1..yk} * f_k at x = o.
Polarization polarize(const PolyExpr& f);

/// A(x, x, ..., x).
PolyExpr diagonalize(const MultiadditiveForm& a);

/// Additivity in every block plus invariance under adjacent transpositions,
/// both checked as polynomial identities.
bool verify_multiadditive_symmetric(const MultiadditiveForm& a);

struct AdditiveSlice {
  PolyExpr slice;   // x -> A_n(x, y2, ..., yn)
  Measure witness;  // apply_measure(witness, f) == slice
};

/// Evaluates the top form of f at (x, ys...). Requires ys.size() == deg f - 1
/// and a nonconstant f.
AdditiveSlice top_additive_slice(const PolyExpr& f, const std::vector<GroupElement>& ys);

/// True iff the products a1^alpha1 ... ak^alphak with |alpha| <= deg_cap are
/// linearly independent (0^0 = 1). Every entry must be homogeneous of degree 1.
bool monomial_independence_check(const std::vector<PolyExpr>& additive, unsigned deg_cap);

/// Nonzero and homogeneous of degree one.
bool is_additive(const PolyExpr& p);

/// Multi-indices over k variables with |alpha| <= max_degree, graded order.
std::vector<std::vector<unsigned>> multi_indices(std::size_t k, unsigned max_degree);

}  // namespace fakepoly
