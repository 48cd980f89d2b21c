#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fakepoly/group.hpp"
#include "fakepoly/polyexpr.hpp"

namespace fakepoly {

/// Maximal independent subfamily of the shift expansion of q, taken in
/// expansion order. Its span is the span of all translates of q.
std::vector<PolyExpr> translate_span_basis(const PolyExpr& q);

/// Basis (reduced echelon form) of the homogeneous degree-one elements of
/// span(basis). `basis` must be linearly independent.
std::vector<PolyExpr> additive_subspace_basis(const std::vector<PolyExpr>& basis);

struct VarietyReport {
  Subgroup subgroup;
  PolyExpr restricted;  // f|_H in the Hermite parameters t
  std::size_t dimension = 0;
  std::vector<PolyExpr> basis;
  std::size_t additive_dim = 0;
  std::vector<PolyExpr> additive_basis;
};

/// tau(f|_H) as the span of translates of the restriction.
VarietyReport variety_dim(const PolyExpr& f, const Subgroup& h);

/// A measure mu with apply_measure(mu, q) == target supported on the shift
/// grid {0..deg q}^k, or nullopt when target is not in the translate span.
std::optional<Measure> translate_combination(const PolyExpr& q, const PolyExpr& target);

struct TaylorResult {
  PolyExpr composed;                // f = P(a1(x), ..., ak(x))
  std::vector<PolyExpr> generators; // distinct nonzero d^alpha P (a(x)), |alpha| <= deg P
  std::size_t rank = 0;
  std::size_t variety_dimension = 0;  // dim tau(f) over the full coordinate group
  unsigned degree = 0;                // deg f
  std::size_t bound = 0;              // (deg f + 1)^k
  bool spans_variety = false;
  bool within_bound() const { return generators.size() <= bound; }
};

/// Formal-derivative generators of tau(P o a). P is in variables 0..k-1;
/// throws when the additive list is dependent up to degree deg P.
TaylorResult taylor_generators(const PolyExpr& p, const std::vector<PolyExpr>& additive);

}  // namespace fakepoly
