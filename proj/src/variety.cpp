#include "fakepoly/variety.hpp"

#include <algorithm>
#include <map>

#include "fakepoly/decompose.hpp"
#include "fakepoly/error.hpp"
#include "fakepoly/linalg.hpp"

namespace fakepoly {

std::vector<PolyExpr> translate_span_basis(const PolyExpr& q) {
  linalg::EchelonBasis echelon;
  std::vector<PolyExpr> basis;
  for (auto& term : shift_expand(q)) {
    if (echelon.insert(term.coefficient)) basis.push_back(std::move(term.coefficient));
  }
  return basis;
}

namespace {

// Dense coefficient matrix: one row per monomial, one column per polynomial.
linalg::Matrix coefficient_matrix(const std::vector<PolyExpr>& polys,
                                  const std::vector<Monomial>& monomials) {
  linalg::Matrix m(monomials.size(), std::vector<Rational>(polys.size()));
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    for (std::size_t c = 0; c < polys.size(); ++c) m[r][c] = polys[c].coefficient(monomials[r]);
  }
  return m;
}

std::vector<Monomial> support_of(const std::vector<PolyExpr>& polys,
                                 bool (*keep)(const Monomial&)) {
  std::map<Monomial, bool, GradedLexLess> seen;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) {
      if (keep(m)) seen.emplace(m, true);
    }
  }
  std::vector<Monomial> out;
  for (const auto& [m, unused] : seen) out.push_back(m);
  return out;
}

}  // namespace

std::vector<PolyExpr> additive_subspace_basis(const std::vector<PolyExpr>& basis) {
  if (basis.empty()) return {};
  // Combinations whose non-linear coefficients cancel are exactly the
  // degree-one elements of the span.
  auto nonlinear = support_of(basis, [](const Monomial& m) { return m.degree() != 1; });
  auto kernel = linalg::nullspace(coefficient_matrix(basis, nonlinear), basis.size());
  std::vector<PolyExpr> additive;
  for (const auto& c : kernel) {
    PolyExpr g;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (sgn(c[j]) != 0) g += basis[j] * c[j];
    }
    additive.push_back(std::move(g));
  }
  return linalg::canonical_basis(additive);
}

VarietyReport variety_dim(const PolyExpr& f, const Subgroup& h) {
  VarietyReport report;
  report.subgroup = h;
  report.restricted = restrict(f, h);
  report.basis = translate_span_basis(report.restricted);
  report.dimension = report.basis.size();
  report.additive_basis = additive_subspace_basis(report.basis);
  report.additive_dim = report.additive_basis.size();
  return report;
}

std::optional<Measure> translate_combination(const PolyExpr& q, const PolyExpr& target) {
  if (target.is_zero()) return Measure{};
  if (q.is_zero()) return std::nullopt;
  const std::size_t k = q.variable_bound();
  const unsigned d = q.total_degree().value_or(0);

  // Shifts s in {0..d}^k: s -> s^beta (|beta| <= d) is injective on this
  // grid, so these translates already span the whole translate space.
  std::vector<GroupElement> shifts;
  std::vector<std::int64_t> s(k, 0);
  while (true) {
    shifts.emplace_back(s);
    std::size_t pos = 0;
    while (pos < k && s[pos] == d) s[pos++] = 0;
    if (pos == k) break;
    ++s[pos];
  }

  std::vector<PolyExpr> translates;
  translates.reserve(shifts.size());
  for (const auto& shift : shifts) translates.push_back(q.translate(shift));
  std::vector<PolyExpr> all = translates;
  all.push_back(target);
  auto monomials = support_of(all, [](const Monomial&) { return true; });
  auto m = coefficient_matrix(translates, monomials);
  std::vector<Rational> rhs(monomials.size());
  for (std::size_t r = 0; r < monomials.size(); ++r) rhs[r] = target.coefficient(monomials[r]);
  auto solution = linalg::solve(m, translates.size(), rhs);
  if (!solution) return std::nullopt;

  // mu * q (x) = sum_y q(x - y) mu(y): shift s sits at atom -s.
  Measure mu;
  for (std::size_t j = 0; j < shifts.size(); ++j) mu.add_atom(-shifts[j], (*solution)[j]);
  return mu;
}

TaylorResult taylor_generators(const PolyExpr& p, const std::vector<PolyExpr>& additive) {
  const std::size_t k = additive.size();
  if (p.variable_bound() > k) {
    throw Error("taylor_generators: P uses " + std::to_string(p.variable_bound()) +
                " variables but only " + std::to_string(k) + " additive functions were given");
  }
  const unsigned deg_p = p.total_degree().value_or(0);
  if (!monomial_independence_check(additive, deg_p)) {
    throw Error("taylor_generators: additive functions are linearly dependent");
  }

  std::map<std::size_t, PolyExpr> images;
  for (std::size_t j = 0; j < k; ++j) images.emplace(j, additive[j]);

  TaylorResult out;
  out.composed = p.substitute(images);
  out.degree = out.composed.total_degree().value_or(0);
  out.bound = 1;
  for (std::size_t j = 0; j < k; ++j) out.bound *= out.degree + 1;

  for (const auto& alpha : multi_indices(k, deg_p)) {
    PolyExpr d = p;
    for (std::size_t j = 0; j < k && !d.is_zero(); ++j) {
      for (unsigned e = 0; e < alpha[j]; ++e) d = d.derivative(j);
    }
    if (d.is_zero()) continue;
    PolyExpr g = d.substitute(images);
    if (std::find(out.generators.begin(), out.generators.end(), g) == out.generators.end()) {
      out.generators.push_back(std::move(g));
    }
  }
  out.rank = linalg::polynomial_rank(out.generators);

  const auto tau = translate_span_basis(out.composed);
  out.variety_dimension = tau.size();
  std::vector<PolyExpr> joined = tau;
  joined.insert(joined.end(), out.generators.begin(), out.generators.end());
  out.spans_variety = out.rank == tau.size() && linalg::polynomial_rank(joined) == tau.size();
  return out;
}

}  // namespace fakepoly
