#include "fakepoly/frechet.hpp"

#include <algorithm>
#include <map>

#include "fakepoly/error.hpp"

namespace fakepoly {

BlockLayout BlockLayout::for_polynomial(const PolyExpr& f) {
  return {std::max<std::size_t>(1, f.variable_bound())};
}

PolyExpr symbolic_difference(const PolyExpr& g, const BlockLayout& layout, std::size_t block) {
  std::map<std::size_t, PolyExpr> images;
  for (std::size_t i = 0; i < layout.stride; ++i) {
    images.emplace(i, PolyExpr::variable(i) + PolyExpr::variable(layout.var(block, i)));
  }
  return g.substitute(images) - g;
}

PolyExpr general_iterated_difference(const PolyExpr& f, const BlockLayout& layout, std::size_t m) {
  // Delta_{y1..ym} = Delta_{y1} * (Delta_{y2..ym}); applying the factors one
  // block at a time equals the signed sum over all subsets of increments.
  PolyExpr g = f;
  for (std::size_t j = 1; j <= m && !g.is_zero(); ++j) g = symbolic_difference(g, layout, j);
  return g;
}

PolyExpr equal_iterated_difference(const PolyExpr& f, const BlockLayout& layout, std::size_t m) {
  PolyExpr out;
  for (std::size_t k = 0; k <= m; ++k) {
    std::map<std::size_t, PolyExpr> images;
    for (std::size_t i = 0; i < layout.stride; ++i) {
      images.emplace(i, PolyExpr::variable(i) +
                            PolyExpr::variable(layout.var(1, i)) * Rational(static_cast<long>(k)));
    }
    Rational weight(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
    if ((m - k) % 2 == 1) weight = -weight;
    out += f.substitute(images) * weight;
  }
  return out;
}

bool frechet_general_test(const PolyExpr& f, std::size_t n) {
  return general_iterated_difference(f, BlockLayout::for_polynomial(f), n + 1).is_zero();
}

bool frechet_equal_test(const PolyExpr& f, std::size_t n) {
  return equal_iterated_difference(f, BlockLayout::for_polynomial(f), n + 1).is_zero();
}

DjokovicReport djokovic_consistency(const PolyExpr& f, std::optional<std::size_t> n_max) {
  const std::size_t limit = n_max.value_or(f.total_degree().value_or(0) + 2);
  DjokovicReport report;
  for (std::size_t n = 0; n <= limit; ++n) {
    DjokovicEntry e{n, frechet_general_test(f, n), frechet_equal_test(f, n)};
    if (!e.agree()) report.disagreements.push_back(n);
    if (!report.flip_point && e.general && e.equal) report.flip_point = n;
    report.entries.push_back(e);
  }
  return report;
}

DifferenceDegree degree_by_differences(const PolyExpr& f, std::size_t cap) {
  if (f.is_zero()) return {DifferenceDegree::Status::Zero, 0};
  for (std::size_t n = 0; n <= cap; ++n) {
    if (frechet_equal_test(f, n)) return {DifferenceDegree::Status::Found, n};
  }
  return {DifferenceDegree::Status::ExceedsCap, 0};
}

}  // namespace fakepoly
