#include "fakepoly/decompose.hpp"

#include <map>

#include "fakepoly/error.hpp"
#include "fakepoly/frechet.hpp"
#include "fakepoly/linalg.hpp"

namespace fakepoly {

std::string MultiadditiveForm::render() const {
  const std::size_t s = stride;
  return body.render([s](std::size_t v) {
    return "y" + std::to_string(v / s + 1) + "_" + std::to_string(v % s + 1);
  });
}

Polarization polarize(const PolyExpr& f) {
  Polarization out;
  out.constant = f.constant_term();
  const auto degree = f.total_degree();
  if (!degree || *degree == 0) return out;

  const BlockLayout layout = BlockLayout::for_polynomial(f);
  const std::size_t s = layout.stride;
  for (unsigned k = 1; k <= *degree; ++k) {
    PolyExpr fk = homogeneous_part(f, k);
    PolyExpr diff = general_iterated_difference(fk, layout, k);
    // Evaluate at x = o, then move increment block j to argument slot j - 1.
    PolyExpr at_origin = diff.filter_variables([s](std::size_t v) { return v >= s; });
    PolyExpr body = at_origin.rename([s](std::size_t v) { return v - s; });
    body *= 1 / factorial(k);
    out.forms.push_back({k, s, std::move(body)});
  }
  return out;
}

PolyExpr diagonalize(const MultiadditiveForm& a) {
  const std::size_t s = a.stride;
  return a.body.rename([s](std::size_t v) { return v % s; });
}

namespace {

PolyExpr swap_blocks(const MultiadditiveForm& a, std::size_t i, std::size_t j) {
  const std::size_t s = a.stride;
  return a.body.rename([=](std::size_t v) {
    std::size_t b = v / s;
    if (b == i) return j * s + v % s;
    if (b == j) return i * s + v % s;
    return v;
  });
}

}  // namespace

bool verify_multiadditive_symmetric(const MultiadditiveForm& a) {
  const std::size_t k = a.arity;
  const std::size_t s = a.stride;
  if (a.body.variable_bound() > k * s) return false;
  for (std::size_t j = 0; j < k; ++j) {
    // A(.., u + u', ..) - A(.., u, ..) - A(.., u', ..) with u' in spare block k.
    std::map<std::size_t, PolyExpr> images;
    for (std::size_t i = 0; i < s; ++i) {
      images.emplace(a.var(j, i), PolyExpr::variable(a.var(j, i)) + PolyExpr::variable(a.var(k, i)));
    }
    PolyExpr defect = a.body.substitute(images) - a.body - swap_blocks(a, j, k);
    if (!defect.is_zero()) return false;
  }
  for (std::size_t j = 0; j + 1 < k; ++j) {
    if (swap_blocks(a, j, j + 1) != a.body) return false;
  }
  return true;
}

AdditiveSlice top_additive_slice(const PolyExpr& f, const std::vector<GroupElement>& ys) {
  const auto degree = f.total_degree();
  if (!degree || *degree == 0) throw Error("top_additive_slice: f must be nonconstant");
  const unsigned n = *degree;
  if (ys.size() != n - 1) {
    throw Error("top_additive_slice: expected " + std::to_string(n - 1) +
                " increments (degree - 1), got " + std::to_string(ys.size()));
  }

  const MultiadditiveForm top = polarize(f).forms.back();
  std::map<std::size_t, PolyExpr> images;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < top.stride; ++i) {
      images.emplace(top.var(j, i), PolyExpr(Rational(static_cast<long>(ys[j - 1][i]))));
    }
  }
  AdditiveSlice out{top.body.substitute(images), {}};

  // Independent route through translates: g = Delta_{y2..yn} * f equals
  // n! * slice + c. The constant is removed with one more difference in a
  // direction where the slice does not vanish.
  const Measure chain = ys.empty() ? Measure::identity() : iterated_difference(ys);
  const PolyExpr g = apply_measure(chain, f);
  const Rational nfact = factorial(n);
  const Rational c = g.constant_term();
  if ((g - PolyExpr(c)) * (1 / nfact) != out.slice) {
    throw Error("top_additive_slice: difference route disagrees with polarization");
  }
  if (out.slice.is_zero()) return out;

  out.witness = chain * (1 / nfact);
  if (sgn(c) != 0) {
    const auto& [lead, lead_coeff] = *out.slice.terms().rbegin();
    const GroupElement w = GroupElement::unit(lead.entries().front().first);
    const Measure constant_maker = convolve(difference_measure(w), chain);
    out.witness -= constant_maker * Rational(c / (nfact * nfact * lead_coeff));
  }
  return out;
}

bool is_additive(const PolyExpr& p) {
  if (p.is_zero()) return false;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 1) return false;
  }
  return true;
}

std::vector<std::vector<unsigned>> multi_indices(std::size_t k, unsigned max_degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> alpha(k, 0);
  for (unsigned d = 0; d <= max_degree; ++d) {
    // Compositions of d into k parts, lexicographically descending.
    auto recurse = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
      if (pos + 1 == k) {
        alpha[pos] = remaining;
        out.push_back(alpha);
        return;
      }
      for (unsigned v = remaining + 1; v-- > 0;) {
        alpha[pos] = v;
        self(self, pos + 1, remaining - v);
      }
    };
    if (k == 0) {
      if (d == 0) out.emplace_back();
      continue;
    }
    recurse(recurse, 0, d);
  }
  return out;
}

bool monomial_independence_check(const std::vector<PolyExpr>& additive, unsigned deg_cap) {
  for (std::size_t i = 0; i < additive.size(); ++i) {
    if (!is_additive(additive[i])) {
      throw Error("monomial_independence_check: entry " + std::to_string(i + 1) +
                  " is not additive (homogeneous of degree 1)");
    }
  }
  linalg::EchelonBasis basis;
  for (const auto& alpha : multi_indices(additive.size(), deg_cap)) {
    PolyExpr product(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i]) product = product * additive[i].pow(alpha[i]);
    }
    if (!basis.insert(product)) return false;
  }
  return true;
}

}  // namespace fakepoly
