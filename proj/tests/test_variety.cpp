#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "fakepoly/decompose.hpp"
#include "fakepoly/error.hpp"
#include "fakepoly/variety.hpp"
#include "oracles.hpp"

using namespace fakepoly;

namespace {

PolyExpr x(std::size_t i) { return PolyExpr::variable(i); }

PolyExpr cubes(std::size_t n) {
  PolyExpr f;
  for (std::size_t i = 0; i < n; ++i) f += x(i).pow(3);
  return f;
}

// Rank of a polynomial family through explicit coefficient rows.
std::size_t coefficient_rank(const std::vector<PolyExpr>& polys) {
  std::set<std::vector<unsigned>> seen;
  std::vector<Monomial> monomials;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) {
      std::vector<unsigned> key;
      for (const auto& [v, e] : m.entries()) {
        key.push_back(static_cast<unsigned>(v));
        key.push_back(e);
      }
      if (seen.insert(key).second) monomials.push_back(m);
    }
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : polys) {
    std::vector<Rational> row;
    for (const auto& m : monomials) row.push_back(p.coefficient(m));
    rows.push_back(std::move(row));
  }
  return oracle::dense_rank(std::move(rows));
}

std::set<std::string> rendered(const std::vector<PolyExpr>& polys) {
  std::set<std::string> out;
  for (const auto& p : polys) out.insert(p.render());
  return out;
}

}  // namespace

TEST_CASE("translate_span_basis examples") {
  auto sq = translate_span_basis(x(0).pow(2));
  REQUIRE(sq.size() == 3);
  CHECK(sq[0] == x(0).pow(2));
  CHECK(sq[1] == x(0) * Rational(2));
  CHECK(sq[2] == PolyExpr(1));

  auto c = translate_span_basis(PolyExpr(Rational(5, 3)));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == PolyExpr(Rational(5, 3)));

  // t1^3 + t2^3: span of {f, 3t1^2, 3t2^2, 3t1, 3t2, 1}.
  CHECK(translate_span_basis(cubes(2)).size() == 6);
  CHECK(translate_span_basis(PolyExpr{}).empty());
}

TEST_CASE("variety_dim examples") {
  CHECK(variety_dim(x(0).pow(2), Subgroup::full(1)).dimension == 3);
  CHECK(variety_dim(cubes(2), Subgroup::coordinate({0, 1}, 2)).dimension == 6);
  CHECK(variety_dim(PolyExpr{}, Subgroup::full(2)).dimension == 0);
  auto diag = variety_dim(cubes(2), Subgroup({{1, 1}}, 2));
  CHECK(diag.restricted == x(0).pow(3) * Rational(2));
  CHECK(diag.dimension == 4);
  CHECK(diag.additive_dim == 1);
}

TEST_CASE("additive_subspace_basis examples") {
  auto a = additive_subspace_basis({x(0).pow(2), x(0), PolyExpr(1)});
  REQUIRE(a.size() == 1);
  CHECK(a[0] == x(0));
  auto b = additive_subspace_basis({x(0) * x(1), x(0), x(1), PolyExpr(1)});
  CHECK(rendered(b) == std::set<std::string>{"x1", "x2"});
  CHECK(additive_subspace_basis({PolyExpr(1)}).empty());
  // The degree-one element hides inside combinations.
  auto hidden = additive_subspace_basis({x(0).pow(2) + x(1), x(0).pow(2) + 1, PolyExpr(1)});
  REQUIRE(hidden.size() == 1);
  CHECK(hidden[0] == x(1));
}

TEST_CASE("additive subspace of the cubic sum grows with N") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto report = variety_dim(cubes(n), Subgroup::full(n));
    CHECK(report.additive_dim == n);
    CHECK(report.dimension == 2 * n + 2);
    for (const auto& a : report.additive_basis) CHECK(is_additive(a));
  }
}

TEST_CASE("differences of the cubic sum have bounded varieties") {
  const GroupElement y{1, -2};
  std::vector<std::size_t> dims;
  for (std::size_t n = 2; n <= 7; ++n) {
    PolyExpr d = apply_measure(difference_measure(y), cubes(n));
    dims.push_back(variety_dim(d, Subgroup::full(n)).dimension);
  }
  CHECK(std::all_of(dims.begin(), dims.end(), [&](std::size_t v) { return v == dims.front(); }));
  CHECK(dims.front() == 4);
}

TEST_CASE("translate_combination") {
  PolyExpr q = x(0).pow(3) + x(0) * x(1);
  for (const auto& b : translate_span_basis(q)) {
    auto mu = translate_combination(q, b);
    REQUIRE(mu.has_value());
    CHECK(apply_measure(*mu, q) == b);
  }
  CHECK_FALSE(translate_combination(q, x(1).pow(2)).has_value());
  CHECK_FALSE(translate_combination(x(0).pow(2), x(1)).has_value());
}

TEST_CASE("property: translates stay in the span and basis vectors are independent") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t vars = 1 + rng() % 3;
    PolyExpr q = oracle::random_polynomial(rng, vars, 4, 6);
    auto basis = translate_span_basis(q);
    CHECK(coefficient_rank(basis) == basis.size());
    for (int k = 0; k < 20; ++k) {
      auto joined = basis;
      joined.push_back(q.translate(oracle::random_point(rng, vars, 5)));
      CHECK(coefficient_rank(joined) == basis.size());
    }
    for (const auto& b : basis) {
      auto mu = translate_combination(q, b);
      REQUIRE(mu.has_value());
      CHECK(apply_measure(*mu, q) == b);
    }
  }
}

TEST_CASE("property: variety dimension matches brute-force translate rank") {
  std::mt19937_64 rng(73);
  auto shifts = oracle::box(2, -2, 3);
  auto grid = oracle::box(2, -3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    PolyExpr f = oracle::random_polynomial(rng, 2, 3, 5);
    CHECK(variety_dim(f, Subgroup::full(2)).dimension == oracle::translate_rank(f, shifts, grid));
  }
}

TEST_CASE("taylor_generators examples") {
  auto cube = taylor_generators(x(0).pow(3), {x(0)});
  CHECK(rendered(cube.generators) == std::set<std::string>{"x1^3", "3*x1^2", "6*x1", "6"});
  CHECK(cube.bound == 4);
  CHECK(cube.within_bound());
  CHECK(cube.spans_variety);

  auto ab = taylor_generators(x(0) * x(1), {x(0), x(1)});
  CHECK(rendered(ab.generators) == std::set<std::string>{"x1*x2", "x2", "x1", "1"});
  CHECK(ab.bound == 9);
  CHECK(ab.spans_variety);

  auto c = taylor_generators(PolyExpr(4), {x(0)});
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0] == PolyExpr(4));
  CHECK(c.bound == 1);

  auto skew = taylor_generators(x(0).pow(2) * x(1), {x(0) + x(1), x(0) - x(1)});
  CHECK(skew.spans_variety);
  CHECK(skew.rank == skew.variety_dimension);

  CHECK_THROWS_AS(taylor_generators(x(0) * x(1), {x(0), x(0) * Rational(2)}), Error);
  CHECK_THROWS_AS(taylor_generators(x(0).pow(2), {x(0).pow(2)}), Error);
}

TEST_CASE("property: Taylor rank equals the variety dimension") {
  std::mt19937_64 rng(79);
  int checked = 0;
  while (checked < 15) {
    const std::size_t k = 1 + rng() % 2;
    const std::size_t n = k + rng() % 2;
    PolyExpr p = oracle::random_polynomial(rng, k, 4, 4, true);
    std::vector<PolyExpr> a;
    for (std::size_t j = 0; j < k; ++j) {
      PolyExpr lin;
      for (std::size_t i = 0; i < n; ++i) lin += x(i) * Rational(static_cast<long>(rng() % 7) - 3);
      a.push_back(lin);
    }
    bool independent = true;
    for (const auto& l : a) independent = independent && !l.is_zero();
    if (!independent || coefficient_rank(a) < k) continue;
    auto t = taylor_generators(p, a);
    CHECK(t.rank == variety_dim(t.composed, Subgroup::full(n)).dimension);
    CHECK(t.within_bound());
    CHECK(t.spans_variety);
    ++checked;
  }
}
