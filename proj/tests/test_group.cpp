#include "doctest.h"

#include <algorithm>
#include <random>

#include "fakepoly/error.hpp"
#include "fakepoly/group.hpp"
#include "oracles.hpp"

using namespace fakepoly;

namespace {

PolyExpr x(std::size_t i) { return PolyExpr::variable(i); }

Measure random_measure(std::mt19937_64& rng, std::size_t n) {
  Measure m;
  const std::size_t atoms = 1 + rng() % 4;
  for (std::size_t i = 0; i < atoms; ++i) {
    m.add_atom(oracle::random_point(rng, n, 2), rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(1 + rng() % 3)));
  }
  return m;
}

}  // namespace

TEST_CASE("convolve") {
  GroupElement a{2, -1}, b{0, 5};
  CHECK(convolve(Measure::delta(a), Measure::delta(b)) == Measure::delta(a + b));

  Measure d1 = difference_measure(GroupElement{1});
  Measure expected;
  expected.add_atom(GroupElement{-2}, 1);
  expected.add_atom(GroupElement{-1}, -2);
  expected.add_atom(GroupElement{0}, 1);
  CHECK(convolve(d1, d1) == expected);

  Measure mu = Measure::delta(a, Rational(3, 2)) + Measure::delta(b, -4);
  CHECK(convolve(mu, Measure::identity()) == mu);
}

TEST_CASE("difference_measure") {
  Measure d = difference_measure(GroupElement{1});
  CHECK(d[GroupElement{-1}] == 1);
  CHECK(d[GroupElement{}] == -1);
  CHECK(d.atoms().size() == 2);
  CHECK(difference_measure(GroupElement{}).is_zero());
  Measure d2 = difference_measure(GroupElement{1, -2});
  CHECK(d2[GroupElement{-1, 2}] == 1);
  CHECK(d2[GroupElement{0, 0}] == -1);
}

TEST_CASE("iterated_difference") {
  GroupElement one{1};
  CHECK(iterated_difference({one, one}) == convolve(difference_measure(one), difference_measure(one)));
  CHECK(iterated_difference({GroupElement{3, 1}, GroupElement{}}).is_zero());
  std::vector<GroupElement> ys{{1, 0}, {0, 2}, {-1, 1}};
  auto base = iterated_difference(ys);
  std::sort(ys.begin(), ys.end());
  do {
    CHECK(iterated_difference(ys) == base);
  } while (std::next_permutation(ys.begin(), ys.end()));
  CHECK_THROWS_WITH_AS(iterated_difference({}), "empty difference chain", Error);
}

TEST_CASE("apply_measure") {
  CHECK(apply_measure(difference_measure(GroupElement{1}), x(0).pow(2)) == x(0) * Rational(2) + 1);
  CHECK(apply_measure(difference_measure(GroupElement{4, -2}), PolyExpr(7)).is_zero());
  PolyExpr f = x(0).pow(3) + x(1).pow(3);
  PolyExpr expected = x(0).pow(2) * Rational(3) + x(0) * Rational(3) + x(1).pow(2) * Rational(3) + x(1) * Rational(3) + 2;
  CHECK(apply_measure(difference_measure(GroupElement{1, 1}), f) == expected);
}

TEST_CASE("subgroup_rank") {
  CHECK(subgroup_rank(Subgroup({{2, 0}, {0, 3}}, 2)) == 2);
  CHECK(subgroup_rank(Subgroup({{1, 2}, {2, 4}}, 2)) == 1);
  CHECK(subgroup_rank(Subgroup({}, 3)) == 0);
}

TEST_CASE("Hermite form identifies equal lattices") {
  CHECK(Subgroup({{1, 0}, {0, 1}}, 2) == Subgroup({{1, 1}, {0, 1}}, 2));
  CHECK(Subgroup({{1, 0}, {0, 1}}, 2) == Subgroup({{2, 3}, {1, 2}}, 2));
  CHECK_FALSE(Subgroup({{1, 0}, {0, 1}}, 2) == Subgroup({{2, 0}, {0, 1}}, 2));
  CHECK(Subgroup({{2, 4}}, 2) == Subgroup({{-2, -4}, {0, 0}}, 2));
  Subgroup h({{4, 6}, {6, 9}}, 2);
  REQUIRE(h.hermite_basis().size() == 1);
  CHECK(h.hermite_basis()[0] == GroupElement{2, 3});
}

TEST_CASE("property: rank is invariant under column operations") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t k = 1 + rng() % 4;
    std::vector<GroupElement> gens;
    for (std::size_t j = 0; j < k; ++j) gens.push_back(oracle::random_point(rng, n, 3));
    Subgroup h(gens, n);
    auto moved = gens;
    std::shuffle(moved.begin(), moved.end(), rng);
    if (k >= 2) moved[0] += static_cast<std::int64_t>(rng() % 5 - 2) * moved[1];
    Subgroup h2(moved, n);
    CHECK(h.rank() == h2.rank());
    CHECK(h == h2);
    CHECK(h.hermite_basis().size() == h.rank());
  }
}

TEST_CASE("restrict") {
  PolyExpr f = x(0).pow(3) + x(1).pow(3);
  CHECK(restrict(f, Subgroup({{1, 1}}, 2)) == x(0).pow(3) * Rational(2));
  CHECK(restrict(f, Subgroup::full(2)) == f);
  CHECK(restrict(x(0).pow(2), Subgroup({{0, 1}}, 2)).is_zero());
}

TEST_CASE("hom_dimension") {
  CHECK(hom_dimension(GroupDescriptor::parse("Z^3")) == HomDimension{false, 3});
  CHECK(hom_dimension(GroupDescriptor::parse("Z_omega")).infinite);
  CHECK(hom_dimension(GroupDescriptor::free(0)) == HomDimension{false, 0});
  CHECK_THROWS_AS(GroupDescriptor::parse("Z/2"), Error);
}

TEST_CASE("property: convolution is associative and commutative") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_measure(rng, 2), b = random_measure(rng, 2), c = random_measure(rng, 2);
    CHECK(convolve(a, b) == convolve(b, a));
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
  }
}

TEST_CASE("property: the action is a module action") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    auto mu = random_measure(rng, 3), nu = random_measure(rng, 3);
    PolyExpr f = oracle::random_polynomial(rng, 3, 4);
    CHECK(apply_measure(convolve(mu, nu), f) == apply_measure(mu, apply_measure(nu, f)));
    // Pointwise oracle: (mu * f)(x) = sum_y f(x - y) mu(y).
    GroupElement at = oracle::random_point(rng, 3);
    Rational direct;
    for (const auto& [y, w] : mu.atoms()) direct += f.evaluate(at - y) * w;
    CHECK(apply_measure(mu, f).evaluate(at) == direct);
  }
}

TEST_CASE("property: n+1 differences annihilate degree <= n") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = rng() % 5;
    PolyExpr f = oracle::random_polynomial(rng, 2, n, 6);
    GroupElement y = oracle::random_point(rng, 2);
    std::vector<GroupElement> ys(n + 1, y);
    CHECK(apply_measure(iterated_difference(ys), f).is_zero());
  }
}
