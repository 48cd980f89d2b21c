// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fakepoly/cli/commands.hpp"
#include "fakepoly/decompose.hpp"
#include "fakepoly/formula.hpp"
#include "fakepoly/frechet.hpp"
#include "fakepoly/search.hpp"
#include "fakepoly/variety.hpp"
#include "oracles.hpp"

using namespace fakepoly;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

PolyExpr x(std::size_t i) { return PolyExpr::variable(i); }

PolyExpr cubes(std::size_t n) {
  PolyExpr f;
  for (std::size_t i = 0; i < n; ++i) f += x(i).pow(3);
  return f;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Outcome djokovic() {
  std::mt19937_64 rng(1001);
  std::size_t disagreements = 0, wrong_flip = 0, cases = 0;
  while (cases < 100) {
    PolyExpr f = oracle::random_polynomial(rng, 1 + rng() % 3, 5, 6);
    if (f.is_zero()) continue;
    ++cases;
    auto report = djokovic_consistency(f, 6);
    disagreements += report.disagreements.size();
    if (report.flip_point != std::optional<std::size_t>(*total_degree(f))) ++wrong_flip;
  }
  return {disagreements == 0 && wrong_flip == 0,
          std::to_string(cases) + " polynomials, n=0..6, disagreements=" + std::to_string(disagreements) +
              ", flip!=degree=" + std::to_string(wrong_flip)};
}

Outcome reconstruction() {
  std::mt19937_64 rng(1002);
  std::size_t bad_sum = 0, bad_form = 0;
  for (int trial = 0; trial < 100; ++trial) {
    PolyExpr f = oracle::random_polynomial(rng, 1 + rng() % 3, 5, 6);
    auto pol = polarize(f);
    PolyExpr sum(pol.constant);
    for (const auto& a : pol.forms) {
      if (!verify_multiadditive_symmetric(a)) ++bad_form;
      sum += diagonalize(a);
    }
    if (sum != f) ++bad_sum;
  }
  return {bad_sum == 0 && bad_form == 0, "100 polynomials, mismatches=" + std::to_string(bad_sum) +
                                             ", failed forms=" + std::to_string(bad_form)};
}

Outcome difference_identity() {
  PolyExpr got = apply_measure(difference_measure(GroupElement{1, 1}), cubes(2));
  // 3 sum x_i^2 y_i + sum (3 x_i y_i^2 + y_i^3) at y = (1, 1).
  PolyExpr expected;
  for (std::size_t i = 0; i < 2; ++i) expected += x(i).pow(2) * Rational(3) + x(i) * Rational(3) + 1;
  return {got == expected, "Delta_(1,1)(x1^3+x2^3) = " + got.render()};
}

Outcome projections() {
  std::vector<std::size_t> dims;
  bool ok = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    PolyExpr f = cubes(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto s = top_additive_slice(f, {GroupElement::unit(i), GroupElement::unit(i)});
      ok = ok && s.slice == x(i) && apply_measure(s.witness, f) == s.slice;
    }
    auto report = variety_dim(f, Subgroup::full(n));
    dims.push_back(report.additive_dim);
    ok = ok && report.additive_dim == n;
  }
  return {ok, "slices x_i with valid witnesses; additive dims N=1..8: " + join(dims)};
}

Outcome trichotomy() {
  std::string detail;
  bool ok = true;

  auto notgen = classify(FunctionFamily::schema(Formula::index_power(Formula::schema_coordinate())));
  ok = ok && notgen.verdict == Verdict::NotGeneralizedPolynomial && notgen.growth.has_value();
  if (notgen.growth) {
    const auto& dims = notgen.growth->dims;
    const auto& levels = notgen.growth->levels;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      ok = ok && dims[i] == levels[i] + 1 && (i == 0 || dims[i] > dims[i - 1]);
    }
    const auto& lv = notgen.estimates.front().level_values;
    std::vector<std::size_t> tail(lv.begin() + 2, lv.end());
    for (std::size_t i = 0; i < tail.size(); ++i) ok = ok && tail[i] == i + 4;
    detail += "sum_i x_i^i " + to_string(notgen.verdict) + " rank-1 dims at levels 3..8: " + join(tail);
  }

  auto fake = classify(FunctionFamily::schema(Formula::power(Formula::schema_coordinate(), 3)));
  ok = ok && fake.verdict == Verdict::FakePolynomial && fake.rank_table.has_value();
  if (fake.rank_table) {
    const auto& v = fake.rank_table->stable_values;
    const auto& a = fake.rank_table->additive_dims;
    ok = ok && v.size() == 3 && v[0] < v[1] && v[1] < v[2] && a[0] < a[1] && a[1] < a[2];
    for (const auto& e : fake.estimates) ok = ok && !e.exhausted_budget;
    detail += "; sum_i x_i^3 " + to_string(fake.verdict) + " stable values r=1..3: " + join(v) +
              " additive dims " + join(a);
  }

  auto poly = classify(FunctionFamily::concrete((x(0) + x(1)).pow(2)));
  ok = ok && poly.verdict == Verdict::Polynomial && poly.polynomial.has_value();
  if (poly.polynomial) {
    ok = ok && poly.polynomial->stable_value == 3 && poly.polynomial->taylor.spans_variety;
    detail += "; (x1+x2)^2 " + to_string(poly.verdict) + " stable value " +
              std::to_string(poly.polynomial->stable_value);
  }
  return {ok, detail};
}

Outcome taylor_bound() {
  std::mt19937_64 rng(1006);
  std::size_t cases = 0, bad = 0;
  while (cases < 20) {
    const std::size_t k = 1 + rng() % 2;
    const std::size_t n = 2;
    std::vector<PolyExpr> a;
    for (std::size_t j = 0; j < k; ++j) {
      PolyExpr lin;
      for (std::size_t i = 0; i < n; ++i) lin += x(i) * Rational(static_cast<long>(rng() % 7) - 3);
      a.push_back(lin);
    }
    PolyExpr p = oracle::random_polynomial(rng, k, 4, 5);
    if (p.is_zero()) continue;
    std::vector<std::vector<Rational>> rows;
    for (const auto& l : a) rows.push_back({l.coefficient(Monomial::variable(0)), l.coefficient(Monomial::variable(1))});
    if (oracle::dense_rank(rows) < k) continue;
    ++cases;
    auto t = taylor_generators(p, a);
    auto v = variety_dim(t.composed, Subgroup::full(n));
    if (t.rank != v.dimension || !t.within_bound()) ++bad;
  }
  return {bad == 0, std::to_string(cases) + " pairs (deg P<=4, k<=2), rank!=dim or over bound: " + std::to_string(bad)};
}

Outcome oracle_cross_check() {
  std::mt19937_64 rng(1007);
  auto shifts = oracle::box(2, -3, 3);
  shifts.push_back(GroupElement{5, -4});
  auto grid = oracle::box(2, -4, 4);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 30; ++trial) {
    PolyExpr f = oracle::random_polynomial(rng, 2, 4, 7);
    if (variety_dim(f, Subgroup::full(2)).dimension != oracle::translate_rank(f, shifts, grid)) ++mismatches;
  }
  return {mismatches == 0, "30 polynomials, " + std::to_string(shifts.size()) + " translates on a 9x9 grid, mismatches=" +
                               std::to_string(mismatches)};
}

Outcome determinism(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {false, "cannot read " + path};
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto first = cli::run_scenario(buffer.str());
  auto second = cli::run_scenario(buffer.str());
  const std::string a = first.report.dump(2), b = second.report.dump(2);
  return {a == b && first.exit_code == 0,
          std::to_string(first.report.size()) + " invocations, " + std::to_string(a.size()) + " bytes, identical=" +
              (a == b ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string scenario = argc > 1 ? argv[1] : FAKEPOLY_SCENARIO;
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "frechet forms agree", 30, djokovic},
      {2, "polarization reconstruction", 30, reconstruction},
      {3, "difference identity", 0, difference_identity},
      {4, "projections in the variety", 0, projections},
      {5, "trichotomy", 120, trichotomy},
      {6, "taylor bound", 0, taylor_bound},
      {7, "translate rank oracle", 0, oracle_cross_check},
      {8, "scenario determinism", 0, [&] { return determinism(scenario); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = out.ok && (c.limit_seconds == 0 || secs <= c.limit_seconds);
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2fs <= %.0fs", secs, c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    }
    std::printf("%s %d %s: %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), timing);
    if (!ok) ++failures;
  }
  return failures ? 1 : 0;
}
