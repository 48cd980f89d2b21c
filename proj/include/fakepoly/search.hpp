#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fakepoly/family.hpp"
#include "fakepoly/group.hpp"
#include "fakepoly/variety.hpp"

namespace fakepoly {

/// Deterministic subgroup schedule for d_f(r) lower bounds.
///
/// At materialization level L and rank r the schedule adds every coordinate
/// subgroup <e_S> with |S| = r and max S = L - 1, followed by
/// `random_per_level` pseudorandom L x r generator matrices with entries in
/// [-3, 3]. The rank-r schedule contains the whole rank-(r-1) schedule, so
/// estimates are nondecreasing in r and in L. Candidates are deduplicated by
/// Hermite normal form.
struct ScheduleBudget {
  std::size_t levels = 8;
  std::size_t random_per_level = 4;
  std::uint64_t seed = 7;
  /// Trailing equal values that count as stabilized across levels.
  std::size_t stable_levels = 3;

  std::string schedule_id() const;
};

struct DfEstimate {
  std::size_t r = 0;
  std::size_t value = 0;  // certified lower bound for d_f(r)
  Subgroup witness;
  std::size_t witness_level = 0;
  std::size_t witness_additive_dim = 0;
  std::string schedule_id;
  std::uint64_t seed = 0;
  /// Estimate still moving at the last level (no stabilization within budget).
  bool exhausted_budget = false;
  /// The trailing stable_levels values strictly increase: evidence of an
  /// unbounded supremum, never a proof.
  bool growth_detected = false;
  std::vector<std::size_t> level_values;  // cumulative estimate at levels 1..L
  std::vector<Subgroup> level_witnesses;
  std::size_t candidates_evaluated = 0;
};

/// Best dim tau(f|_H) over the rank <= r schedule.
DfEstimate d_f_estimate(const FunctionFamily& fam, std::size_t r, const ScheduleBudget& budget = {});

enum class Verdict { Polynomial, FakePolynomial, NotGeneralizedPolynomial, Inconclusive };

std::string to_string(Verdict v);

struct ClassifyBudget {
  std::size_t levels = 8;
  std::size_t max_rank = 3;
  std::size_t random_per_level = 4;
  std::uint64_t seed = 7;
  std::size_t stable_levels = 3;
  /// Trailing equal per-rank values that count as stabilized in r.
  std::size_t stable_ranks = 2;
};

struct GrowthCertificate {
  std::size_t rank = 0;
  std::vector<std::size_t> levels;
  std::vector<std::size_t> dims;
  std::vector<Subgroup> witnesses;
};

struct RankTableCertificate {
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> stable_values;
  std::vector<std::size_t> additive_dims;
  std::vector<Subgroup> witnesses;
};

struct PolynomialCertificate {
  std::size_t stable_value = 0;
  Subgroup witness;
  PolyExpr restricted;
  TaylorResult taylor;
};

struct Classification {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  ScheduleBudget schedule;  // effective schedule used
  std::size_t max_rank = 0;
  std::vector<DfEstimate> estimates;  // r = 1, 2, ...
  std::optional<GrowthCertificate> growth;
  std::optional<RankTableCertificate> rank_table;
  std::optional<PolynomialCertificate> polynomial;
};

/// Trichotomy by the growth pattern of d_f estimates. Concrete families on
/// Z^n (finite-dimensional Hom) get enough levels and ranks to show
/// stabilization past n.
Classification classify(const FunctionFamily& fam, const ClassifyBudget& budget = {});

}  // namespace fakepoly
