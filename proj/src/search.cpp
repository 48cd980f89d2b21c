#include "fakepoly/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "fakepoly/error.hpp"

namespace fakepoly {

std::string ScheduleBudget::schedule_id() const {
  std::ostringstream os;
  os << "nested-coord-random/v1:levels=" << levels << ":random=" << random_per_level
     << ":entries=[-3,3]:seed=" << seed;
  return os.str();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Polynomial:
      return "Polynomial";
    case Verdict::FakePolynomial:
      return "FakePolynomial";
    case Verdict::NotGeneralizedPolynomial:
      return "NotGeneralizedPolynomial";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool strictly_increasing_tail(const std::vector<std::size_t>& v, std::size_t window) {
  if (window == 0 || v.size() < window) return false;
  for (std::size_t i = v.size() - window + 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) return false;
  }
  return true;
}

bool constant_tail(const std::vector<std::size_t>& v, std::size_t window) {
  if (window == 0 || v.size() < window) return false;
  for (std::size_t i = v.size() - window + 1; i < v.size(); ++i) {
    if (v[i] != v[i - 1]) return false;
  }
  return true;
}

bool witness_less(const Subgroup& a, const Subgroup& b) {
  return a.hermite_basis() < b.hermite_basis();
}

/// Lazily built nested schedule with per-candidate evaluations.
class ScheduleSearch {
 public:
  ScheduleSearch(const FunctionFamily& fam, const ScheduleBudget& budget)
      : fam_(fam), budget_(budget) {}

  DfEstimate estimate(std::size_t r) {
    extend_to(r);
    DfEstimate est;
    est.r = r;
    est.schedule_id = budget_.schedule_id();
    est.seed = budget_.seed;

    for (std::size_t level = 1; level <= budget_.levels; ++level) {
      const Candidate* best = nullptr;
      for (const auto& c : candidates_) {
        if (!c.member(r, level)) continue;
        if (!best || c.dim > best->dim || (c.dim == best->dim && witness_less(c.group, best->group))) {
          best = &c;
        }
      }
      est.level_values.push_back(best ? best->dim : 0);
      est.level_witnesses.push_back(best ? best->group : Subgroup{});
      if (level == budget_.levels && best) {
        est.value = best->dim;
        est.witness = best->group;
        est.witness_level = best->level;
        est.witness_additive_dim = best->additive_dim;
      }
    }
    for (const auto& c : candidates_) {
      if (c.member(r, budget_.levels)) ++est.candidates_evaluated;
    }
    est.growth_detected = strictly_increasing_tail(est.level_values, budget_.stable_levels);
    est.exhausted_budget = !constant_tail(est.level_values, budget_.stable_levels);
    return est;
  }

 private:
  struct Candidate {
    Subgroup group;
    std::size_t level = 0;  // materialization level used for evaluation
    std::vector<std::pair<std::size_t, std::size_t>> entries;  // (rank, level)
    std::size_t dim = 0;
    std::size_t additive_dim = 0;

    bool member(std::size_t r, std::size_t level_cap) const {
      return std::any_of(entries.begin(), entries.end(),
                         [&](const auto& e) { return e.first <= r && e.second <= level_cap; });
    }
  };

  const PolyExpr& level_function(std::size_t level) {
    auto it = materialized_.find(level);
    if (it == materialized_.end()) it = materialized_.emplace(level, fam_.materialize(level)).first;
    return it->second;
  }

  void offer(std::vector<GroupElement> gens, std::size_t r, std::size_t level) {
    Subgroup h(std::move(gens), level);
    auto key = h.hermite_basis();
    auto found = index_.find(key);
    if (found != index_.end()) {
      candidates_[found->second].entries.emplace_back(r, level);
      return;
    }
    auto report = variety_dim(level_function(level), h);
    index_.emplace(std::move(key), candidates_.size());
    candidates_.push_back({std::move(h), level, {{r, level}}, report.dimension, report.additive_dim});
  }

  void extend_to(std::size_t r) {
    for (std::size_t rank = built_rank_ + 1; rank <= r; ++rank) {
      for (std::size_t level = 1; level <= budget_.levels; ++level) add_level(rank, level);
    }
    built_rank_ = std::max(built_rank_, r);
  }

  void add_level(std::size_t rank, std::size_t level) {
    // Coordinate subgroups first appearing at this level.
    if (rank <= level) {
      std::vector<std::size_t> pick(rank - 1);
      for (std::size_t i = 0; i + 1 < rank; ++i) pick[i] = i;
      const std::size_t pool = level - 1;
      while (true) {
        std::vector<GroupElement> gens;
        for (auto i : pick) gens.push_back(GroupElement::unit(i));
        gens.push_back(GroupElement::unit(level - 1));
        offer(std::move(gens), rank, level);
        // Next (rank-1)-subset of {0..pool-1} in lexicographic order.
        std::size_t k = pick.size();
        std::size_t pos = k;
        while (pos > 0 && pick[pos - 1] == pool - k + pos - 1) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t j = pos; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }

    std::mt19937_64 rng(splitmix64(budget_.seed ^ splitmix64(rank * 1000003ULL + level)));
    for (std::size_t m = 0; m < budget_.random_per_level; ++m) {
      std::vector<GroupElement> gens;
      for (std::size_t j = 0; j < rank; ++j) {
        GroupElement g;
        for (std::size_t i = 0; i < level; ++i) {
          g.set(i, static_cast<std::int64_t>(rng() % 7) - 3);
        }
        gens.push_back(std::move(g));
      }
      offer(std::move(gens), rank, level);
    }
  }

  const FunctionFamily& fam_;
  ScheduleBudget budget_;
  std::size_t built_rank_ = 0;
  std::vector<Candidate> candidates_;
  std::map<std::vector<GroupElement>, std::size_t> index_;
  std::map<std::size_t, PolyExpr> materialized_;
};

}  // namespace

DfEstimate d_f_estimate(const FunctionFamily& fam, std::size_t r, const ScheduleBudget& budget) {
  if (budget.levels == 0) throw Error("d_f_estimate: budget needs at least one level");
  if (r == 0) {
    // Only the trivial subgroup: the span of the constant f(o).
    DfEstimate est;
    est.schedule_id = budget.schedule_id();
    est.seed = budget.seed;
    est.value = sgn(fam.materialize(budget.levels).constant_term()) != 0 ? 1 : 0;
    est.witness = Subgroup({}, 0);
    est.level_values.assign(budget.levels, est.value);
    est.level_witnesses.assign(budget.levels, est.witness);
    est.exhausted_budget = !constant_tail(est.level_values, budget.stable_levels);
    return est;
  }
  ScheduleSearch search(fam, budget);
  return search.estimate(r);
}

Classification classify(const FunctionFamily& fam, const ClassifyBudget& budget) {
  if (budget.levels == 0 || budget.max_rank == 0 || budget.stable_levels == 0 ||
      budget.stable_ranks == 0) {
    throw Error("classify: budget fields must be positive");
  }
  Classification out;
  out.schedule = {budget.levels, budget.random_per_level, budget.seed, budget.stable_levels};
  out.max_rank = budget.max_rank;
  if (!fam.is_schema()) {
    // Hom(Z^n, Q) has dimension n: nothing new happens past level n or rank n.
    const std::size_t n = fam.ambient();
    out.schedule.levels = std::max(out.schedule.levels, n + budget.stable_levels - 1);
    out.max_rank = std::max(out.max_rank, n + budget.stable_ranks - 1);
  }

  ScheduleSearch search(fam, out.schedule);
  for (std::size_t r = 1; r <= out.max_rank; ++r) {
    out.estimates.push_back(search.estimate(r));
    const DfEstimate& est = out.estimates.back();
    if (r <= 2 && est.growth_detected) {
      GrowthCertificate cert;
      cert.rank = r;
      for (std::size_t level = 1; level <= est.level_values.size(); ++level) {
        cert.levels.push_back(level);
        cert.dims.push_back(est.level_values[level - 1]);
        cert.witnesses.push_back(est.level_witnesses[level - 1]);
      }
      out.verdict = Verdict::NotGeneralizedPolynomial;
      out.reason = "rank-" + std::to_string(r) + " estimates grow strictly across the last " +
                   std::to_string(budget.stable_levels) + " levels";
      out.growth = std::move(cert);
      return out;
    }
  }

  for (const auto& est : out.estimates) {
    if (est.exhausted_budget) {
      out.reason = "rank-" + std::to_string(est.r) + " estimate did not stabilize across levels";
      return out;
    }
  }

  RankTableCertificate table;
  for (const auto& est : out.estimates) {
    table.ranks.push_back(est.r);
    table.stable_values.push_back(est.value);
    table.additive_dims.push_back(est.witness_additive_dim);
    table.witnesses.push_back(est.witness);
  }

  if (constant_tail(table.stable_values, budget.stable_ranks)) {
    const DfEstimate& last = out.estimates.back();
    PolynomialCertificate cert;
    cert.stable_value = last.value;
    cert.witness = last.witness;
    cert.restricted = restrict(fam.materialize(last.witness_level), last.witness);
    std::vector<PolyExpr> coords;
    for (std::size_t j = 0; j < last.witness.hermite_basis().size(); ++j) {
      coords.push_back(PolyExpr::variable(j));
    }
    cert.taylor = taylor_generators(cert.restricted, coords);
    out.rank_table = std::move(table);
    if (cert.taylor.rank != cert.stable_value || !cert.taylor.within_bound() ||
        !cert.taylor.spans_variety) {
      out.reason = "stable value not matched by the Taylor generator set";
      out.polynomial = std::move(cert);
      return out;
    }
    out.verdict = Verdict::Polynomial;
    out.reason = "estimates stable in level and in the last " + std::to_string(budget.stable_ranks) +
                 " ranks";
    out.polynomial = std::move(cert);
    return out;
  }

  const bool growing = strictly_increasing_tail(table.stable_values, table.stable_values.size()) &&
                       strictly_increasing_tail(table.additive_dims, table.additive_dims.size());
  if (growing && table.stable_values.size() >= 2) {
    out.verdict = Verdict::FakePolynomial;
    out.reason = "each rank stabilizes across levels while stable values and additive dimensions "
                 "grow strictly with the rank";
  } else {
    out.reason = "per-rank values neither stabilize nor grow strictly";
  }
  out.rank_table = std::move(table);
  return out;
}

}  // namespace fakepoly
