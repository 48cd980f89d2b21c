#include "fakepoly/cli/report.hpp"

namespace fakepoly::cli {

std::string parameter_name(std::size_t var) { return "t" + std::to_string(var + 1); }

json to_json(const Subgroup& h) {
  json gens = json::array();
  for (const auto& col : h.generator_columns()) gens.push_back(col);
  json hermite = json::array();
  for (const auto& g : h.hermite_basis()) hermite.push_back(g.dense(h.ambient_dim()));
  return {{"ambient_dim", h.ambient_dim()},
          {"generators", gens},
          {"hermite_basis", hermite},
          {"rank", h.rank()}};
}

json to_json(const Measure& mu, std::size_t ambient) {
  json atoms = json::array();
  for (const auto& [at, w] : mu.atoms()) {
    atoms.push_back({{"at", at.dense(ambient)}, {"weight", to_string(w)}});
  }
  return atoms;
}

json to_json(const std::vector<PolyExpr>& polys, const PolyExpr::VariableNamer& namer) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.render(namer));
  return out;
}

json to_json(const VarietyReport& report) {
  return {{"subgroup", to_json(report.subgroup)},
          {"restricted", report.restricted.render(parameter_name)},
          {"dimension", report.dimension},
          {"basis", to_json(report.basis, parameter_name)},
          {"additive_dim", report.additive_dim},
          {"additive_basis", to_json(report.additive_basis, parameter_name)}};
}

json to_json(const DjokovicReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"n", e.n}, {"general", e.general}, {"equal", e.equal}, {"agree", e.agree()}});
  }
  json out = {{"entries", entries},
              {"consistent", report.consistent()},
              {"disagreements", report.disagreements}};
  out["flip_point"] = report.flip_point ? json(*report.flip_point) : json(nullptr);
  return out;
}

json to_json(const DifferenceDegree& d) {
  switch (d.status) {
    case DifferenceDegree::Status::Zero:
      return "none";
    case DifferenceDegree::Status::ExceedsCap:
      return "exceeds cap";
    case DifferenceDegree::Status::Found:
      return d.value;
  }
  return nullptr;
}

json to_json(const TaylorResult& t, const PolyExpr::VariableNamer& namer) {
  return {{"composed", t.composed.render(namer)},
          {"generators", to_json(t.generators, namer)},
          {"count", t.generators.size()},
          {"rank", t.rank},
          {"variety_dimension", t.variety_dimension},
          {"degree", t.degree},
          {"bound", t.bound},
          {"within_bound", t.within_bound()},
          {"spans_variety", t.spans_variety}};
}

json to_json(const DfEstimate& est) {
  json witnesses = json::array();
  for (const auto& w : est.level_witnesses) witnesses.push_back(to_json(w));
  return {{"r", est.r},
          {"value", est.value},
          {"lower_bound", true},
          {"witness", to_json(est.witness)},
          {"witness_level", est.witness_level},
          {"witness_additive_dim", est.witness_additive_dim},
          {"schedule_id", est.schedule_id},
          {"seed", est.seed},
          {"exhausted_budget", est.exhausted_budget},
          {"growth_detected", est.growth_detected},
          {"level_values", est.level_values},
          {"level_witnesses", witnesses},
          {"candidates_evaluated", est.candidates_evaluated}};
}

json to_json(const Classification& c) {
  json estimates = json::array();
  for (const auto& e : c.estimates) {
    estimates.push_back({{"r", e.r},
                         {"value", e.value},
                         {"level_values", e.level_values},
                         {"witness", to_json(e.witness)},
                         {"witness_additive_dim", e.witness_additive_dim},
                         {"exhausted_budget", e.exhausted_budget},
                         {"growth_detected", e.growth_detected}});
  }
  json cert = json::object();
  if (c.growth) {
    json ws = json::array();
    for (const auto& w : c.growth->witnesses) ws.push_back(to_json(w));
    cert["growth"] = {{"rank", c.growth->rank},
                      {"levels", c.growth->levels},
                      {"dims", c.growth->dims},
                      {"witnesses", ws}};
  }
  if (c.rank_table) {
    json ws = json::array();
    for (const auto& w : c.rank_table->witnesses) ws.push_back(to_json(w));
    cert["rank_table"] = {{"ranks", c.rank_table->ranks},
                          {"stable_values", c.rank_table->stable_values},
                          {"additive_dims", c.rank_table->additive_dims},
                          {"witnesses", ws}};
  }
  if (c.polynomial) {
    cert["polynomial"] = {{"stable_value", c.polynomial->stable_value},
                          {"witness", to_json(c.polynomial->witness)},
                          {"restricted", c.polynomial->restricted.render(parameter_name)},
                          {"taylor", to_json(c.polynomial->taylor, parameter_name)}};
  }
  return {{"verdict", to_string(c.verdict)},
          {"reason", c.reason},
          {"schedule_id", c.schedule.schedule_id()},
          {"seed", c.schedule.seed},
          {"levels", c.schedule.levels},
          {"max_rank", c.max_rank},
          {"estimates", estimates},
          {"certificate", cert}};
}

}  // namespace fakepoly::cli
