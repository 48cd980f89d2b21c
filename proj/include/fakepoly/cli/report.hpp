#pragma once

// JSON serialization of library results for CLI reports.

#include "json.hpp"

#include "fakepoly/decompose.hpp"
#include "fakepoly/frechet.hpp"
#include "fakepoly/group.hpp"
#include "fakepoly/search.hpp"
#include "fakepoly/variety.hpp"

namespace fakepoly::cli {

using nlohmann::json;

inline constexpr const char* kToolName = "fakepoly";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

/// Names for restricted polynomials: t1, t2, ...
std::string parameter_name(std::size_t var);

json to_json(const Subgroup& h);
json to_json(const Measure& mu, std::size_t ambient);
json to_json(const std::vector<PolyExpr>& polys, const PolyExpr::VariableNamer& namer = {});
json to_json(const VarietyReport& report);
json to_json(const DjokovicReport& report);
json to_json(const DifferenceDegree& d);
json to_json(const TaylorResult& t, const PolyExpr::VariableNamer& namer = {});
json to_json(const DfEstimate& est);
json to_json(const Classification& c);

}  // namespace fakepoly::cli
