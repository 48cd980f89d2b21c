#include "fakepoly/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "fakepoly/cli/parser.hpp"
#include "fakepoly/cli/report.hpp"
#include "fakepoly/error.hpp"

namespace fakepoly::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

json report_header(const std::string& command) {
  return {{"tool", kToolName}, {"version", kToolVersion}, {"schema_version", kReportSchemaVersion},
          {"command", command}};
}

std::size_t parse_budget(const std::string& text, std::size_t fallback) {
  if (text == "default") return fallback;
  long long v = 0;
  try {
    std::size_t used = 0;
    v = std::stoll(text, &used);
    if (used != text.size()) throw UsageError("budget must be 'default' or a positive integer");
  } catch (const std::logic_error&) {
    throw UsageError("budget must be 'default' or a positive integer");
  }
  if (v <= 0) throw UsageError("budget must be positive");
  return static_cast<std::size_t>(v);
}

std::vector<PolyExpr> parse_additive_list(const std::string& text) {
  std::vector<PolyExpr> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_polynomial(item));
  return out;
}

json error_report(const std::string& command, const std::string& kind, const std::string& message,
                  int exit_code) {
  json report = report_header(command);
  report["error"] = {{"kind", kind}, {"message", message}};
  report["exit_code"] = exit_code;
  return report;
}

struct Options {
  std::string format = "json";

  std::string function;
  std::size_t cap = 16;
  std::size_t n = 0;
  bool both_forms = false;
  bool consistency = false;
  std::size_t n_max = 0;
  std::string slice;
  std::string increments;
  std::string subgroup;
  std::size_t r = 1;
  std::size_t levels = 8;
  std::size_t max_rank = 3;
  std::string budget = "default";
  std::uint64_t seed = 7;
  std::string descriptor;
  std::string p;
  std::string additive;
  std::string scenario_file;
};

json cmd_degree(const Options& o) {
  auto spec = parse_function(o.function);
  if (spec.is_schema()) throw UsageError("degree needs a concrete polynomial");
  const PolyExpr& f = spec.family.polynomial();
  json report = report_header("degree");
  report["input"] = spec.canonical();
  auto d = f.total_degree();
  report["result"] = {{"total_degree", d ? json(*d) : json("none")},
                      {"degree_by_differences", to_json(degree_by_differences(f, o.cap))},
                      {"cap", o.cap}};
  return report;
}

json cmd_frechet(const Options& o, const CLI::App& sub) {
  auto spec = parse_function(o.function);
  if (spec.is_schema()) throw UsageError("frechet needs a concrete polynomial");
  const PolyExpr& f = spec.family.polynomial();
  json report = report_header("frechet");
  report["input"] = spec.canonical();
  if (o.consistency) {
    auto limit = sub.count("--n-max") ? std::optional<std::size_t>(o.n_max) : std::nullopt;
    report["result"] = to_json(djokovic_consistency(f, limit));
    return report;
  }
  if (!sub.count("--n")) throw UsageError("frechet needs --n (or --consistency)");
  json result = {{"n", o.n}, {"general", frechet_general_test(f, o.n)}};
  if (o.both_forms) {
    result["equal"] = frechet_equal_test(f, o.n);
    result["agree"] = result["general"] == result["equal"];
  }
  report["result"] = result;
  return report;
}

json cmd_difference(const Options& o) {
  auto spec = parse_function(o.function);
  if (spec.is_schema()) throw UsageError("difference needs a concrete polynomial");
  const PolyExpr& f = spec.family.polynomial();
  Subgroup ys_matrix = parse_subgroup(o.increments);
  Measure mu = iterated_difference(ys_matrix.generators());
  const std::size_t ambient = std::max(f.variable_bound(), ys_matrix.ambient_dim());
  json report = report_header("difference");
  report["input"] = spec.canonical();
  report["result"] = {{"increments", ys_matrix.generator_columns()},
                      {"measure", to_json(mu, ambient)},
                      {"difference", apply_measure(mu, f).render()}};
  return report;
}

json cmd_decompose(const Options& o) {
  auto spec = parse_function(o.function);
  if (spec.is_schema()) throw UsageError("decompose needs a concrete polynomial");
  const PolyExpr& f = spec.family.polynomial();
  auto pol = polarize(f);
  json forms = json::array();
  PolyExpr rebuilt(pol.constant);
  for (const auto& a : pol.forms) {
    rebuilt += diagonalize(a);
    forms.push_back({{"arity", a.arity},
                     {"form", a.render()},
                     {"multiadditive_symmetric", verify_multiadditive_symmetric(a)}});
  }
  json result = {{"constant", to_string(pol.constant)},
                 {"forms", forms},
                 {"reconstructs", rebuilt == f}};
  if (!o.slice.empty()) {
    Subgroup ys_matrix = parse_subgroup(o.slice);
    auto slice = top_additive_slice(f, ys_matrix.generators());
    const std::size_t ambient = std::max(f.variable_bound(), ys_matrix.ambient_dim());
    result["slice"] = {{"increments", ys_matrix.generator_columns()},
                       {"additive", slice.slice.render()},
                       {"witness", to_json(slice.witness, ambient)},
                       {"witness_valid", apply_measure(slice.witness, f) == slice.slice}};
  }
  json report = report_header("decompose");
  report["input"] = spec.canonical();
  report["result"] = result;
  return report;
}

json cmd_variety(const Options& o) {
  auto spec = parse_function(o.function);
  Subgroup h;
  if (!o.subgroup.empty()) {
    h = parse_subgroup(o.subgroup);
  } else if (spec.is_schema()) {
    throw UsageError("variety-dim on a schema family needs --subgroup");
  } else {
    h = Subgroup::full(spec.family.ambient());
  }
  PolyExpr f = spec.family.materialize(std::max(h.ambient_dim(), spec.family.ambient()));
  json report = report_header("variety-dim");
  report["input"] = spec.canonical();
  report["result"] = to_json(variety_dim(f, h));
  return report;
}

json cmd_dfr(const Options& o) {
  auto spec = parse_function(o.function);
  if (o.levels == 0) throw UsageError("--levels must be positive");
  ScheduleBudget budget;
  budget.levels = o.levels;
  budget.random_per_level = parse_budget(o.budget, budget.random_per_level);
  budget.seed = o.seed;
  auto est = d_f_estimate(spec.family, o.r, budget);
  json report = report_header("dfr");
  report["input"] = spec.canonical();
  report["seed"] = budget.seed;
  report["schedule_id"] = est.schedule_id;
  report["result"] = to_json(est);
  return report;
}

json cmd_classify(const Options& o, int& exit_code) {
  auto spec = parse_function(o.function);
  if (o.levels == 0 || o.max_rank == 0) throw UsageError("--levels and --max-rank must be positive");
  ClassifyBudget budget;
  budget.levels = o.levels;
  budget.max_rank = o.max_rank;
  budget.random_per_level = parse_budget(o.budget, budget.random_per_level);
  budget.seed = o.seed;
  auto c = classify(spec.family, budget);
  json report = report_header("classify");
  report["input"] = spec.canonical();
  report["seed"] = budget.seed;
  report["schedule_id"] = c.schedule.schedule_id();
  report["result"] = to_json(c);
  report["verdict"] = to_string(c.verdict);
  if (c.verdict == Verdict::Inconclusive) exit_code = kExitInconclusive;
  return report;
}

json cmd_hom_dim(const Options& o) {
  auto g = GroupDescriptor::parse(o.descriptor);
  auto d = hom_dimension(g);
  json report = report_header("hom-dim");
  report["input"] = g.to_string();
  report["result"] = {{"group", g.to_string()},
                      {"dimension", d.infinite ? json("infinite") : json(d.value)}};
  return report;
}

json cmd_taylor(const Options& o) {
  PolyExpr p = parse_polynomial(o.p);
  auto additive = parse_additive_list(o.additive);
  auto t = taylor_generators(p, additive);
  json additive_text = json::array();
  for (const auto& a : additive) additive_text.push_back(a.render());
  json report = report_header("taylor");
  report["input"] = {{"p", p.render()}, {"additive", additive_text}};
  report["result"] = to_json(t);
  return report;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Exact calculus and classification of polynomial functions on Z^n and Z_omega.",
               kToolName};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* degree = app.add_subcommand("degree", "Total degree and degree by differences");
  degree->add_option("function", o.function)->required();
  degree->add_option("--cap", o.cap, "Largest n tried");

  auto* frechet = app.add_subcommand("frechet", "Symbolic Frechet tests");
  frechet->add_option("function", o.function)->required();
  frechet->add_option("--n", o.n, "Test Delta^(n+1) f = 0");
  frechet->add_flag("--both-forms", o.both_forms, "Also run the equal-increment form");
  frechet->add_flag("--consistency", o.consistency, "Both forms for every n <= n-max");
  frechet->add_option("--n-max", o.n_max, "Range for --consistency (default deg+2)");

  auto* decompose = app.add_subcommand("decompose", "Symmetric multiadditive decomposition");
  decompose->add_option("function", o.function)->required();
  decompose->add_option("--slice", o.slice, "Increments y2..yn as generator columns");

  auto* difference = app.add_subcommand("difference", "Apply Delta_{y1..yk} to f");
  difference->add_option("function", o.function)->required();
  difference->add_option("--y", o.increments, "Increments y1..yk as columns, e.g. [[1,1]]")->required();

  auto* variety = app.add_subcommand("variety-dim", "Dimension of the variety of f|_H");
  variety->add_option("function", o.function)->required();
  variety->add_option("--subgroup", o.subgroup, "Generator columns, e.g. [[1,0],[0,1]]");

  auto* dfr = app.add_subcommand("dfr", "Lower bound for d_f(r) over the subgroup schedule");
  dfr->add_option("function", o.function)->required();
  dfr->add_option("--r", o.r, "Rank bound")->required();
  dfr->add_option("--levels", o.levels, "Materialization levels");
  dfr->add_option("--budget", o.budget, "'default' or random candidates per rank and level");
  dfr->add_option("--seed", o.seed, "Schedule seed");

  auto* cls = app.add_subcommand("classify", "Polynomial / fake / not generalized");
  cls->add_option("function", o.function)->required();
  cls->add_option("--budget", o.budget, "'default' or random candidates per rank and level");
  cls->add_option("--seed", o.seed, "Schedule seed");
  cls->add_option("--levels", o.levels, "Materialization levels");
  cls->add_option("--max-rank", o.max_rank, "Largest rank searched");

  auto* hom = app.add_subcommand("hom-dim", "Dimension of Hom(G, Q)");
  hom->add_option("group", o.descriptor, "Z^n or Z_omega")->required();

  auto* taylor = app.add_subcommand("taylor", "Taylor generators of P(a1(x), ..., ak(x))");
  taylor->add_option("--p", o.p, "Polynomial P in x1..xk")->required();
  taylor->add_option("--additive", o.additive, "Comma-separated additive functions")->required();

  auto* scenario = app.add_subcommand("scenario", "Run a scenario file");
  scenario->add_option("file", o.scenario_file)->required();

  CommandResult result;
  std::string command = args.empty() ? "" : args.front();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    result.text = app.help();
    for (auto* sub : app.get_subcommands()) result.text = sub->help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitUsage;
    std::string message = e.what();
    if (!command.empty() && command.front() != '-' && app.get_subcommand_no_throw(command) == nullptr) {
      message = "unknown subcommand '" + command + "'";
    }
    result.report = error_report(command, "usage", message, result.exit_code);
    return result;
  }
  result.table = o.format == "table";

  try {
    if (degree->parsed()) {
      result.report = cmd_degree(o);
    } else if (frechet->parsed()) {
      result.report = cmd_frechet(o, *frechet);
    } else if (difference->parsed()) {
      result.report = cmd_difference(o);
    } else if (decompose->parsed()) {
      result.report = cmd_decompose(o);
    } else if (variety->parsed()) {
      result.report = cmd_variety(o);
    } else if (dfr->parsed()) {
      result.report = cmd_dfr(o);
    } else if (cls->parsed()) {
      result.report = cmd_classify(o, result.exit_code);
    } else if (hom->parsed()) {
      result.report = cmd_hom_dim(o);
    } else if (taylor->parsed()) {
      result.report = cmd_taylor(o);
    } else if (scenario->parsed()) {
      std::ifstream in(o.scenario_file);
      if (!in) throw UsageError("cannot read scenario file '" + o.scenario_file + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      auto inner = run_scenario(buffer.str());
      inner.table = result.table;
      return inner;
    }
  } catch (const ParseError& e) {
    result.exit_code = kExitParse;
    result.report = error_report(command, "parse", e.what(), result.exit_code);
    result.report["error"]["line"] = e.line();
    result.report["error"]["column"] = e.column();
    result.report["error"]["detail"] = e.detail();
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.report = error_report(command, "usage", e.what(), result.exit_code);
  } catch (const Error& e) {
    result.exit_code = kExitUsage;
    result.report = error_report(command, "domain", e.what(), result.exit_code);
  }
  if (result.table && !result.report.is_null()) result.text = render_table(result.report);
  return result;
}

std::vector<std::string> tokenize_invocation(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  bool in_token = false;
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quote) {
      if (c == quote) {
        quote = 0;
      } else if (c == '\\' && quote == '"' && i + 1 < line.size()) {
        current += line[++i];
      } else {
        current += c;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
      in_token = true;
    } else if (c == '\\' && i + 1 < line.size()) {
      current += line[++i];
      in_token = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_token) tokens.push_back(std::move(current));
      current.clear();
      in_token = false;
    } else {
      current += c;
      in_token = true;
    }
  }
  if (quote) throw ParseError("unterminated quote in scenario line", 1, line.size() + 1);
  if (in_token) tokens.push_back(std::move(current));
  if (!tokens.empty() && tokens.front() == kToolName) tokens.erase(tokens.begin());
  return tokens;
}

CommandResult run_scenario(std::string_view text) {
  CommandResult out;
  out.report = json::array();
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      // '#' inside quotes is not a comment.
      bool quoted = false;
      for (std::size_t i = 0; i < hash; ++i) {
        if (line[i] == '"') quoted = !quoted;
      }
      if (!quoted) line = line.substr(0, hash);
    }
    std::vector<std::string> args;
    try {
      args = tokenize_invocation(line);
    } catch (const ParseError& e) {
      json err = error_report("", "parse", e.what(), kExitParse);
      err["line"] = line_no;
      out.report.push_back(err);
      out.exit_code = std::max(out.exit_code, kExitParse);
      continue;
    }
    if (args.empty()) continue;
    if (args.front() == "scenario") {
      json err = error_report("scenario", "usage", "nested scenarios are not supported", kExitUsage);
      out.report.push_back(err);
      out.exit_code = std::max(out.exit_code, kExitUsage);
      continue;
    }
    auto r = run_command(args);
    json entry = r.report.is_null() ? json::object() : r.report;
    entry["scenario_line"] = line_no;
    entry["exit_code"] = r.exit_code;
    out.report.push_back(std::move(entry));
    out.exit_code = std::max(out.exit_code, r.exit_code);
  }
  return out;
}

std::string render_table(const nlohmann::json& report) {
  std::ostringstream os;
  auto emit = [&os](const json& r) {
    for (const char* key : {"command", "input", "verdict", "seed", "schedule_id"}) {
      if (r.contains(key)) os << key << ": " << (r[key].is_string() ? r[key].get<std::string>() : r[key].dump()) << '\n';
    }
    if (r.contains("error")) os << "error: " << r["error"]["message"].get<std::string>() << '\n';
    if (r.contains("result") && r["result"].is_object()) {
      for (const auto& [k, v] : r["result"].items()) {
        std::string value = v.is_string() ? v.get<std::string>() : v.dump();
        if (value.size() > 100) value = value.substr(0, 97) + "...";
        os << "  " << k << ": " << value << '\n';
      }
    }
  };
  if (report.is_array()) {
    for (const auto& r : report) {
      emit(r);
      os << '\n';
    }
  } else {
    emit(report);
  }
  return os.str();
}

}  // namespace fakepoly::cli
