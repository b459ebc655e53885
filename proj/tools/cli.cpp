#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "netwave/analysis.hpp"
#include "netwave/checks/suite.hpp"
#include "netwave/error.hpp"
#include "netwave/io.hpp"

namespace netwave::cli {

namespace {

struct ScheduleFlags {
  std::string algorithm;
  int path = 1;
  int period = 0;
  int t1 = 0;
  int t2 = 0;
  int repeats = 1;
  int repeats1 = 1;
  int repeats2 = 1;

  void attach(CLI::App* sub) {
    sub->add_option("--algorithm", algorithm, "primary, equal or unequal")
        ->check(CLI::IsMember({"primary", "equal", "unequal"}));
    sub->add_option("--path", path, "path for a primary schedule")->check(CLI::Range(1, 2));
    sub->add_option("--period", period, "spacing for a primary schedule (default intrinsic)");
    sub->add_option("--t1", t1, "path 1 spacing (default intrinsic)");
    sub->add_option("--t2", t2, "path 2 spacing (default intrinsic)");
    sub->add_option("--repeats", repeats, "traversals per period, equal opportunity");
    sub->add_option("--repeats1", repeats1, "path 1 activations per period, unequal opportunity");
    sub->add_option("--repeats2", repeats2, "path 2 activations per period, unequal opportunity");
  }

  Schedule build(const PathPair& pair) const {
    const std::string algo = algorithm.empty() ? (pair.path_count() == 1 ? "primary" : "equal") : algorithm;
    if (algo == "primary") {
      return schedule_primary(pair, path, period > 0 ? std::optional<int>(period) : std::nullopt);
    }
    if (pair.path_count() != 2) throw DomainError(algo + " schedules need two paths");
    const int s1 = t1 > 0 ? t1 : intrinsic_period(pair, 1);
    const int s2 = t2 > 0 ? t2 : intrinsic_period(pair, 2);
    if (algo == "equal") return schedule_pair_equal(pair, s1, s2, repeats);
    return schedule_pair_unequal(pair, s1, s2, repeats1, repeats2);
  }
};

json path_analysis(const PathPair& pair, int id) {
  const auto nodes = pair.path_nodes(id);
  const RuleReport rules = validate_path_rules(pair, id);
  json reachable = json::array();
  for (int t = 1; t <= pair.path(id).n_senders; ++t) {
    if (is_reachable_period(pair, id, t)) reachable.push_back(t);
  }
  json j = {{"path_id", id},
            {"n_senders", pair.path(id).n_senders},
            {"intensity", analyze_set(pair, nodes)},
            {"rules", rules},
            {"continuity", rules.holds() ? json(check_continuity(pair, id)) : json(nullptr)},
            {"intrinsic_period", intrinsic_period(pair, id)},
            {"reachable_periods", reachable}};
  if (is_dominant(pair, nodes)) j["dominant_split"] = split_dominant(pair, nodes);
  return j;
}

json analysis_json(const PathPair& pair) {
  json paths = json::array();
  for (const auto& p : pair.paths()) paths.push_back(path_analysis(pair, p.id));
  json j = {{"paths", paths}};
  if (pair.path_count() == 2) {
    const auto all = pair.all_nodes();
    j["joint"] = analyze_set(pair, all);
    if (is_dominant(pair, all)) j["joint"]["dominant_split"] = split_dominant(pair, all);
  }
  return j;
}

BinaryMatrix read_matrix(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(file + ": " + e.what());
    }
    const json& rows = doc.is_object() ? doc.at("entries") : doc;
    try {
      return rows.get<BinaryMatrix>();
    } catch (const json::exception& e) {
      throw ConfigError(file + ": " + e.what());
    } catch (const DomainError& e) {
      throw ConfigError(file + ": " + e.what());
    }
  }
  std::vector<std::vector<int>> rows;
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    std::vector<int> row;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        row.push_back(ch - '0');
      } else if (ch != ' ' && ch != '\t' && ch != '\r' && ch != ',') {
        throw ConfigError(file + ":" + std::to_string(number) + ": unexpected character '" + ch + "'");
      }
    }
    if (!row.empty()) rows.push_back(row);
  }
  try {
    return BinaryMatrix::from_rows(rows);
  } catch (const DomainError& e) {
    throw ConfigError(file + ": " + e.what());
  }
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic wave scheduling for one or two multi-hop paths", "netwave"};
  app.require_subcommand(1);

  std::string scenario_file;
  bool text = false;
  auto scenario_command = [&](const std::string& name, const std::string& about) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("scenario", scenario_file, "scenario JSON file")->required();
    sub->add_flag("--text", text, "print the ASCII view instead of JSON");
    return sub;
  };

  CLI::App* analyze = scenario_command("analyze", "intensities, degrees, rules and periods");
  analyze->remove_option(analyze->get_option("--text"));

  CLI::App* matrix = scenario_command("matrix", "joint concurrency matrix of a pair");
  int m_t1 = 0;
  int m_t2 = 0;
  int m_r1 = 1;
  int m_r2 = 1;
  matrix->add_option("--t1", m_t1, "path 1 spacing (default intrinsic)");
  matrix->add_option("--t2", m_t2, "path 2 spacing (default intrinsic)");
  matrix->add_option("--repeat-rows", m_r1, "continuation: vertical copies");
  matrix->add_option("--repeat-cols", m_r2, "continuation: horizontal copies");

  CLI::App* support = app.add_subcommand("support", "maximum supporting set of a binary matrix");
  std::string matrix_file;
  support->add_option("matrix", matrix_file, "JSON rows or an ASCII 0/1 grid")->required();

  ScheduleFlags sched_flags;
  CLI::App* schedule = scenario_command("schedule", "build a periodic beat schedule");
  sched_flags.attach(schedule);

  ScheduleFlags sim_flags;
  CLI::App* simulate = scenario_command("simulate", "run a schedule with saturated sources");
  simulate->remove_option(simulate->get_option("--text"));
  sim_flags.attach(simulate);
  int periods = 10;
  int warmup = -1;
  bool trace = false;
  std::string buffers;
  simulate->add_option("--periods", periods, "measured periods")->check(CLI::PositiveNumber);
  simulate->add_option("--warmup", warmup, "warmup periods (default: schedule-dependent)");
  simulate->add_flag("--trace", trace, "per-beat JSON lines and a space-time diagram");
  simulate->add_option("--buffers", buffers, "single or queue (default: schedule-dependent)")
      ->check(CLI::IsMember({"single", "queue"}));

  CLI::App* opt = scenario_command("optimize", "search routes, periods and activation counts");
  opt->remove_option(opt->get_option("--text"));
  int max_activations = 0;
  std::vector<int> range1;
  std::vector<int> range2;
  int max_hops = 0;
  opt->add_option("--max-activations", max_activations, "upper bound for L1 and L2");
  opt->add_option("--t1-range", range1, "path 1 spacing range LOW HIGH")->expected(2);
  opt->add_option("--t2-range", range2, "path 2 spacing range LOW HIGH")->expected(2);
  opt->add_option("--max-hops", max_hops, "hop bound for route enumeration");

  CLI::App* verify = app.add_subcommand("verify", "run the randomized property checks");
  checks::SuiteConfig config;
  int only = 0;
  verify->add_option("--seed", config.seed, "corpus seed");
  verify->add_option("--instances", config.instances, "corpus size")->check(CLI::PositiveNumber);
  verify->add_option("--check", only, "run a single check by id")->check(CLI::Range(1, 10));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (support->parsed()) {
      const BinaryMatrix m = read_matrix(matrix_file);
      const SupportSet s = max_support_set(m);
      print(out, {{"matrix", m}, {"support_number", s.size()}, {"witness", s}});
      return kOk;
    }
    if (verify->parsed()) {
      std::vector<checks::CriterionResult> results;
      if (only != 0) {
        results.push_back(checks::run_criterion(only, config));
      } else {
        results = checks::run_suite(config);
      }
      int failed = 0;
      for (const auto& r : results) {
        out << checks::format_result(r) << '\n';
        failed += r.passed ? 0 : 1;
      }
      out << results.size() - static_cast<std::size_t>(failed) << " of " << results.size()
          << " checks passed (seed " << config.seed << ", " << config.instances << " instances)\n";
      return failed == 0 ? kOk : kFailed;
    }

    Scenario scenario = load_scenario(scenario_file);
    if (opt->parsed()) {
      if (max_hops > 0) scenario.search.max_hops = max_hops;
      SearchSpace space = default_space(scenario);
      if (max_activations > 0) space.max_activations = max_activations;
      if (!range1.empty()) space.period_range[1] = {range1[0], range1[1]};
      if (!range2.empty()) space.period_range[2] = {range2[0], range2[1]};
      print(out, result_json(optimize(scenario, space)));
      return kOk;
    }

    const PathPair pair = scenario_pair(scenario);
    if (analyze->parsed()) {
      print(out, analysis_json(pair));
      return kOk;
    }
    if (matrix->parsed()) {
      if (pair.path_count() != 2) throw DomainError("the matrix needs two paths");
      const ConcurrencyMatrix c = build_matrix(pair, m_t1 > 0 ? m_t1 : intrinsic_period(pair, 1),
                                               m_t2 > 0 ? m_t2 : intrinsic_period(pair, 2));
      const BinaryMatrix tiled = continuation(c.entries, m_r1, m_r2);
      if (text) {
        out << tiled.to_grid();
        return kOk;
      }
      json j = {{"matrix", c}, {"grid", c.entries.to_grid()}};
      if (m_r1 != 1 || m_r2 != 1) {
        j["continuation"] = {{"repeat_rows", m_r1}, {"repeat_cols", m_r2}, {"entries", tiled}};
      }
      print(out, j);
      return kOk;
    }
    if (schedule->parsed()) {
      const Schedule s = sched_flags.build(pair);
      const AuditReport audit = audit_schedule(pair, s);
      if (text) {
        out << timeline(pair, s);
      } else {
        print(out, {{"schedule", s}, {"audit", {{"valid", audit.valid}, {"issues", audit.issues}}}});
      }
      return audit.valid ? kOk : kFailed;
    }
    if (simulate->parsed()) {
      const Schedule s = sim_flags.build(pair);
      SimOptions options;
      options.trace = trace;
      if (!buffers.empty()) options.buffers = buffers == "single" ? BufferPolicy::Single : BufferPolicy::Queue;
      const int w = warmup >= 0 ? warmup : default_warmup(pair, s);
      SimReport r = run(pair, s, periods, w, options);
      json report = {{"schedule", s},
                     {"warmup_periods", w},
                     {"predicted_throughput", predicted_throughput(s)},
                     {"report", r}};
      if (trace) {
        for (const auto& bt : r.trace) out << json(bt).dump() << '\n';
        report["report"].erase("trace");
        out << report.dump() << '\n' << space_time_diagram(pair, r);
      } else {
        print(out, report);
      }
      const bool ok = r.violation_count == 0 && r.fifo_ok && r.conservation_ok;
      return ok ? kOk : kFailed;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace netwave::cli
